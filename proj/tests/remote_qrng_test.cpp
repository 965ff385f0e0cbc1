// Copyright 2026 The qvrf Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qvrf/remote_qrng.hpp"

#include <gtest/gtest.h>

#include "qvrf/errors.hpp"
#include "stub_qrng_server.hpp"

namespace qvrf {
namespace {

using testing::StubQrngServer;

RemoteQrngClient client_for(const StubQrngServer& server) {
  return RemoteQrngClient(RemoteQrngOptions{
      .endpoint = server.url(), .timeout = std::chrono::milliseconds(2000)});
}

TEST(RemoteQrngTest, StubRoundTrip) {
  StubQrngServer server([](std::size_t) {
    return std::string(R"({"success": true, "data": [7, 7, 7]})");
  });
  auto client = client_for(server);
  EXPECT_EQ(remote_fetch(client, 3), (Bytes{7, 7, 7}));
  EXPECT_EQ(server.last_type(), "uint8");
}

TEST(RemoteQrngTest, SuccessFalseIsProtocolError) {
  StubQrngServer server(
      [](std::size_t) { return std::string(R"({"success": false})"); });
  auto client = client_for(server);
  EXPECT_THROW(client.fetch(3), ProtocolError);
}

TEST(RemoteQrngTest, ShortDataIsProtocolError) {
  StubQrngServer server([](std::size_t) {
    return std::string(R"({"success": true, "data": [1, 2]})");
  });
  auto client = client_for(server);
  EXPECT_THROW(client.fetch(3), ProtocolError);
}

TEST(RemoteQrngTest, MalformedBodiesAreProtocolErrors) {
  for (std::string body : {"not json", R"({"data": [1,2,3]})",
                           R"({"success": true, "data": [1, 2, 300]})",
                           R"({"success": true, "data": "abc"})"}) {
    StubQrngServer server([body](std::size_t) { return body; });
    auto client = client_for(server);
    EXPECT_THROW(client.fetch(3), ProtocolError) << body;
  }
}

TEST(RemoteQrngTest, UnreachableServerIsUnavailable) {
  std::string url;
  {
    StubQrngServer server([](std::size_t n) { return StubQrngServer::ok_body(n, 1); });
    url = server.url();
  }
  RemoteQrngClient client(RemoteQrngOptions{
      .endpoint = url, .timeout = std::chrono::milliseconds(500)});
  EXPECT_THROW(client.fetch(4), SourceUnavailable);
}

TEST(RemoteQrngTest, SlowServerTimesOutAsUnavailable) {
  StubQrngServer server([](std::size_t n) {
    std::this_thread::sleep_for(std::chrono::milliseconds(800));
    return StubQrngServer::ok_body(n, 1);
  });
  RemoteQrngClient client(RemoteQrngOptions{
      .endpoint = server.url(), .timeout = std::chrono::milliseconds(200)});
  EXPECT_THROW(client.fetch(4), SourceUnavailable);
}

TEST(RemoteQrngTest, OversizedRequestRejected) {
  StubQrngServer server([](std::size_t n) { return StubQrngServer::ok_body(n, 1); });
  auto client = client_for(server);
  EXPECT_THROW(client.fetch(1025), std::invalid_argument);
  EXPECT_EQ(server.requests(), 0);
}

TEST(RemoteQrngTest, LargeReadsAreBatched) {
  StubQrngServer server([](std::size_t n) { return StubQrngServer::ok_body(n, 9); });
  RemoteQrngClient client(RemoteQrngOptions{
      .endpoint = server.url(), .batch_length = 100});
  EXPECT_EQ(client.read_bytes(250), Bytes(250, 9));
  EXPECT_EQ(server.requests(), 3);
  EXPECT_EQ(client.kind(), SourceKind::remote);
}

TEST(RemoteQrngTest, PoolOverRemoteClient) {
  StubQrngServer server([](std::size_t n) { return StubQrngServer::ok_body(n, 3); });
  EntropyPool pool(std::make_unique<RemoteQrngClient>(RemoteQrngOptions{
                       .endpoint = server.url(), .batch_length = 256}),
                   {.block_size = 512, .low_water_mark = 0});
  EXPECT_EQ(pool.read_bytes(32), Bytes(32, 3));
  EXPECT_EQ(server.requests(), 2);
  EXPECT_EQ(pool.read_bytes(480), Bytes(480, 3));
  EXPECT_EQ(server.requests(), 2);
}

TEST(RemoteQrngTest, EndpointFromEnvironment) {
  ::unsetenv(kQrngUrlEnv);
  EXPECT_THROW(RemoteQrngClient::from_environment(), SourceUnavailable);
  ::setenv(kQrngUrlEnv, "http://127.0.0.1:9/api", 1);
  EXPECT_EQ(RemoteQrngClient::from_environment().options().endpoint,
            "http://127.0.0.1:9/api");
  ::unsetenv(kQrngUrlEnv);
}

}  // namespace
}  // namespace qvrf
