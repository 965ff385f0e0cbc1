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

#include <cstdlib>
#include <stdexcept>

#include "httplib.h"
#include "json.hpp"
#include "qvrf/errors.hpp"

namespace qvrf {
namespace {

std::pair<std::string, std::string> split_url(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw std::invalid_argument("QRNG endpoint must include a scheme: " + url);
  }
  const auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

}  // namespace

RemoteQrngClient::RemoteQrngClient(RemoteQrngOptions options)
    : options_(std::move(options)) {
  if (options_.batch_length == 0 || options_.max_per_request == 0) {
    throw std::invalid_argument("QRNG batch sizes must be positive");
  }
  std::tie(base_, path_) = split_url(options_.endpoint);
}

RemoteQrngClient RemoteQrngClient::from_environment() {
  const char* url = std::getenv(kQrngUrlEnv);
  if (url == nullptr || *url == '\0') {
    throw SourceUnavailable(std::string(kQrngUrlEnv) + " is not set");
  }
  return RemoteQrngClient(RemoteQrngOptions{.endpoint = url});
}

Bytes RemoteQrngClient::fetch(std::size_t n) {
  if (n > options_.max_per_request) {
    throw std::invalid_argument("QRNG request of " + std::to_string(n) +
                                " bytes exceeds per-request maximum " +
                                std::to_string(options_.max_per_request));
  }
  if (n == 0) return {};

  httplib::Client client(base_);
  const auto secs = std::chrono::duration_cast<std::chrono::seconds>(options_.timeout);
  const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(
      options_.timeout - secs);
  client.set_connection_timeout(secs.count(), usecs.count());
  client.set_read_timeout(secs.count(), usecs.count());
  client.set_write_timeout(secs.count(), usecs.count());

  const std::string target = path_ +
                             (path_.find('?') == std::string::npos ? "?" : "&") +
                             "length=" + std::to_string(n) + "&type=uint8";
  auto res = client.Get(target);
  if (!res) {
    throw SourceUnavailable("QRNG request to " + options_.endpoint +
                            " failed: " + httplib::to_string(res.error()));
  }
  if (res->status >= 500) {
    throw SourceUnavailable("QRNG server returned HTTP " +
                            std::to_string(res->status));
  }
  if (res->status != 200) {
    throw ProtocolError("QRNG server returned HTTP " +
                        std::to_string(res->status));
  }

  nlohmann::json body;
  try {
    body = nlohmann::json::parse(res->body);
  } catch (const nlohmann::json::exception& e) {
    throw ProtocolError(std::string("QRNG response is not JSON: ") + e.what());
  }
  if (!body.is_object() || !body.contains("success") ||
      !body["success"].is_boolean()) {
    throw ProtocolError("QRNG response lacks a boolean 'success' field");
  }
  if (!body["success"].get<bool>()) {
    throw ProtocolError("QRNG server reported success=false");
  }
  if (!body.contains("data") || !body["data"].is_array()) {
    throw ProtocolError("QRNG response lacks a 'data' array");
  }
  const auto& data = body["data"];
  if (data.size() != n) {
    throw ProtocolError("QRNG returned " + std::to_string(data.size()) +
                        " bytes, requested " + std::to_string(n));
  }
  Bytes out;
  out.reserve(n);
  for (const auto& v : data) {
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() > 255) {
      throw ProtocolError("QRNG data element is not a uint8");
    }
    out.push_back(static_cast<std::uint8_t>(v.get<std::uint64_t>()));
  }
  return out;
}

void RemoteQrngClient::read_into(std::span<std::uint8_t> out) {
  // Buffer everything first so a failed batch consumes nothing from `out`'s
  // point of view.
  Bytes collected;
  collected.reserve(out.size());
  while (collected.size() < out.size()) {
    const std::size_t want = std::min(
        {out.size() - collected.size(), options_.batch_length,
         options_.max_per_request});
    Bytes batch = fetch(want);
    collected.insert(collected.end(), batch.begin(), batch.end());
  }
  std::copy(collected.begin(), collected.end(), out.begin());
}

}  // namespace qvrf
