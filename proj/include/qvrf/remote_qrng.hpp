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

#pragma once

#include <chrono>
#include <cstddef>
#include <string>

#include "qvrf/entropy.hpp"

namespace qvrf {

inline constexpr const char* kQrngUrlEnv = "QVRF_QRNG_URL";

struct RemoteQrngOptions {
  // e.g. "https://qrng.example.org/API/jsonI.php"
  std::string endpoint;
  // Bytes requested per HTTP call when serving larger reads.
  std::size_t batch_length = 1024;
  // Largest `length` the server accepts in one request.
  std::size_t max_per_request = 1024;
  std::chrono::milliseconds timeout{10000};
};

// Client for QRNG-style HTTP services:
//   GET <endpoint>?length=<n>&type=uint8
//   -> {"success": true, "data": [b0, b1, ...]}
// Intended for batch fills (entropy files, pools), not per-operation use.
class RemoteQrngClient final : public EntropySource {
 public:
  explicit RemoteQrngClient(RemoteQrngOptions options);

  // Endpoint from QVRF_QRNG_URL. Throws SourceUnavailable if unset.
  static RemoteQrngClient from_environment();

  // One request for exactly n bytes. Throws std::invalid_argument when n
  // exceeds max_per_request, SourceUnavailable on transport failure or
  // timeout, ProtocolError on a malformed, unsuccessful or short response.
  Bytes fetch(std::size_t n);

  void read_into(std::span<std::uint8_t> out) override;
  SourceKind kind() const override { return SourceKind::remote; }

  const RemoteQrngOptions& options() const { return options_; }

 private:
  RemoteQrngOptions options_;
  std::string base_;  // scheme://host[:port]
  std::string path_;
};

inline Bytes remote_fetch(RemoteQrngClient& client, std::size_t n) {
  return client.fetch(n);
}

}  // namespace qvrf
