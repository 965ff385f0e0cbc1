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

#include <initializer_list>

#include "qvrf/bytes.hpp"

struct evp_md_ctx_st;

namespace qvrf {

using Digest512 = ByteArray<64>;

// Incremental SHA-512. The scheme hash for every construction in this
// library.
class Sha512 {
 public:
  Sha512();
  ~Sha512();
  Sha512(const Sha512&) = delete;
  Sha512& operator=(const Sha512&) = delete;

  Sha512& update(ByteView data);
  Sha512& update(std::uint8_t byte);
  Digest512 finish();

 private:
  evp_md_ctx_st* ctx_;
};

Digest512 sha512(std::initializer_list<ByteView> parts);

}  // namespace qvrf
