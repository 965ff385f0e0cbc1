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

#include "qvrf/sha512.hpp"

#include <openssl/evp.h>

#include <new>
#include <stdexcept>

namespace qvrf {
namespace {

const EVP_MD* sha512_md() {
  // Explicit fetch once; implicit fetching inside EVP_DigestInit_ex costs a
  // provider lookup per hash.
  static EVP_MD* md = EVP_MD_fetch(nullptr, "SHA512", nullptr);
  if (md == nullptr) throw std::runtime_error("SHA512 unavailable in libcrypto");
  return md;
}

}  // namespace

Sha512::Sha512() : ctx_(EVP_MD_CTX_new()) {
  if (ctx_ == nullptr) throw std::bad_alloc();
  if (EVP_DigestInit_ex(ctx_, sha512_md(), nullptr) != 1) {
    EVP_MD_CTX_free(ctx_);
    throw std::runtime_error("EVP_DigestInit_ex failed");
  }
}

Sha512::~Sha512() { EVP_MD_CTX_free(ctx_); }

Sha512& Sha512::update(ByteView data) {
  if (!data.empty()) EVP_DigestUpdate(ctx_, data.data(), data.size());
  return *this;
}

Sha512& Sha512::update(std::uint8_t byte) {
  EVP_DigestUpdate(ctx_, &byte, 1);
  return *this;
}

Digest512 Sha512::finish() {
  Digest512 out{};
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx_, out.data(), &len);
  return out;
}

Digest512 sha512(std::initializer_list<ByteView> parts) {
  Sha512 h;
  for (ByteView p : parts) h.update(p);
  return h.finish();
}

}  // namespace qvrf
