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

#include <array>
#include <compare>
#include <cstdint>
#include <optional>

#include "qvrf/bytes.hpp"

namespace qvrf {

// Integer modulo the prime order q = 2^252 + 27742317777372353535851937790883648493
// of the Ed25519 base point. Always held in canonical form [0, q).
class Scalar {
 public:
  static constexpr std::size_t kEncodedSize = 32;

  constexpr Scalar() = default;
  static Scalar from_u64(std::uint64_t v);

  // Little-endian 64-byte input reduced mod q. Throws InvalidLength when the
  // input is not exactly 64 bytes.
  static Scalar from_wide_bytes(ByteView input);

  // Little-endian 32-byte input reduced mod q (any 256-bit value accepted).
  static Scalar from_bytes_mod_order(ByteView input);

  // Rejects encodings >= q and wrong lengths.
  static std::optional<Scalar> from_canonical_bytes(ByteView input);

  ByteArray<kEncodedSize> to_bytes() const;

  bool is_zero() const;
  // Bit i of the canonical value, i in [0, 256).
  unsigned bit(unsigned i) const { return (limbs_[i / 64] >> (i % 64)) & 1; }
  // 4-bit window i of the canonical value, i in [0, 64).
  unsigned nibble(unsigned i) const {
    return (limbs_[i / 16] >> ((i % 16) * 4)) & 0xf;
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar operator-() const;
  friend Scalar scalar_muladd(const Scalar& a, const Scalar& b,
                              const Scalar& c);

  friend bool operator==(const Scalar&, const Scalar&) = default;

 private:
  std::array<std::uint64_t, 4> limbs_{};
};

// (a * b + c) mod q, with a single reduction of the 512-bit intermediate.
Scalar scalar_muladd(const Scalar& a, const Scalar& b, const Scalar& c);

// Free-function form of Scalar::from_wide_bytes.
inline Scalar scalar_from_wide_bytes(ByteView input) {
  return Scalar::from_wide_bytes(input);
}

// Little-endian encoding of q itself (never a valid canonical scalar).
ByteArray<32> group_order_bytes();

}  // namespace qvrf
