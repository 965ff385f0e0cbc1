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

// Arithmetic in GF(2^255 - 19), radix 2^51. Internal to the library.

#include <array>
#include <cstdint>

#include "qvrf/bytes.hpp"

namespace qvrf::detail {

struct Fe {
  std::array<std::uint64_t, 5> v{};

  static constexpr Fe zero() { return Fe{}; }
  static constexpr Fe one() { return Fe{{1, 0, 0, 0, 0}}; }

  // Bit 255 is ignored. The value may be non-canonical (>= p).
  static Fe from_bytes(const ByteArray<32>& in);
  // Fully reduced little-endian encoding.
  ByteArray<32> to_bytes() const;

  bool is_zero() const;
  // Low bit of the canonical value ("negative" in Ed25519 terms).
  bool is_odd() const { return to_bytes()[0] & 1; }
};

Fe operator+(const Fe& a, const Fe& b);
Fe operator-(const Fe& a, const Fe& b);
Fe operator-(const Fe& a);
Fe operator*(const Fe& a, const Fe& b);
Fe square(const Fe& a);
Fe invert(const Fe& a);
// a^((p - 5) / 8)
Fe pow22523(const Fe& a);
bool operator==(const Fe& a, const Fe& b);

// Curve constants.
extern const Fe kCurveD;
extern const Fe kCurveD2;
extern const Fe kSqrtMinusOne;

}  // namespace qvrf::detail
