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

// Points on -x^2 + y^2 = 1 + d x^2 y^2 in extended coordinates
// (X : Y : Z : T), x = X/Z, y = Y/Z, xy = T/Z. Internal to the library; any
// curve point is representable here, including small-order ones.

#include <optional>

#include "qvrf/detail/field25519.hpp"
#include "qvrf/scalar.hpp"

namespace qvrf::detail {

struct EdwardsPoint {
  Fe X = Fe::zero();
  Fe Y = Fe::one();
  Fe Z = Fe::one();
  Fe T = Fe::zero();

  static EdwardsPoint identity() { return {}; }
  static const EdwardsPoint& base();

  // RFC 8032 decoding: rejects y >= p, points off the curve, and x = 0 with
  // the sign bit set. No subgroup check.
  static std::optional<EdwardsPoint> decode(const ByteArray<32>& in);
  ByteArray<32> encode() const;

  EdwardsPoint dbl() const;
  EdwardsPoint negate() const { return {-X, Y, Z, -T}; }
  bool is_identity() const;
  bool equals(const EdwardsPoint& other) const;
};

EdwardsPoint add(const EdwardsPoint& p, const EdwardsPoint& q);

// Variable-base 4-bit fixed window.
EdwardsPoint mul(const EdwardsPoint& p, const Scalar& k);
// Fixed-base comb over a lazily built 64 x 16 table of multiples of B.
EdwardsPoint mul_base(const Scalar& k);
// a*p + b*q, interleaved.
EdwardsPoint mul_double(const Scalar& a, const EdwardsPoint& p,
                        const Scalar& b, const EdwardsPoint& q);
EdwardsPoint mul_by_cofactor(const EdwardsPoint& p);
// q * p == identity
bool is_torsion_free(const EdwardsPoint& p);

}  // namespace qvrf::detail
