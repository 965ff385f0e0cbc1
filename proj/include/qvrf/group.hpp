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

// The prime-order subgroup of Ed25519, written additively: the
// multiplicative B^x of the VRF literature is x*B here, and B^s X^-c is
// s*B - c*X.

#include <optional>

#include "qvrf/bytes.hpp"
#include "qvrf/detail/edwards.hpp"
#include "qvrf/scalar.hpp"

namespace qvrf {

class GroupElement {
 public:
  static constexpr std::size_t kEncodedSize = 32;

  GroupElement() = default;  // identity
  static GroupElement identity() { return {}; }
  static const GroupElement& base_point();

  // Rejects wrong lengths, non-canonical y, off-curve points and points
  // outside the prime-order subgroup.
  static std::optional<GroupElement> decode(ByteView in);
  const ByteArray<kEncodedSize>& encode() const;

  bool is_identity() const { return point_.is_identity(); }

  friend GroupElement operator+(const GroupElement& a, const GroupElement& b);
  friend GroupElement operator-(const GroupElement& a, const GroupElement& b);
  GroupElement operator-() const;
  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.encode() == b.encode();
  }

  const detail::EdwardsPoint& point() const { return point_; }

  // Caller guarantees subgroup membership.
  static GroupElement from_trusted_point(const detail::EdwardsPoint& p);

 private:
  explicit GroupElement(const detail::EdwardsPoint& p);

  detail::EdwardsPoint point_;
  ByteArray<kEncodedSize> encoding_ = identity_encoding();

  static ByteArray<kEncodedSize> identity_encoding() {
    ByteArray<kEncodedSize> e{};
    e[0] = 1;
    return e;
  }
};

inline GroupElement point_add(const GroupElement& a, const GroupElement& b) {
  return a + b;
}

// k*B
GroupElement base_mul(const Scalar& k);
// k*p
GroupElement point_mul(const GroupElement& p, const Scalar& k);
// s*p - c*x
GroupElement double_mul_sub(const Scalar& s, const GroupElement& p,
                            const Scalar& c, const GroupElement& x);

// q*p == identity, for an arbitrary curve point.
bool in_prime_subgroup(const detail::EdwardsPoint& p);
inline bool in_prime_subgroup(const GroupElement& p) {
  return in_prime_subgroup(p.point());
}

// Try-and-increment: for ctr = 0..255, decode the first 32 bytes of
// SHA-512(pk_enc || alpha || ctr) and multiply by the cofactor 8; the first
// non-identity result wins. Throws HashToCurveFailure if every counter
// fails, InvalidLength if pk_enc is not 32 bytes.
GroupElement hash_to_curve(ByteView pk_enc, ByteView alpha);

// One hash_to_curve candidate; nullopt when the digest does not decode or
// clears to the identity.
std::optional<GroupElement> hash_to_curve_attempt(ByteView pk_enc,
                                                  ByteView alpha,
                                                  std::uint8_t ctr);

}  // namespace qvrf
