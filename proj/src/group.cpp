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

#include "qvrf/group.hpp"

#include "qvrf/errors.hpp"
#include "qvrf/sha512.hpp"

namespace qvrf {

using detail::EdwardsPoint;

GroupElement::GroupElement(const EdwardsPoint& p)
    : point_(p), encoding_(p.encode()) {}

GroupElement GroupElement::from_trusted_point(const EdwardsPoint& p) {
  return GroupElement(p);
}

const GroupElement& GroupElement::base_point() {
  static const GroupElement b(EdwardsPoint::base());
  return b;
}

std::optional<GroupElement> GroupElement::decode(ByteView in) {
  auto bytes = to_array<kEncodedSize>(in);
  if (!bytes) return std::nullopt;
  auto p = EdwardsPoint::decode(*bytes);
  if (!p || !detail::is_torsion_free(*p)) return std::nullopt;
  return GroupElement(*p);
}

const ByteArray<GroupElement::kEncodedSize>& GroupElement::encode() const {
  return encoding_;
}

GroupElement operator+(const GroupElement& a, const GroupElement& b) {
  return GroupElement(detail::add(a.point_, b.point_));
}

GroupElement GroupElement::operator-() const {
  return GroupElement(point_.negate());
}

GroupElement operator-(const GroupElement& a, const GroupElement& b) {
  return GroupElement(detail::add(a.point_, b.point_.negate()));
}

GroupElement base_mul(const Scalar& k) {
  return GroupElement::from_trusted_point(detail::mul_base(k));
}

GroupElement point_mul(const GroupElement& p, const Scalar& k) {
  return GroupElement::from_trusted_point(detail::mul(p.point(), k));
}

GroupElement double_mul_sub(const Scalar& s, const GroupElement& p,
                            const Scalar& c, const GroupElement& x) {
  return GroupElement::from_trusted_point(
      detail::mul_double(s, p.point(), -c, x.point()));
}

bool in_prime_subgroup(const EdwardsPoint& p) {
  return detail::is_torsion_free(p);
}

std::optional<GroupElement> hash_to_curve_attempt(ByteView pk_enc,
                                                  ByteView alpha,
                                                  std::uint8_t ctr) {
  if (pk_enc.size() != 32) throw InvalidLength(32, pk_enc.size());
  Sha512 h;
  h.update(pk_enc).update(alpha).update(ctr);
  const Digest512 digest = h.finish();
  ByteArray<32> candidate{};
  std::copy_n(digest.begin(), 32, candidate.begin());
  auto p = EdwardsPoint::decode(candidate);
  if (!p) return std::nullopt;
  EdwardsPoint cleared = detail::mul_by_cofactor(*p);
  if (cleared.is_identity()) return std::nullopt;
  return GroupElement::from_trusted_point(cleared);
}

GroupElement hash_to_curve(ByteView pk_enc, ByteView alpha) {
  for (unsigned ctr = 0; ctr <= 255; ++ctr) {
    if (auto p = hash_to_curve_attempt(pk_enc, alpha,
                                       static_cast<std::uint8_t>(ctr))) {
      return *p;
    }
  }
  throw HashToCurveFailure();
}

}  // namespace qvrf
