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

#include <gtest/gtest.h>

#include "oracle/ref_ed25519.hpp"
#include "qvrf/errors.hpp"
#include "test_util.hpp"

namespace qvrf {
namespace {

using ref::Int;
using testing::random_scalar;

Int to_int(const Scalar& s) {
  auto b = s.to_bytes();
  return ref::from_le(b.data(), b.size());
}

Scalar from_int(const Int& v) {
  return *Scalar::from_canonical_bytes(ref::to_le<32>(ref::mod(v, ref::Q())));
}

ByteArray<32> ref_encode(const ref::Point& p) { return ref::encode(p); }

TEST(GroupTest, BaseMulZeroIsIdentity) {
  EXPECT_TRUE(base_mul(Scalar()).is_identity());
  EXPECT_EQ(base_mul(Scalar()), GroupElement::identity());
}

TEST(GroupTest, BaseMulOneIsStandardBasePoint) {
  // Standard Ed25519 base point encoding; also rederived by the oracle.
  auto expect = from_hex(
      "5866666666666666666666666666666666666666666666666666666666666666");
  ASSERT_TRUE(expect);
  auto enc = base_mul(Scalar::from_u64(1)).encode();
  EXPECT_EQ(Bytes(enc.begin(), enc.end()), *expect);
  EXPECT_EQ(enc, ref_encode(ref::base()));
  EXPECT_EQ(GroupElement::base_point().encode(), enc);
}

TEST(GroupTest, BaseMulTwoIsDoubling) {
  const auto& b = GroupElement::base_point();
  EXPECT_EQ(base_mul(Scalar::from_u64(2)), point_add(b, b));
  EXPECT_EQ(base_mul(Scalar::from_u64(2)).encode(),
            ref_encode(ref::add(ref::base(), ref::base())));
}

TEST(GroupTest, BaseMulMatchesOracle) {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 8; ++i) {
    Scalar k = random_scalar(rng);
    EXPECT_EQ(base_mul(k).encode(), ref_encode(ref::mul(ref::base(), to_int(k))));
  }
}

TEST(GroupTest, PointMulIdentities) {
  std::mt19937_64 rng(11);
  GroupElement p = base_mul(random_scalar(rng));
  EXPECT_EQ(point_mul(p, Scalar::from_u64(1)), p);
  EXPECT_TRUE(point_mul(GroupElement::identity(), random_scalar(rng)).is_identity());
  EXPECT_TRUE(point_mul(p, Scalar()).is_identity());
}

TEST(GroupTest, PointMulOfBaseMatchesBaseMul) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 50; ++i) {
    Scalar k = random_scalar(rng);
    EXPECT_EQ(point_mul(GroupElement::base_point(), k), base_mul(k));
  }
}

TEST(GroupTest, DoubleMulSubExamples) {
  std::mt19937_64 rng(13);
  Scalar s = random_scalar(rng);
  GroupElement x = base_mul(random_scalar(rng));
  const auto& b = GroupElement::base_point();
  EXPECT_EQ(double_mul_sub(s, b, Scalar(), x), base_mul(s));
  EXPECT_TRUE(double_mul_sub(Scalar(), b, Scalar(), x).is_identity());
}

TEST(GroupTest, DoubleMulSubAlgebraAgainstScalarOracle) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 100; ++i) {
    Scalar s = random_scalar(rng), c = random_scalar(rng), t = random_scalar(rng);
    Scalar expect = from_int(to_int(s) - to_int(c) * to_int(t));
    EXPECT_EQ(double_mul_sub(s, GroupElement::base_point(), c, base_mul(t)),
              base_mul(expect))
        << i;
  }
}

TEST(GroupTest, BaseMulIsHomomorphic) {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 100; ++i) {
    Scalar a = random_scalar(rng), b = random_scalar(rng);
    EXPECT_EQ(base_mul(a + b), point_add(base_mul(a), base_mul(b))) << i;
  }
}

TEST(GroupTest, DecodeEncodeRoundTrip) {
  std::mt19937_64 rng(16);
  for (int i = 0; i < 50; ++i) {
    GroupElement p = base_mul(random_scalar(rng));
    auto back = GroupElement::decode(p.encode());
    ASSERT_TRUE(back);
    EXPECT_EQ(*back, p);
    EXPECT_TRUE(back->point().equals(p.point()));
  }
  auto id = GroupElement::decode(GroupElement::identity().encode());
  ASSERT_TRUE(id);
  EXPECT_TRUE(id->is_identity());
}

TEST(GroupTest, DecodeRejectsAllOnes) {
  EXPECT_FALSE(GroupElement::decode(Bytes(32, 0xff)));
}

TEST(GroupTest, DecodeRejectsWrongLength) {
  auto enc = GroupElement::base_point().encode();
  EXPECT_FALSE(GroupElement::decode(ByteView(enc).first(31)));
}

TEST(GroupTest, DecodeRejectsOffCurveAndAgreesWithOracle) {
  int rejected = 0;
  for (int y = 2; y < 60; ++y) {
    auto enc = ref::to_le<32>(y);
    bool oracle_ok = ref::decode(enc).has_value();
    auto raw = detail::EdwardsPoint::decode(enc);
    EXPECT_EQ(raw.has_value(), oracle_ok) << "y=" << y;
    if (raw) {
      EXPECT_EQ(raw->encode(), ref::encode(*ref::decode(enc)));
    }
    if (!oracle_ok) {
      ++rejected;
      EXPECT_FALSE(GroupElement::decode(enc));
    }
  }
  EXPECT_GT(rejected, 0);
}

TEST(GroupTest, DecodeRejectsNonCanonicalY) {
  // y = p + 1 encodes the same field element as y = 1 but is non-canonical.
  auto enc = ref::to_le<32>(ref::P() + 1);
  EXPECT_FALSE(detail::EdwardsPoint::decode(enc));
  EXPECT_FALSE(GroupElement::decode(enc));
}

TEST(GroupTest, DecodeRejectsSmallOrderPoint) {
  // (0, -1) has order 2: on the curve but outside the prime-order subgroup.
  auto enc = ref::to_le<32>(ref::P() - 1);
  auto raw = detail::EdwardsPoint::decode(enc);
  ASSERT_TRUE(raw);
  EXPECT_FALSE(in_prime_subgroup(*raw));
  EXPECT_FALSE(GroupElement::decode(enc));
}

TEST(GroupTest, HashToCurveEmptyMessageInSubgroup) {
  auto pk = base_mul(Scalar::from_u64(7)).encode();
  GroupElement p = hash_to_curve(pk, {});
  EXPECT_TRUE(in_prime_subgroup(p));
  EXPECT_FALSE(p.is_identity());
}

TEST(GroupTest, HashToCurveIsDeterministicAndMatchesOracle) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 4; ++i) {
    auto pk = base_mul(random_scalar(rng)).encode();
    Bytes alpha = testing::random_bytes(rng, static_cast<std::size_t>(i * 7));
    GroupElement a = hash_to_curve(pk, alpha);
    GroupElement b = hash_to_curve(pk, alpha);
    EXPECT_EQ(a.encode(), b.encode());
    auto expect = ref::hash_to_curve(pk, alpha);
    EXPECT_EQ(a.encode(), ref::encode(expect));
  }
}

TEST(GroupTest, HashToCurveAdvancesCounterWhenFirstCandidateFails) {
  auto pk = base_mul(Scalar::from_u64(1234)).encode();
  // Brute-force short messages until the ctr = 0 digest fails to decode.
  for (int m = 0; m < 256; ++m) {
    Bytes alpha = {static_cast<std::uint8_t>(m)};
    if (hash_to_curve_attempt(pk, alpha, 0)) continue;
    int used = -1;
    auto expect = ref::hash_to_curve(pk, alpha, &used);
    EXPECT_GE(used, 1);
    GroupElement got = hash_to_curve(pk, alpha);
    EXPECT_EQ(got.encode(), ref::encode(expect));
    EXPECT_TRUE(in_prime_subgroup(got));
    return;
  }
  FAIL() << "no message with a failing first candidate found";
}

TEST(GroupTest, HashToCurveOutputsLieInPrimeSubgroup) {
  std::mt19937_64 rng(18);
  auto pk = base_mul(random_scalar(rng)).encode();
  for (int i = 0; i < 50; ++i) {
    Bytes alpha = testing::random_bytes(rng, 16);
    EXPECT_TRUE(in_prime_subgroup(hash_to_curve(pk, alpha)));
  }
}

TEST(GroupTest, HashToCurveRejectsShortKey) {
  Bytes pk(31, 0);
  EXPECT_THROW(hash_to_curve(pk, {}), InvalidLength);
}

TEST(GroupTest, NegationAndSubtraction) {
  std::mt19937_64 rng(19);
  GroupElement p = base_mul(random_scalar(rng));
  EXPECT_TRUE((p + (-p)).is_identity());
  EXPECT_TRUE((p - p).is_identity());
}

}  // namespace
}  // namespace qvrf
