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

#include "qvrf/scalar.hpp"

#include <gtest/gtest.h>

#include "oracle/ref_ed25519.hpp"
#include "qvrf/errors.hpp"
#include "test_util.hpp"

namespace qvrf {
namespace {

using ref::Int;
using testing::random_bytes;

Int to_int(const Scalar& s) {
  auto b = s.to_bytes();
  return ref::from_le(b.data(), b.size());
}

Scalar from_int(const Int& v) {
  auto b = ref::to_le<32>(v);
  return *Scalar::from_canonical_bytes(b);
}

TEST(ScalarTest, WideZeroReducesToZero) {
  Bytes zeros(64, 0);
  EXPECT_EQ(Scalar::from_wide_bytes(zeros), Scalar());
  EXPECT_TRUE(Scalar::from_wide_bytes(zeros).is_zero());
}

TEST(ScalarTest, WideOneIsOne) {
  Bytes one(64, 0);
  one[0] = 1;
  EXPECT_EQ(Scalar::from_wide_bytes(one), Scalar::from_u64(1));
}

TEST(ScalarTest, WideOrderPlusFiveIsFive) {
  auto enc = ref::to_le<64>(ref::Q() + 5);
  EXPECT_EQ(Scalar::from_wide_bytes(enc), Scalar::from_u64(5));
}

TEST(ScalarTest, WideRejectsWrongLength) {
  EXPECT_THROW(Scalar::from_wide_bytes(Bytes(63)), InvalidLength);
  EXPECT_THROW(Scalar::from_wide_bytes(Bytes(65)), InvalidLength);
  EXPECT_THROW(Scalar::from_wide_bytes(Bytes{}), InvalidLength);
}

TEST(ScalarTest, WideMatchesBigIntegerOracle) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    Bytes in = random_bytes(rng, 64);
    if (i == 0) std::fill(in.begin(), in.end(), 0xff);  // 2^512 - 1
    Int expect = ref::from_le(in.data(), in.size()) % ref::Q();
    EXPECT_EQ(to_int(Scalar::from_wide_bytes(in)), expect) << i;
  }
}

TEST(ScalarTest, CanonicalDecodeRejectsOrderAndAllOnes) {
  EXPECT_FALSE(Scalar::from_canonical_bytes(group_order_bytes()));
  EXPECT_FALSE(Scalar::from_canonical_bytes(Bytes(32, 0xff)));
  EXPECT_FALSE(Scalar::from_canonical_bytes(Bytes(31, 0)));
  auto q_minus_1 = ref::to_le<32>(ref::Q() - 1);
  ASSERT_TRUE(Scalar::from_canonical_bytes(q_minus_1));
  EXPECT_EQ(Scalar::from_canonical_bytes(q_minus_1)->to_bytes(), q_minus_1);
}

TEST(ScalarTest, EncodeDecodeRoundTrip) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    Scalar s = testing::random_scalar(rng);
    auto enc = s.to_bytes();
    auto back = Scalar::from_canonical_bytes(enc);
    ASSERT_TRUE(back);
    EXPECT_EQ(*back, s);
  }
}

TEST(ScalarTest, MulAddIdentities) {
  std::mt19937_64 rng(3);
  Scalar b = testing::random_scalar(rng);
  Scalar c = testing::random_scalar(rng);
  EXPECT_EQ(scalar_muladd(Scalar(), b, c), c);
  EXPECT_EQ(scalar_muladd(Scalar::from_u64(1), b, Scalar()), b);
}

TEST(ScalarTest, MulAddMatchesBigIntegerOracle) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    Scalar a = testing::random_scalar(rng);
    Scalar b = testing::random_scalar(rng);
    Scalar c = testing::random_scalar(rng);
    if (i == 0) a = b = c = from_int(ref::Q() - 1);
    Int expect = (to_int(a) * to_int(b) + to_int(c)) % ref::Q();
    EXPECT_EQ(to_int(scalar_muladd(a, b, c)), expect) << i;
    EXPECT_EQ(to_int(a * b), (to_int(a) * to_int(b)) % ref::Q());
    EXPECT_EQ(to_int(a + b), (to_int(a) + to_int(b)) % ref::Q());
    EXPECT_EQ(to_int(a - b), ref::mod(to_int(a) - to_int(b), ref::Q()));
  }
}

TEST(ScalarTest, NegationIsAdditiveInverse) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    Scalar a = testing::random_scalar(rng);
    EXPECT_TRUE((a + (-a)).is_zero());
  }
  EXPECT_TRUE((-Scalar()).is_zero());
}

TEST(ScalarTest, BytesModOrderReducesFullRange) {
  Bytes ones(32, 0xff);
  Int expect = ref::from_le(ones.data(), 32) % ref::Q();
  EXPECT_EQ(to_int(Scalar::from_bytes_mod_order(ones)), expect);
}

}  // namespace
}  // namespace qvrf
