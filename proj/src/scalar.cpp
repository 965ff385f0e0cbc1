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

#include "qvrf/errors.hpp"

namespace qvrf {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr std::array<u64, 4> kOrder = {
    0x5812631a5cf5d3edULL, 0x14def9dea2f79cd6ULL, 0x0000000000000000ULL,
    0x1000000000000000ULL};

// floor(2^512 / q), for Barrett reduction with base 2^64 and k = 4.
constexpr std::array<u64, 5> kBarrettMu = {
    0xed9ce5a30a2c131bULL, 0x2106215d086329a7ULL, 0xffffffffffffffebULL,
    0xffffffffffffffffULL, 0x000000000000000fULL};

u64 load_le64(const std::uint8_t* p) {
  u64 v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
  return v;
}

// a >= b for equal-length little-endian limb arrays.
template <std::size_t N>
bool geq(const std::array<u64, N>& a, const std::array<u64, N>& b) {
  for (std::size_t i = N; i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return true;
}

// a -= b, returns borrow.
template <std::size_t N>
u64 sub_in_place(std::array<u64, N>& a, const std::array<u64, N>& b) {
  u64 borrow = 0;
  for (std::size_t i = 0; i < N; ++i) {
    u128 d = static_cast<u128>(a[i]) - b[i] - borrow;
    a[i] = static_cast<u64>(d);
    borrow = static_cast<u64>(d >> 64) & 1;
  }
  return borrow;
}

std::array<u64, 5> order5() {
  return {kOrder[0], kOrder[1], kOrder[2], kOrder[3], 0};
}

// x mod q for x < 2^512 (HAC 14.42).
std::array<u64, 4> barrett_reduce(const std::array<u64, 8>& x) {
  // q1 = floor(x / b^3), q2 = q1 * mu, q3 = floor(q2 / b^5).
  std::array<u64, 10> q2{};
  for (int i = 0; i < 5; ++i) {
    u64 carry = 0;
    for (int j = 0; j < 5; ++j) {
      u128 t = static_cast<u128>(x[3 + i]) * kBarrettMu[j] + q2[i + j] + carry;
      q2[i + j] = static_cast<u64>(t);
      carry = static_cast<u64>(t >> 64);
    }
    q2[i + 5] = carry;
  }
  std::array<u64, 5> q3 = {q2[5], q2[6], q2[7], q2[8], q2[9]};

  // r2 = (q3 * q) mod b^5
  std::array<u64, 5> r2{};
  for (int i = 0; i < 5; ++i) {
    u64 carry = 0;
    for (int j = 0; j < 4 && i + j < 5; ++j) {
      u128 t = static_cast<u128>(q3[i]) * kOrder[j] + r2[i + j] + carry;
      r2[i + j] = static_cast<u64>(t);
      carry = static_cast<u64>(t >> 64);
    }
    if (i + 4 < 5) r2[i + 4] += carry;
  }

  std::array<u64, 5> r = {x[0], x[1], x[2], x[3], x[4]};
  sub_in_place(r, r2);  // wraps mod b^5, which is the intended behavior
  const auto q = order5();
  while (geq(r, q)) sub_in_place(r, q);
  return {r[0], r[1], r[2], r[3]};
}

std::array<u64, 8> mul_wide(const std::array<u64, 4>& a,
                            const std::array<u64, 4>& b) {
  std::array<u64, 8> out{};
  for (int i = 0; i < 4; ++i) {
    u64 carry = 0;
    for (int j = 0; j < 4; ++j) {
      u128 t = static_cast<u128>(a[i]) * b[j] + out[i + j] + carry;
      out[i + j] = static_cast<u64>(t);
      carry = static_cast<u64>(t >> 64);
    }
    out[i + 4] = carry;
  }
  return out;
}

}  // namespace

Scalar Scalar::from_u64(std::uint64_t v) {
  Scalar s;
  s.limbs_[0] = v;
  return s;
}

Scalar Scalar::from_wide_bytes(ByteView input) {
  if (input.size() != 64) throw InvalidLength(64, input.size());
  std::array<u64, 8> wide{};
  for (int i = 0; i < 8; ++i) wide[i] = load_le64(input.data() + 8 * i);
  Scalar s;
  s.limbs_ = barrett_reduce(wide);
  return s;
}

Scalar Scalar::from_bytes_mod_order(ByteView input) {
  if (input.size() != 32) throw InvalidLength(32, input.size());
  std::array<u64, 8> wide{};
  for (int i = 0; i < 4; ++i) wide[i] = load_le64(input.data() + 8 * i);
  Scalar s;
  s.limbs_ = barrett_reduce(wide);
  return s;
}

std::optional<Scalar> Scalar::from_canonical_bytes(ByteView input) {
  if (input.size() != 32) return std::nullopt;
  Scalar s;
  for (int i = 0; i < 4; ++i) s.limbs_[i] = load_le64(input.data() + 8 * i);
  if (geq(s.limbs_, kOrder)) return std::nullopt;
  return s;
}

ByteArray<32> Scalar::to_bytes() const {
  ByteArray<32> out{};
  for (int i = 0; i < 32; ++i) {
    out[i] = static_cast<std::uint8_t>(limbs_[i / 8] >> (8 * (i % 8)));
  }
  return out;
}

bool Scalar::is_zero() const {
  return (limbs_[0] | limbs_[1] | limbs_[2] | limbs_[3]) == 0;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  // Both < q < 2^253, so the sum fits in 4 limbs.
  Scalar r;
  u64 carry = 0;
  for (int i = 0; i < 4; ++i) {
    u128 t = static_cast<u128>(a.limbs_[i]) + b.limbs_[i] + carry;
    r.limbs_[i] = static_cast<u64>(t);
    carry = static_cast<u64>(t >> 64);
  }
  if (geq(r.limbs_, kOrder)) sub_in_place(r.limbs_, kOrder);
  return r;
}

Scalar Scalar::operator-() const {
  if (is_zero()) return *this;
  Scalar r;
  r.limbs_ = kOrder;
  sub_in_place(r.limbs_, limbs_);
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar r;
  r.limbs_ = barrett_reduce(mul_wide(a.limbs_, b.limbs_));
  return r;
}

Scalar scalar_muladd(const Scalar& a, const Scalar& b, const Scalar& c) {
  auto wide = mul_wide(a.limbs_, b.limbs_);
  u64 carry = 0;
  for (int i = 0; i < 8; ++i) {
    u128 t = static_cast<u128>(wide[i]) + (i < 4 ? c.limbs_[i] : 0) + carry;
    wide[i] = static_cast<u64>(t);
    carry = static_cast<u64>(t >> 64);
  }
  Scalar r;
  r.limbs_ = barrett_reduce(wide);
  return r;
}

ByteArray<32> group_order_bytes() {
  ByteArray<32> out{};
  for (int i = 0; i < 32; ++i) {
    out[i] = static_cast<std::uint8_t>(kOrder[i / 8] >> (8 * (i % 8)));
  }
  return out;
}

}  // namespace qvrf
