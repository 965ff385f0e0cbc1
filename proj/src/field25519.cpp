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

#include "qvrf/detail/field25519.hpp"

namespace qvrf::detail {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kMask51 = (u64{1} << 51) - 1;

Fe carry(Fe a) {
  u64 c;
  c = a.v[0] >> 51; a.v[0] &= kMask51; a.v[1] += c;
  c = a.v[1] >> 51; a.v[1] &= kMask51; a.v[2] += c;
  c = a.v[2] >> 51; a.v[2] &= kMask51; a.v[3] += c;
  c = a.v[3] >> 51; a.v[3] &= kMask51; a.v[4] += c;
  c = a.v[4] >> 51; a.v[4] &= kMask51; a.v[0] += c * 19;
  return a;
}

}  // namespace

const Fe kCurveD{{929955233495203ULL, 466365720129213ULL, 1662059464998953ULL,
                  2033849074728123ULL, 1442794654840575ULL}};
const Fe kCurveD2{{1859910466990425ULL, 932731440258426ULL,
                   1072319116312658ULL, 1815898335770999ULL,
                   633789495995903ULL}};
const Fe kSqrtMinusOne{{1718705420411056ULL, 234908883556509ULL,
                        2233514472574048ULL, 2117202627021982ULL,
                        765476049583133ULL}};

Fe Fe::from_bytes(const ByteArray<32>& in) {
  auto load = [&](int off) {
    u64 v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | in[off + i];
    return v;
  };
  Fe r;
  r.v[0] = load(0) & kMask51;
  r.v[1] = (load(6) >> 3) & kMask51;
  r.v[2] = (load(12) >> 6) & kMask51;
  r.v[3] = (load(19) >> 1) & kMask51;
  r.v[4] = (load(24) >> 12) & kMask51;
  return r;
}

ByteArray<32> Fe::to_bytes() const {
  Fe t = carry(carry(*this));
  // t < 2^255 now; subtract p if t >= p by adding 19 and checking overflow.
  u64 q = (t.v[0] + 19) >> 51;
  q = (t.v[1] + q) >> 51;
  q = (t.v[2] + q) >> 51;
  q = (t.v[3] + q) >> 51;
  q = (t.v[4] + q) >> 51;
  t.v[0] += 19 * q;
  u64 c;
  c = t.v[0] >> 51; t.v[0] &= kMask51; t.v[1] += c;
  c = t.v[1] >> 51; t.v[1] &= kMask51; t.v[2] += c;
  c = t.v[2] >> 51; t.v[2] &= kMask51; t.v[3] += c;
  c = t.v[3] >> 51; t.v[3] &= kMask51; t.v[4] += c;
  t.v[4] &= kMask51;

  u64 w[4];
  w[0] = t.v[0] | (t.v[1] << 51);
  w[1] = (t.v[1] >> 13) | (t.v[2] << 38);
  w[2] = (t.v[2] >> 26) | (t.v[3] << 25);
  w[3] = (t.v[3] >> 39) | (t.v[4] << 12);
  ByteArray<32> out{};
  for (int i = 0; i < 32; ++i) {
    out[i] = static_cast<std::uint8_t>(w[i / 8] >> (8 * (i % 8)));
  }
  return out;
}

bool Fe::is_zero() const {
  auto b = to_bytes();
  std::uint8_t acc = 0;
  for (auto x : b) acc |= x;
  return acc == 0;
}

Fe operator+(const Fe& a, const Fe& b) {
  Fe r;
  for (int i = 0; i < 5; ++i) r.v[i] = a.v[i] + b.v[i];
  return carry(r);
}

Fe operator-(const Fe& a, const Fe& b) {
  // Add 4p before subtracting so limbs never go negative for inputs below
  // 2^53 per limb.
  constexpr u64 k4p0 = 0x1fffffffffffb4ULL;
  constexpr u64 k4pi = 0x1ffffffffffffcULL;
  Fe r;
  r.v[0] = a.v[0] + k4p0 - b.v[0];
  for (int i = 1; i < 5; ++i) r.v[i] = a.v[i] + k4pi - b.v[i];
  return carry(r);
}

Fe operator-(const Fe& a) { return Fe::zero() - a; }

Fe operator*(const Fe& a, const Fe& b) {
  const u64 a0 = a.v[0], a1 = a.v[1], a2 = a.v[2], a3 = a.v[3], a4 = a.v[4];
  const u64 b0 = b.v[0], b1 = b.v[1], b2 = b.v[2], b3 = b.v[3], b4 = b.v[4];
  const u64 b1_19 = b1 * 19, b2_19 = b2 * 19, b3_19 = b3 * 19,
            b4_19 = b4 * 19;

  u128 c0 = (u128)a0 * b0 + (u128)a1 * b4_19 + (u128)a2 * b3_19 +
            (u128)a3 * b2_19 + (u128)a4 * b1_19;
  u128 c1 = (u128)a0 * b1 + (u128)a1 * b0 + (u128)a2 * b4_19 +
            (u128)a3 * b3_19 + (u128)a4 * b2_19;
  u128 c2 = (u128)a0 * b2 + (u128)a1 * b1 + (u128)a2 * b0 +
            (u128)a3 * b4_19 + (u128)a4 * b3_19;
  u128 c3 = (u128)a0 * b3 + (u128)a1 * b2 + (u128)a2 * b1 + (u128)a3 * b0 +
            (u128)a4 * b4_19;
  u128 c4 = (u128)a0 * b4 + (u128)a1 * b3 + (u128)a2 * b2 + (u128)a3 * b1 +
            (u128)a4 * b0;

  Fe r;
  c1 += static_cast<u64>(c0 >> 51);
  r.v[0] = static_cast<u64>(c0) & kMask51;
  c2 += static_cast<u64>(c1 >> 51);
  r.v[1] = static_cast<u64>(c1) & kMask51;
  c3 += static_cast<u64>(c2 >> 51);
  r.v[2] = static_cast<u64>(c2) & kMask51;
  c4 += static_cast<u64>(c3 >> 51);
  r.v[3] = static_cast<u64>(c3) & kMask51;
  u64 top = static_cast<u64>(c4 >> 51);
  r.v[4] = static_cast<u64>(c4) & kMask51;
  r.v[0] += top * 19;
  r.v[1] += r.v[0] >> 51;
  r.v[0] &= kMask51;
  return r;
}

Fe square(const Fe& a) { return a * a; }

namespace {

Fe square_n(Fe a, int n) {
  for (int i = 0; i < n; ++i) a = square(a);
  return a;
}

// Returns (a^(2^250 - 1), a^11) for the shared inversion/sqrt chain.
std::pair<Fe, Fe> pow_2_250_minus_1(const Fe& a) {
  Fe t0 = square(a);                 // 2
  Fe t1 = square_n(t0, 2);           // 8
  t1 = a * t1;                       // 9
  Fe a11 = t0 * t1;                  // 11
  Fe t2 = square(a11);               // 22
  t1 = t1 * t2;                      // 2^5 - 1
  t2 = square_n(t1, 5);
  t1 = t2 * t1;                      // 2^10 - 1
  t2 = square_n(t1, 10);
  t2 = t2 * t1;                      // 2^20 - 1
  Fe t3 = square_n(t2, 20);
  t2 = t3 * t2;                      // 2^40 - 1
  t2 = square_n(t2, 10);
  t1 = t2 * t1;                      // 2^50 - 1
  t2 = square_n(t1, 50);
  t2 = t2 * t1;                      // 2^100 - 1
  t3 = square_n(t2, 100);
  t2 = t3 * t2;                      // 2^200 - 1
  t2 = square_n(t2, 50);
  t1 = t2 * t1;                      // 2^250 - 1
  return {t1, a11};
}

}  // namespace

Fe invert(const Fe& a) {
  auto [t, a11] = pow_2_250_minus_1(a);
  t = square_n(t, 5);  // 2^255 - 2^5
  return t * a11;      // 2^255 - 21 = p - 2
}

Fe pow22523(const Fe& a) {
  auto [t, a11] = pow_2_250_minus_1(a);
  t = square_n(t, 2);  // 2^252 - 4
  return t * a;        // 2^252 - 3
}

bool operator==(const Fe& a, const Fe& b) { return a.to_bytes() == b.to_bytes(); }

}  // namespace qvrf::detail
