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

#include "qvrf/detail/edwards.hpp"

#include <vector>

namespace qvrf::detail {
namespace {

const Fe kBaseX{{1738742601995546ULL, 1146398526822698ULL, 2070867633025821ULL,
                 562264141797630ULL, 587772402128613ULL}};
const Fe kBaseY{{1801439850948184ULL, 1351079888211148ULL, 450359962737049ULL,
                 900719925474099ULL, 1801439850948198ULL}};

using Table16 = std::array<EdwardsPoint, 16>;

Table16 multiples(const EdwardsPoint& p) {
  Table16 t;
  t[0] = EdwardsPoint::identity();
  t[1] = p;
  for (int i = 2; i < 16; ++i) t[i] = add(t[i - 1], p);
  return t;
}

// base_table()[i][j] = j * 16^i * B
const std::vector<Table16>& base_table() {
  static const std::vector<Table16> table = [] {
    std::vector<Table16> t;
    t.reserve(64);
    EdwardsPoint p = EdwardsPoint::base();
    for (int i = 0; i < 64; ++i) {
      t.push_back(multiples(p));
      p = add(t.back()[15], p);  // 16 * p
    }
    return t;
  }();
  return table;
}

}  // namespace

const EdwardsPoint& EdwardsPoint::base() {
  static const EdwardsPoint b{kBaseX, kBaseY, Fe::one(), kBaseX * kBaseY};
  return b;
}

std::optional<EdwardsPoint> EdwardsPoint::decode(const ByteArray<32>& in) {
  const bool sign = (in[31] >> 7) & 1;
  Fe y = Fe::from_bytes(in);
  ByteArray<32> canonical = y.to_bytes();
  canonical[31] |= static_cast<std::uint8_t>(sign << 7);
  if (canonical != in) return std::nullopt;  // y >= p

  const Fe yy = square(y);
  const Fe u = yy - Fe::one();
  const Fe v = kCurveD * yy + Fe::one();
  const Fe v3 = square(v) * v;
  const Fe v7 = square(v3) * v;
  Fe x = u * v3 * pow22523(u * v7);

  const Fe vxx = v * square(x);
  if (vxx == u) {
    // x is a root already
  } else if (vxx == -u) {
    x = x * kSqrtMinusOne;
  } else {
    return std::nullopt;
  }
  if (x.is_zero() && sign) return std::nullopt;
  if (x.is_odd() != sign) x = -x;
  return EdwardsPoint{x, y, Fe::one(), x * y};
}

ByteArray<32> EdwardsPoint::encode() const {
  const Fe zinv = invert(Z);
  const Fe x = X * zinv;
  const Fe y = Y * zinv;
  ByteArray<32> out = y.to_bytes();
  out[31] |= static_cast<std::uint8_t>(x.is_odd() << 7);
  return out;
}

EdwardsPoint add(const EdwardsPoint& p, const EdwardsPoint& q) {
  const Fe a = (p.Y - p.X) * (q.Y - q.X);
  const Fe b = (p.Y + p.X) * (q.Y + q.X);
  const Fe c = p.T * kCurveD2 * q.T;
  const Fe zz = p.Z * q.Z;
  const Fe d = zz + zz;
  const Fe e = b - a;
  const Fe f = d - c;
  const Fe g = d + c;
  const Fe h = b + a;
  return {e * f, g * h, f * g, e * h};
}

EdwardsPoint EdwardsPoint::dbl() const {
  const Fe a = square(X);
  const Fe b = square(Y);
  const Fe zz = square(Z);
  const Fe c = zz + zz;
  const Fe h = a + b;
  const Fe e = h - square(X + Y);
  const Fe g = a - b;
  const Fe f = c + g;
  return {e * f, g * h, f * g, e * h};
}

bool EdwardsPoint::is_identity() const {
  return X.is_zero() && (Y - Z).is_zero();
}

bool EdwardsPoint::equals(const EdwardsPoint& o) const {
  return (X * o.Z - o.X * Z).is_zero() && (Y * o.Z - o.Y * Z).is_zero();
}

EdwardsPoint mul(const EdwardsPoint& p, const Scalar& k) {
  const Table16 t = multiples(p);
  EdwardsPoint r = EdwardsPoint::identity();
  for (int i = 63; i >= 0; --i) {
    r = r.dbl().dbl().dbl().dbl();
    r = add(r, t[k.nibble(static_cast<unsigned>(i))]);
  }
  return r;
}

EdwardsPoint mul_base(const Scalar& k) {
  const auto& table = base_table();
  EdwardsPoint r = EdwardsPoint::identity();
  for (unsigned i = 0; i < 64; ++i) r = add(r, table[i][k.nibble(i)]);
  return r;
}

EdwardsPoint mul_double(const Scalar& a, const EdwardsPoint& p,
                        const Scalar& b, const EdwardsPoint& q) {
  const Table16 tp = multiples(p);
  const Table16 tq = multiples(q);
  EdwardsPoint r = EdwardsPoint::identity();
  for (int i = 63; i >= 0; --i) {
    r = r.dbl().dbl().dbl().dbl();
    r = add(r, tp[a.nibble(static_cast<unsigned>(i))]);
    r = add(r, tq[b.nibble(static_cast<unsigned>(i))]);
  }
  return r;
}

EdwardsPoint mul_by_cofactor(const EdwardsPoint& p) { return p.dbl().dbl().dbl(); }

bool is_torsion_free(const EdwardsPoint& p) {
  // q = 2^252 + delta; compute (q - 1) * p + p without reducing q mod q.
  const Scalar q_minus_1 = -Scalar::from_u64(1);
  return add(mul(p, q_minus_1), p).is_identity();
}

}  // namespace qvrf::detail
