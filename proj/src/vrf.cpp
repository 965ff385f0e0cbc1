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

#include "qvrf/vrf.hpp"

#include <algorithm>

#include "qvrf/errors.hpp"
#include "qvrf/sha512.hpp"

namespace qvrf {
namespace {

ByteArray<VrfProof::kChallengeSize> challenge(const GroupElement& p,
                                              const GroupElement& z,
                                              const GroupElement& rb,
                                              const GroupElement& rp) {
  const Digest512 h = sha512({p.encode(), z.encode(), rb.encode(), rp.encode()});
  ByteArray<VrfProof::kChallengeSize> c{};
  std::copy_n(h.begin(), c.size(), c.begin());
  return c;
}

Scalar challenge_scalar(const ByteArray<VrfProof::kChallengeSize>& c) {
  ByteArray<32> wide{};
  std::copy(c.begin(), c.end(), wide.begin());
  return *Scalar::from_canonical_bytes(wide);  // < 2^128 < q
}

}  // namespace

std::optional<PublicKey> PublicKey::decode(ByteView bytes) {
  auto p = GroupElement::decode(bytes);
  if (!p) return std::nullopt;
  return PublicKey(*p);
}

SecretKey SecretKey::from_seed(const ByteArray<32>& seed) {
  const Digest512 h = sha512({seed});
  ByteArray<32> lower{};
  std::copy_n(h.begin(), 32, lower.begin());
  lower[0] &= 0xf8;
  lower[31] &= 0x7f;
  lower[31] |= 0x40;

  SecretKey sk;
  sk.seed = seed;
  sk.scalar = Scalar::from_bytes_mod_order(lower);
  std::copy_n(h.begin() + 32, 32, sk.nonce_key.begin());
  sk.public_point = base_mul(sk.scalar);
  return sk;
}

KeyPair keypair_from_seed(const ByteArray<32>& seed) {
  SecretKey sk = SecretKey::from_seed(seed);
  PublicKey pk = sk.public_key();
  return KeyPair{std::move(sk), pk};
}

KeyPair gen_keypair(EntropySource& source) {
  return keypair_from_seed(read_seed(source));
}

ByteArray<Signature::kSize> Signature::to_bytes() const {
  ByteArray<kSize> out{};
  std::copy(r.begin(), r.end(), out.begin());
  std::copy(s.begin(), s.end(), out.begin() + 32);
  return out;
}

std::optional<Signature> Signature::from_bytes(ByteView bytes) {
  if (bytes.size() != kSize) return std::nullopt;
  Signature sig;
  std::copy_n(bytes.begin(), 32, sig.r.begin());
  std::copy_n(bytes.begin() + 32, 32, sig.s.begin());
  return sig;
}

Signature sign(const SecretKey& sk, ByteView message) {
  const Scalar r = Scalar::from_wide_bytes(sha512({sk.nonce_key, message}));
  const GroupElement big_r = base_mul(r);
  const Scalar k = Scalar::from_wide_bytes(
      sha512({big_r.encode(), sk.public_point.encode(), message}));
  Signature sig;
  sig.r = big_r.encode();
  sig.s = scalar_muladd(k, sk.scalar, r).to_bytes();
  return sig;
}

bool verify_signature(const PublicKey& pk, ByteView message,
                      const Signature& sig) {
  auto s = Scalar::from_canonical_bytes(sig.s);
  if (!s) return false;
  const Scalar k =
      Scalar::from_wide_bytes(sha512({sig.r, pk.encoding(), message}));
  // S*B - k*pk must re-encode to exactly R; our encoding is canonical, so a
  // non-canonical R never matches.
  const GroupElement expect_r =
      double_mul_sub(*s, GroupElement::base_point(), k, pk.point());
  return expect_r.encode() == sig.r;
}

bool verify_signature(ByteView pk, ByteView message, ByteView sig) {
  auto key = PublicKey::decode(pk);
  auto parsed = Signature::from_bytes(sig);
  if (!key || !parsed) return false;
  return verify_signature(*key, message, *parsed);
}

ByteArray<VrfProof::kSize> VrfProof::encode() const {
  ByteArray<kSize> out{};
  const auto& ze = z.encode();
  const auto se = s.to_bytes();
  std::copy(ze.begin(), ze.end(), out.begin());
  std::copy(c.begin(), c.end(), out.begin() + 32);
  std::copy(se.begin(), se.end(), out.begin() + 48);
  return out;
}

VrfProof VrfProof::decode(ByteView bytes) {
  if (bytes.size() != kSize) {
    throw MalformedProof("proof must be 80 bytes, got " +
                         std::to_string(bytes.size()));
  }
  auto z = GroupElement::decode(bytes.first(32));
  if (!z) throw MalformedProof("proof Z is not a valid group element");
  auto s = Scalar::from_canonical_bytes(bytes.subspan(48, 32));
  if (!s) throw MalformedProof("proof s is not a canonical scalar");
  VrfProof p;
  p.z = *z;
  std::copy_n(bytes.begin() + 32, kChallengeSize, p.c.begin());
  p.s = *s;
  return p;
}

VrfOutput vrf_output_for(const GroupElement& z) {
  const Digest512 h = sha512({z.encode()});
  VrfOutput out;
  std::copy_n(h.begin(), out.beta.size(), out.beta.begin());
  return out;
}

VrfResult vrf_prove_with_nonce(const SecretKey& sk, ByteView alpha,
                               ByteView nonce64) {
  const GroupElement p = hash_to_curve(sk.public_point.encode(), alpha);
  const GroupElement z = point_mul(p, sk.scalar);
  const Scalar r = Scalar::from_wide_bytes(nonce64);
  const GroupElement rb = base_mul(r);
  const GroupElement rp = point_mul(p, r);

  VrfResult out;
  out.proof.z = z;
  out.proof.c = challenge(p, z, rb, rp);
  out.proof.s = scalar_muladd(sk.scalar, challenge_scalar(out.proof.c), r);
  out.output = vrf_output_for(z);
  return out;
}

VrfResult vrf_prove(const SecretKey& sk, ByteView alpha,
                    EntropySource& nonce_source) {
  ByteArray<64> nonce{};
  nonce_source.read_into(nonce);
  return vrf_prove_with_nonce(sk, alpha, nonce);
}

VrfVerdict vrf_verify(const PublicKey& pk, ByteView alpha,
                      const VrfOutput& beta, const VrfProof& proof) {
  GroupElement p;
  try {
    p = hash_to_curve(pk.encoding(), alpha);
  } catch (const HashToCurveFailure&) {
    return VrfVerdict::invalid;
  }
  const Scalar c = challenge_scalar(proof.c);
  const GroupElement rb =
      double_mul_sub(proof.s, GroupElement::base_point(), c, pk.point());
  const GroupElement rp = double_mul_sub(proof.s, p, c, proof.z);
  if (challenge(p, proof.z, rb, rp) != proof.c) return VrfVerdict::invalid;
  if (vrf_output_for(proof.z) != beta) return VrfVerdict::invalid;
  return VrfVerdict::valid;
}

VrfVerdict vrf_verify(ByteView pk, ByteView alpha, ByteView beta,
                      ByteView proof) {
  auto key = PublicKey::decode(pk);
  auto out = to_array<VrfOutput::kSize>(beta);
  if (!key || !out) return VrfVerdict::invalid;
  try {
    return vrf_verify(*key, alpha, VrfOutput{*out}, VrfProof::decode(proof));
  } catch (const MalformedProof&) {
    return VrfVerdict::invalid;
  }
}

}  // namespace qvrf
