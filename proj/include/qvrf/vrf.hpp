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

// Ed25519 keys, EdDSA signatures and an ECVRF over the same keys.
//
// Wire formats (all little-endian):
//   public key  32 bytes
//   signature   64 bytes  R || S
//   VRF proof   80 bytes  Z || c || s   (32 + 16 + 32)
//   VRF output  32 bytes  beta

#include <optional>

#include "qvrf/bytes.hpp"
#include "qvrf/entropy.hpp"
#include "qvrf/group.hpp"
#include "qvrf/scalar.hpp"

namespace qvrf {

class PublicKey {
 public:
  static constexpr std::size_t kSize = 32;

  explicit PublicKey(const GroupElement& point) : point_(point) {}
  // nullopt unless `bytes` is a canonical encoding of a prime-order point.
  static std::optional<PublicKey> decode(ByteView bytes);

  const GroupElement& point() const { return point_; }
  const ByteArray<kSize>& encoding() const { return point_.encode(); }

  friend bool operator==(const PublicKey& a, const PublicKey& b) {
    return a.encoding() == b.encoding();
  }

 private:
  GroupElement point_;
};

// Expanded from a 32-byte seed: h = SHA-512(seed); the lower half, clamped
// and reduced mod q, is the secret scalar; the upper half keys EdDSA nonces.
struct SecretKey {
  ByteArray<32> seed{};
  Scalar scalar;
  ByteArray<32> nonce_key{};
  GroupElement public_point;

  static SecretKey from_seed(const ByteArray<32>& seed);
  PublicKey public_key() const { return PublicKey(public_point); }
};

struct KeyPair {
  SecretKey secret;
  PublicKey public_key;
};

KeyPair keypair_from_seed(const ByteArray<32>& seed);

// Draws a 32-byte seed from `source`. Propagates EntropyExhausted.
KeyPair gen_keypair(EntropySource& source);

struct Signature {
  static constexpr std::size_t kSize = 64;

  ByteArray<32> r{};
  ByteArray<32> s{};

  ByteArray<kSize> to_bytes() const;
  // Length check only; canonicality is judged by the verifier.
  static std::optional<Signature> from_bytes(ByteView bytes);
  friend bool operator==(const Signature&, const Signature&) = default;
};

// Deterministic EdDSA (RFC 8032 Ed25519).
Signature sign(const SecretKey& sk, ByteView message);
bool verify_signature(const PublicKey& pk, ByteView message,
                      const Signature& sig);
// Total over arbitrary bytes: any malformed input yields false.
bool verify_signature(ByteView pk, ByteView message, ByteView sig);

struct VrfOutput {
  static constexpr std::size_t kSize = 32;
  ByteArray<kSize> beta{};
  friend bool operator==(const VrfOutput&, const VrfOutput&) = default;
};

struct VrfProof {
  static constexpr std::size_t kSize = 80;
  static constexpr std::size_t kChallengeSize = 16;

  GroupElement z;
  ByteArray<kChallengeSize> c{};
  Scalar s;

  ByteArray<kSize> encode() const;
  // Throws MalformedProof on a wrong length, an invalid Z or s >= q.
  static VrfProof decode(ByteView bytes);
  friend bool operator==(const VrfProof& a, const VrfProof& b) {
    return a.encode() == b.encode();
  }
};

inline ByteArray<VrfProof::kSize> proof_encode(const VrfProof& p) {
  return p.encode();
}
inline VrfProof proof_decode(ByteView bytes) { return VrfProof::decode(bytes); }

struct VrfResult {
  VrfOutput output;
  VrfProof proof;
};

// P = hash_to_curve(pk, alpha), Z = x*P, r from 64 nonce bytes,
// c = H(P || Z || r*B || r*P)[0..16), s = r + c*x, beta = H(Z)[0..32).
// Throws EntropyExhausted if the nonce source runs dry.
VrfResult vrf_prove(const SecretKey& sk, ByteView alpha,
                    EntropySource& nonce_source);
// Same, with the 64 nonce bytes supplied directly.
VrfResult vrf_prove_with_nonce(const SecretKey& sk, ByteView alpha,
                               ByteView nonce64);

// beta for a given Z.
VrfOutput vrf_output_for(const GroupElement& z);

enum class VrfVerdict { valid, invalid };

// Recomputes R_B = s*B - c*X and R_P = s*P - c*Z, then requires the
// challenge to match and beta = H(Z)[0..32).
VrfVerdict vrf_verify(const PublicKey& pk, ByteView alpha,
                      const VrfOutput& beta, const VrfProof& proof);
// Total over arbitrary bytes: malformed encodings are `invalid`.
VrfVerdict vrf_verify(ByteView pk, ByteView alpha, ByteView beta,
                      ByteView proof);

}  // namespace qvrf
