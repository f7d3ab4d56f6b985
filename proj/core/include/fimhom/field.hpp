#pragma once

#include <cstdint>

namespace fimhom {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

/// True iff n is prime (trial division; fine for n < 2^31).
bool is_prime(u64 n);

/// Arithmetic context for the prime field F_p, canonical residues in [0, p).
/// p is restricted below 2^31 so a*b fits in 64-bit intermediates.
struct PrimeField {
  u32 p;

  explicit PrimeField(u32 prime);

  u32 add(u32 a, u32 b) const { return (a + b) % p; }
  u32 sub(u32 a, u32 b) const { return (a + p - b) % p; }
  u32 neg(u32 a) const { return a == 0 ? 0 : p - a; }
  u32 mul(u32 a, u32 b) const { return static_cast<u32>((u64)a * b % p); }
  u32 inv(u32 a) const;
  /// Reduce an arbitrary signed integer to its canonical residue.
  u32 reduce(long long v) const;
};

/// A residue tagged with its modulus; used at API boundaries (coefficients).
struct PrimeScalar {
  u32 value;
  u32 p;

  bool operator==(const PrimeScalar&) const = default;
};

}  // namespace fimhom
