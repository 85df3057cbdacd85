#pragma once

#include "qconst/cyclotomic.hpp"

#include <cstdint>
#include <optional>
#include <random>

namespace qconst {

/// Prime field F_p (p < 2^62) with a chosen image of zeta_N, i.e. a root of the
/// N-th cyclotomic polynomial mod p.
struct ModField {
  std::uint64_t p = 0;
  int conductor = 1;
  std::uint64_t zeta = 1;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return a + b >= p ? a + b - p : a + b; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p - b; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const
  {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  /// Requires a != 0.
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }
};

/// Random prime p = 1 mod N near 2^61 together with a primitive N-th root of unity.
ModField random_field(int conductor, std::mt19937_64& rng);

/// Image of a coefficient; nullopt when a denominator is divisible by p.
std::optional<std::uint64_t> reduce(const Cyclotomic& c, const ModField& f);

} // namespace qconst
