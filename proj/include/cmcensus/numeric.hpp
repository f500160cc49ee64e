#pragma once

// Exact integer kernel: factorization, multiplicative functions, k-free
// counting (Möbius sum and direct sieve), integer roots, zeta constants.

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "cmcensus/int128.hpp"

namespace cmcensus {

/// 50-digit decimal used for every main-term and constant evaluation.
using Decimal = boost::multiprecision::cpp_dec_float_50;

struct PrimePower {
  std::uint64_t prime;
  int exponent;
  bool operator==(const PrimePower&) const = default;
};

struct Factorization {
  std::uint64_t value = 1;
  std::vector<PrimePower> factors;  // strictly increasing primes
};

struct ZetaConstant {
  int argument;
  Decimal value;
};

// Values above the sieve ceilings are rejected by the oracle paths.
inline constexpr std::uint64_t kQkSieveCeiling = 100'000'000;
inline constexpr std::uint64_t kPowerFreeListCeiling = 10'000'000;

/// Primes up to the cache limit, built once (thread-safe static init).
std::span<const std::uint32_t> cached_primes();

/// Trial division by cached primes, then a 6k±1 wheel past the cache.
/// Accepts the full int64 range except 0 (|INT64_MIN| = 2^63 is allowed).
Factorization factorize(std::int64_t n);

int mobius(std::int64_t n);
std::uint64_t sigma0(std::int64_t n);
bool is_k_power_free(std::int64_t n, int k);

/// floor(n^(1/k)) with the exact certificate r^k <= n < (r+1)^k.
std::uint64_t integer_kth_root(std::uint64_t n, int k);

/// μ(1..n) by a linear sieve.
std::vector<std::int8_t> mobius_table(std::uint64_t n);

/// Q_k(X) = Σ_{d^k <= X} μ(d)·⌊X/d^k⌋. Production path.
std::uint64_t qk_mobius(std::uint64_t x, int k);

/// Q_k(X) by marking multiples of p^k. Independent oracle, X <= 1e8.
std::uint64_t qk_sieve(std::uint64_t x, int k);

/// Q_k(0..X) from a single sieve pass: result[x] == qk_sieve(x, k).
std::vector<std::uint32_t> qk_sieve_prefix(std::uint64_t x, int k);

/// flags[n] == 1 iff n is k-free, for 0 < n <= x (flags[0] is 0).
std::vector<std::uint8_t> k_free_flags(std::uint64_t x, int k);

/// All nonzero k-free d with |d| <= X, ascending. X <= 1e7.
std::vector<std::int64_t> power_free_list(std::uint64_t x, int k);

/// ζ(k) for k in {4, 6, 10} from the closed forms in π.
ZetaConstant zeta_even(int k);

}  // namespace cmcensus
