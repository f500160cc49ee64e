#include "cmcensus/numeric.hpp"

#include <cmath>
#include <string>

#include <boost/math/constants/constants.hpp>

#include "cmcensus/errors.hpp"

namespace cmcensus {

namespace {

constexpr std::uint32_t kPrimeCacheLimit = 1u << 20;

std::vector<std::uint32_t> sieve_primes(std::uint64_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t m = i * i; m <= limit; m += i) composite[m] = true;
  }
  return primes;
}

std::vector<std::uint32_t> primes_up_to(std::uint64_t limit) {
  if (limit <= kPrimeCacheLimit) {
    auto all = cached_primes();
    std::vector<std::uint32_t> out;
    for (auto p : all) {
      if (p > limit) break;
      out.push_back(p);
    }
    return out;
  }
  return sieve_primes(limit);
}

std::uint64_t abs_u64(std::int64_t n) {
  return n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
}

// true iff r^k > n
bool power_exceeds(std::uint64_t r, int k, std::uint64_t n) {
  u128 acc = 1;
  for (int i = 0; i < k; ++i) {
    acc *= r;
    if (acc > n) return true;
  }
  return false;
}

std::uint64_t pow_u64(std::uint64_t b, int k) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r *= b;
  return r;
}

void require_k(int k) {
  if (k < 2) throw std::invalid_argument("k must be >= 2, got " + std::to_string(k));
}

}  // namespace

std::span<const std::uint32_t> cached_primes() {
  static const std::vector<std::uint32_t> primes = sieve_primes(kPrimeCacheLimit);
  return primes;
}

Factorization factorize(std::int64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be nonzero");
  Factorization f;
  f.value = abs_u64(n);
  std::uint64_t m = f.value;

  auto take = [&](std::uint64_t p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0) f.factors.push_back({p, e});
  };

  bool cache_exhausted = true;
  for (std::uint32_t p : cached_primes()) {
    if (static_cast<u128>(p) * p > m) {
      cache_exhausted = false;
      break;
    }
    take(p);
  }
  if (cache_exhausted && m > 1) {
    // Past the cache: 6k±1 candidates starting just above 2^20.
    std::uint64_t c = (kPrimeCacheLimit / 6) * 6 + 5;
    for (; static_cast<u128>(c) * c <= m; c += 6) {
      take(c);
      if (static_cast<u128>(c + 2) * (c + 2) > m) break;
      take(c + 2);
    }
  }
  if (m > 1) f.factors.push_back({m, 1});
  return f;
}

int mobius(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("mobius: n must be positive");
  int sign = 1;
  for (const auto& pe : factorize(n).factors) {
    if (pe.exponent > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::uint64_t sigma0(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("sigma0: n must be positive");
  std::uint64_t r = 1;
  for (const auto& pe : factorize(n).factors) r *= static_cast<std::uint64_t>(pe.exponent + 1);
  return r;
}

bool is_k_power_free(std::int64_t n, int k) {
  if (n == 0) throw std::invalid_argument("is_k_power_free: n must be nonzero");
  require_k(k);
  for (const auto& pe : factorize(n).factors)
    if (pe.exponent >= k) return false;
  return true;
}

std::uint64_t integer_kth_root(std::uint64_t n, int k) {
  if (k < 1) throw std::invalid_argument("integer_kth_root: k must be >= 1");
  if (k == 1 || n < 2) return n;
  auto r = static_cast<std::uint64_t>(std::pow(static_cast<long double>(n), 1.0L / k));
  while (r > 0 && power_exceeds(r, k, n)) --r;
  while (!power_exceeds(r + 1, k, n)) ++r;
  return r;
}

std::vector<std::int8_t> mobius_table(std::uint64_t n) {
  std::vector<std::int8_t> mu(n + 1, 0);
  if (n == 0) return mu;
  mu[1] = 1;
  std::vector<bool> composite(n + 1, false);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      mu[i] = -1;
    }
    for (std::uint64_t p : primes) {
      const std::uint64_t m = i * p;
      if (m > n) break;
      composite[m] = true;
      if (i % p == 0) {
        mu[m] = 0;
        break;
      }
      mu[m] = static_cast<std::int8_t>(-mu[i]);
    }
  }
  return mu;
}

std::uint64_t qk_mobius(std::uint64_t x, int k) {
  require_k(k);
  const std::uint64_t dmax = integer_kth_root(x, k);
  const auto mu = mobius_table(dmax);
  std::int64_t sum = 0;
  for (std::uint64_t d = 1; d <= dmax; ++d) {
    if (mu[d] == 0) continue;
    sum += mu[d] * static_cast<std::int64_t>(x / pow_u64(d, k));
  }
  return static_cast<std::uint64_t>(sum);
}

std::vector<std::uint8_t> k_free_flags(std::uint64_t x, int k) {
  require_k(k);
  std::vector<std::uint8_t> flags(x + 1, 1);
  flags[0] = 0;
  for (std::uint32_t p : primes_up_to(integer_kth_root(x, k))) {
    const std::uint64_t pk = pow_u64(p, k);
    for (std::uint64_t m = pk; m <= x; m += pk) flags[m] = 0;
  }
  return flags;
}

std::vector<std::uint32_t> qk_sieve_prefix(std::uint64_t x, int k) {
  if (x > kQkSieveCeiling)
    throw CeilingExceeded("qk_sieve: X=" + std::to_string(x) + " above oracle ceiling 1e8");
  const auto flags = k_free_flags(x, k);
  std::vector<std::uint32_t> prefix(x + 1, 0);
  for (std::uint64_t i = 1; i <= x; ++i) prefix[i] = prefix[i - 1] + flags[i];
  return prefix;
}

std::uint64_t qk_sieve(std::uint64_t x, int k) {
  if (x > kQkSieveCeiling)
    throw CeilingExceeded("qk_sieve: X=" + std::to_string(x) + " above oracle ceiling 1e8");
  const auto flags = k_free_flags(x, k);
  std::uint64_t count = 0;
  for (auto f : flags) count += f;
  return count;
}

std::vector<std::int64_t> power_free_list(std::uint64_t x, int k) {
  if (x > kPowerFreeListCeiling)
    throw CeilingExceeded("power_free_list: X=" + std::to_string(x) + " above list ceiling 1e7");
  const auto flags = k_free_flags(x, k);
  std::vector<std::int64_t> out;
  for (std::uint64_t i = x; i >= 1; --i)
    if (flags[i]) out.push_back(-static_cast<std::int64_t>(i));
  for (std::uint64_t i = 1; i <= x; ++i)
    if (flags[i]) out.push_back(static_cast<std::int64_t>(i));
  return out;
}

ZetaConstant zeta_even(int k) {
  const Decimal pi = boost::math::constants::pi<Decimal>();
  switch (k) {
    case 4: return {4, pow(pi, 4) / 90};
    case 6: return {6, pow(pi, 6) / 945};
    case 10: return {10, pow(pi, 10) / 93555};
    default: throw std::invalid_argument("zeta_even: argument must be 4, 6 or 10, got " + std::to_string(k));
  }
}

}  // namespace cmcensus
