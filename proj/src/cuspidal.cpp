#include "cmcensus/cuspidal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cmcensus/errors.hpp"
#include "cmcensus/numeric.hpp"

namespace cmcensus {

namespace {

i128 isqrt128(i128 v) {
  if (v < 0) throw std::invalid_argument("isqrt of negative value");
  auto r = static_cast<i128>(std::sqrt(static_cast<long double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

void check_point(const CuspidalCurve& c, const IntegralPoint& pt) {
  const i128 lhs = checked_mul(c.q, checked_mul(pt.y, pt.y));
  const i128 rhs = checked_mul(c.p, checked_mul(pt.x, checked_mul(pt.x, pt.x)));
  if (lhs != rhs)
    throw VerificationError("cuspidal point (" + to_string(pt.x) + "," + to_string(pt.y) +
                            ") violates q*y^2 = p*x^3");
}

void require_t(std::int64_t t) {
  if (t < 1) throw std::invalid_argument("cuspidal enumeration needs T >= 1");
}

}  // namespace

CuspidalCurve CuspidalCurve::make(i128 p, i128 q) {
  if (p == 0) throw std::invalid_argument("cuspidal curve: p must be nonzero");
  if (q == 0) throw std::invalid_argument("cuspidal curve: q must be nonzero");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  const i128 g = gcd128(p, q);
  return {p / g, q / g};
}

CuspidalCurve aj_coefficient(const JValue& j) {
  if (j.num == 0) throw std::invalid_argument("aj_coefficient: j = 0 has no cuspidal branch");
  const i128 p = checked_mul(4, checked_add(checked_mul(1728, j.den), -j.num));
  if (p == 0) throw std::invalid_argument("aj_coefficient: j = 1728 has no cuspidal branch");
  return CuspidalCurve::make(p, checked_mul(27, j.num));
}

std::vector<IntegralPoint> enumerate_integral_points(const CuspidalCurve& c, std::int64_t t) {
  require_t(t);
  std::vector<IntegralPoint> out{{0, 0}};

  // s0 ranges over divisors of q whose square divides q.
  std::vector<i128> s_values{1};
  for (const auto& pe : factorize(narrow64(c.q)).factors) {
    const std::size_t n = s_values.size();
    i128 pk = 1;
    for (int e = 1; e <= pe.exponent / 2; ++e) {
      pk *= static_cast<i128>(pe.prime);
      for (std::size_t i = 0; i < n; ++i) s_values.push_back(s_values[i] * pk);
    }
  }

  // p | r0^2 forces r0 to be a multiple of p' = Π ℓ^ceil(e/2).
  i128 p_root = 1;
  for (const auto& pe : factorize(narrow64(abs128(c.p))).factors)
    for (int e = 0; e < (pe.exponent + 1) / 2; ++e) p_root *= static_cast<i128>(pe.prime);
  const i128 p_root_sq_over_p = checked_mul(p_root, p_root) / abs128(c.p);
  const i128 sign = c.p < 0 ? -1 : 1;

  for (const i128 s0 : s_values) {
    // |x| = (q / s0^2) * (p'^2 / |p|) * k^2 for r0 = ±p' k.
    const i128 base = checked_mul(c.q / (s0 * s0), p_root_sq_over_p);
    if (base > t) continue;
    for (i128 k = 1;; ++k) {
      const i128 x_abs = base * k * k;
      if (x_abs > t) break;
      const i128 r0 = p_root * k;
      if (gcd128(r0, s0) != 1) continue;
      if (x_abs % s0 != 0) continue;
      const i128 x = sign * x_abs;
      const i128 y = checked_mul(x / s0, r0);
      out.push_back({x, y});
      out.push_back({x, -y});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (const auto& pt : out) check_point(c, pt);
  return out;
}

std::vector<IntegralPoint> brute_integral_points(const CuspidalCurve& c, std::int64_t t) {
  require_t(t);
  if (t > kBruteCuspidalCeiling)
    throw CeilingExceeded("brute_integral_points: T=" + std::to_string(t) + " above oracle ceiling 1e7");
  std::vector<IntegralPoint> out;
  for (i128 x = -t; x <= t; ++x) {
    i128 v = checked_mul(c.p, x * x * x);
    if (v % c.q != 0) continue;
    v /= c.q;
    if (v < 0) continue;
    const i128 r = isqrt128(v);
    if (r * r != v) continue;
    if (r == 0) {
      out.push_back({x, 0});
    } else {
      out.push_back({x, -r});
      out.push_back({x, r});
    }
  }
  return out;
}

double sigma_bound(const CuspidalCurve& c, std::int64_t t) {
  require_t(t);
  const double s0 = static_cast<double>(sigma0(narrow64(c.q)));
  const double pq = static_cast<double>(abs128(c.p)) * static_cast<double>(c.q);
  return 2.0 * s0 * std::sqrt(pq) * std::sqrt(static_cast<double>(t));
}

}  // namespace cmcensus
