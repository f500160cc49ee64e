#pragma once

// Integral points on the cuspidal cubic y^2 = (p/q) x^3.

#include <cstdint>
#include <vector>

#include "cmcensus/curve.hpp"
#include "cmcensus/int128.hpp"

namespace cmcensus {

/// y^2 = (p/q) x^3 with gcd(|p|, q) = 1, q > 0, p != 0.
struct CuspidalCurve {
  i128 p;
  i128 q;

  static CuspidalCurve make(i128 p, i128 q);
  bool operator==(const CuspidalCurve&) const = default;
};

/// Satisfies q*y^2 == p*x^3.
struct IntegralPoint {
  i128 x;
  i128 y;
  auto operator<=>(const IntegralPoint&) const = default;
};

inline constexpr std::int64_t kBruteCuspidalCeiling = 10'000'000;

/// Coefficient a_j with B^2 = a_j A^3 on the locus j(E_{A,B}) = j:
/// a_j = 4(1728 - j) / (27 j). Rejects j = 0 and j = 1728.
CuspidalCurve aj_coefficient(const JValue& j);

/// Points with |x| <= t via t0 = r0/s0 = y/x: s0^2 | q, p | r0^2, then
/// x = q r0^2 / (p s0^2), y = x r0 / s0. (0,0) is always included.
/// Sorted by (x, y), no duplicates.
std::vector<IntegralPoint> enumerate_integral_points(const CuspidalCurve& c, std::int64_t t);

/// Scans x in [-t, t]. Independent oracle for enumerate_integral_points.
std::vector<IntegralPoint> brute_integral_points(const CuspidalCurve& c, std::int64_t t);

/// 2 σ0(q) sqrt(|p q|) sqrt(t).
double sigma_bound(const CuspidalCurve& c, std::int64_t t);

}  // namespace cmcensus
