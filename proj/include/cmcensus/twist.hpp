#pragma once

// Twist families ET_j: twists E^j_D of a fixed curve per CM j-invariant,
// indexed by n(j)-th-power-free integers D.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cmcensus/curve.hpp"
#include "cmcensus/numeric.hpp"

namespace cmcensus {

/// A fixed curve E^j with j in the CM set and its twist exponents:
/// n = 6, m = 2 for j = 0; n = 4, m = 3 for j = 1728; n = 2, m = 6 otherwise.
struct FixedCurve {
  std::int64_t j;
  Curve curve;
  int n;
  int m;
  i128 height;

  /// Throws std::invalid_argument unless j(curve) == j and j is a CM value.
  static FixedCurve make(std::int64_t j, const Curve& curve);
};

struct TwistClass {
  FixedCurve fixed;
  std::int64_t d;
};

struct EtCounts {
  std::uint64_t x = 0;
  std::array<std::uint64_t, kCmCount> per_j{};  // CmTable order
  std::uint64_t total = 0;

  std::uint64_t count(std::int64_t j, const CmTable& t = cm_table()) const;
};

using FixedCurveSet = std::array<FixedCurve, kCmCount>;

struct Rational {
  std::int64_t num;
  std::int64_t den;
};

inline constexpr std::uint64_t kTwistListCeiling = kPowerFreeListCeiling;

/// The CmTable representatives as fixed curves.
FixedCurveSet default_fixed_curves(const CmTable& t = cm_table());

/// Defaults overridden per j by a CSV with header "j,A,B". Every row is
/// validated (j(A,B) must equal j). Errors name the path and line.
FixedCurveSet load_fixed_curves(const std::string& path, const CmTable& t = cm_table());

/// (D^2 A, D^3 B), (D A, 0) or (0, D B) by j-case.
Curve twist_equation(const FixedCurve& f, std::int64_t d);

/// The unique n-th-power-free integer in r·(Q^x)^n, n even.
std::int64_t nth_power_free_rep(Rational r, int n);

/// |D|^m · h(E^j).
i128 twist_height(const FixedCurve& f, std::int64_t d);

/// Largest N with N^m · h <= X (0 when h > X).
std::uint64_t twist_bound(const FixedCurve& f, std::uint64_t x);

/// 2 · Q_n(N).
std::uint64_t count_ETj(const FixedCurve& f, std::uint64_t x);

/// Materializes every class with height <= X and re-checks its CM order.
/// Throws CeilingExceeded when N > 1e7, VerificationError if a twist loses j.
std::vector<TwistClass> enumerate_ETj(const FixedCurve& f, std::uint64_t x,
                                      const CmTable& t = cm_table());

EtCounts count_ETcm(const FixedCurveSet& fixed, std::uint64_t x, const CmTable& t = cm_table());

/// C(j) = 2/ζ(n) · h^(-1/m).
Decimal c_constant(const FixedCurve& f);

}  // namespace cmcensus
