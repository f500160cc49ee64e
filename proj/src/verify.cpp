#include "cmcensus/verify.hpp"

#include <numeric>
#include <random>
#include <sstream>

#include "cmcensus/cuspidal.hpp"
#include "cmcensus/errors.hpp"
#include "cmcensus/numeric.hpp"
#include "cmcensus/twist.hpp"

namespace cmcensus {

namespace {

template <typename... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

std::string tally_str(const JTally& t) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < kCmCount; ++i) os << (i ? "," : "") << t.counts[i];
  os << "] non_cm=" << t.non_cm << " total=" << t.total;
  return os.str();
}

}  // namespace

CheckResult check_qk_dual(std::uint64_t xmax) {
  for (int k : {2, 3, 4, 6}) {
    const auto prefix = qk_sieve_prefix(xmax, k);
    for (std::uint64_t x = 1; x <= xmax; ++x) {
      const std::uint64_t m = qk_mobius(x, k);
      if (m != prefix[x]) return {"qk-dual", false, cat("k=", k, " X=", x, ": mobius ", m, " sieve ", prefix[x])};
    }
  }
  return {"qk-dual", true, cat("X <= ", xmax, ", k in {2,3,4,6}")};
}

CheckResult check_mobius_inversion(const std::vector<std::uint64_t>& xs, const ScanOptions& opts) {
  for (std::uint64_t x : xs) {
    const auto [lhs, rhs] = mobius_inversion_check(x, opts);
    if (lhs != rhs) return {"mobius-inversion", false, cat("X=", x, ": lhs ", lhs, " rhs ", rhs)};
  }
  return {"mobius-inversion", true, cat(xs.size(), " heights")};
}

CheckResult check_cuspidal_oracle(int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pd(-50, 50);
  std::uniform_int_distribution<int> qd(1, 50);
  int done = 0;
  while (done < samples) {
    const int p = pd(rng);
    const int q = qd(rng);
    if (p == 0 || std::gcd(p, q) != 1) continue;
    ++done;
    const CuspidalCurve c = CuspidalCurve::make(p, q);
    for (std::int64_t t : {10, 100, 1000}) {
      const auto fast = enumerate_integral_points(c, t);
      const auto slow = brute_integral_points(c, t);
      if (fast != slow)
        return {"cuspidal-oracle", false, cat("p=", p, " q=", q, " T=", t, ": ", fast.size(), " vs ", slow.size(), " points")};
      const auto nonzero = static_cast<double>(fast.size() - 1);
      if (nonzero > sigma_bound(c, t))
        return {"cuspidal-oracle", false, cat("p=", p, " q=", q, " T=", t, ": ", nonzero, " points above bound")};
      for (const auto& pt : fast)
        if (checked_mul(c.q, checked_mul(pt.y, pt.y)) != checked_mul(c.p, checked_mul(pt.x, checked_mul(pt.x, pt.x))))
          return {"cuspidal-oracle", false, cat("p=", p, " q=", q, ": point off curve")};
    }
  }
  return {"cuspidal-oracle", true, cat(samples, " curves x 3 bounds")};
}

CheckResult check_twist_laws(std::int64_t dmax) {
  for (const FixedCurve& f : default_fixed_curves()) {
    for (std::int64_t d = -dmax; d <= dmax; ++d) {
      if (d == 0) continue;
      const Curve c = twist_equation(f, d);
      if (twist_height(f, d) != naive_height(c))
        return {"twist-laws", false, cat("j=", f.j, " D=", d, ": height law broken")};
      if (discriminant(c) != 0 && j_invariant(c) != JValue::integer(f.j))
        return {"twist-laws", false, cat("j=", f.j, " D=", d, ": j not preserved")};
    }
  }
  return {"twist-laws", true, cat("13 curves, |D| <= ", dmax)};
}

CheckResult check_scan_vs_reference(std::uint64_t x, const ScanOptions& opts) {
  const FamilyCounts par = enumerate_E(x, opts);
  const FamilyCounts ref = enumerate_E_reference(x);
  if (!(par == ref))
    return {"scan-vs-reference", false,
            cat("X=", x, ": kernel e=", par.e_count, " s=", par.s_count, " / reference e=", ref.e_count, " s=", ref.s_count)};
  return {"scan-vs-reference", true, cat("X=", x, " e=", par.e_count)};
}

CheckResult check_scan_vs_fast(std::uint64_t x, const ScanOptions& opts) {
  const FamilyCounts fc = enumerate_E(x, opts);
  const JTally fast = count_Ecm_fast(x);
  if (fc.tally.counts != fast.counts)
    return {"scan-vs-fast", false, cat("X=", x, ": scan ", tally_str(fc.tally), " fast ", tally_str(fast))};
  if (fc.m_count != fc.e_count + fc.s_count) return {"scan-vs-fast", false, cat("X=", x, ": partition identity")};
  if (fc.s_count != count_singular_S(x)) return {"scan-vs-fast", false, cat("X=", x, ": singular count")};
  return {"scan-vs-fast", true, cat("X=", x, " ecm=", fc.ecm_count)};
}

CheckResult check_et_dual(const std::vector<std::uint64_t>& xs) {
  for (std::uint64_t x : xs) {
    for (const FixedCurve& f : default_fixed_curves()) {
      std::size_t listed;
      try {
        listed = enumerate_ETj(f, x).size();
      } catch (const VerificationError& e) {
        return {"et-dual", false, cat("X=", x, " j=", f.j, ": ", e.what())};
      }
      const std::uint64_t counted = count_ETj(f, x);
      if (listed != counted) return {"et-dual", false, cat("X=", x, " j=", f.j, ": listed ", listed, " counted ", counted)};
    }
  }
  return {"et-dual", true, cat(xs.size(), " heights x 13 curves")};
}

std::vector<CheckResult> run_verify_suite(const ScanOptions& opts, const std::function<void(const CheckResult&)>& on_result) {
  std::vector<CheckResult> out;
  auto add = [&](CheckResult r) {
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  };
  add(check_qk_dual(100'000));
  add(check_mobius_inversion({1'000, 4'095, 10'000, 100'000, 1'000'000}, opts));
  add(check_cuspidal_oracle(200));
  add(check_twist_laws(100));
  add(check_scan_vs_reference(1'000'000, opts));
  add(check_scan_vs_fast(10'000'000, opts));
  add(check_et_dual({1'000'000, 100'000'000}));
  return out;
}

}  // namespace cmcensus
