#include "cmcensus/twist.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>

#include "cmcensus/errors.hpp"

namespace cmcensus {

namespace {

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::int64_t parse_field(const std::string& text, const std::string& where) {
  try {
    return narrow64(parse_i128(trim(text)));
  } catch (const std::exception& e) {
    throw std::invalid_argument(where + ": " + e.what());
  }
}

}  // namespace

FixedCurve FixedCurve::make(std::int64_t j, const Curve& curve) {
  if (!cm_table().find(j)) throw std::invalid_argument("fixed curve: j=" + std::to_string(j) + " is not a CM j-invariant");
  if (discriminant(curve) == 0) throw std::invalid_argument("fixed curve: singular equation");
  const JValue actual = j_invariant(curve);
  if (actual != JValue::integer(j))
    throw std::invalid_argument("fixed curve (" + std::to_string(curve.a) + "," + std::to_string(curve.b) +
                                ") has j=" + actual.str() + ", expected " + std::to_string(j));
  int n = 2;
  int m = 6;
  if (j == 0) {
    n = 6;
    m = 2;
  } else if (j == 1728) {
    n = 4;
    m = 3;
  }
  return {j, curve, n, m, naive_height(curve)};
}

std::uint64_t EtCounts::count(std::int64_t j, const CmTable& t) const {
  auto i = t.index_of(j);
  if (!i) throw std::out_of_range("EtCounts: j=" + std::to_string(j) + " is not a CM j-invariant");
  return per_j[*i];
}

FixedCurveSet default_fixed_curves(const CmTable& t) {
  FixedCurveSet out;
  for (std::size_t i = 0; i < kCmCount; ++i) out[i] = FixedCurve::make(t.orders()[i].j, t.orders()[i].rep);
  return out;
}

FixedCurveSet load_fixed_curves(const std::string& path, const CmTable& t) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixed-curve file " + path);
  FixedCurveSet out = default_fixed_curves(t);
  std::array<bool, kCmCount> seen{};
  std::string line;
  int lineno = 0;
  bool header_done = false;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const std::string where = path + ":" + std::to_string(lineno);
    std::vector<std::string> cols;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cols.push_back(trim(cell));
    if (!header_done) {
      header_done = true;
      if (cols != std::vector<std::string>{"j", "A", "B"})
        throw std::invalid_argument(where + ": expected header j,A,B");
      continue;
    }
    if (cols.size() != 3) throw std::invalid_argument(where + ": expected 3 columns");
    const std::int64_t j = parse_field(cols[0], where);
    const Curve c{parse_field(cols[1], where), parse_field(cols[2], where)};
    const auto idx = t.index_of(j);
    if (!idx) throw std::invalid_argument(where + ": j=" + std::to_string(j) + " is not a CM j-invariant");
    if (seen[*idx]) throw std::invalid_argument(where + ": duplicate row for j=" + std::to_string(j));
    seen[*idx] = true;
    try {
      out[*idx] = FixedCurve::make(j, c);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(where + ": " + e.what());
    }
  }
  return out;
}

Curve twist_equation(const FixedCurve& f, std::int64_t d) {
  if (d == 0) throw std::invalid_argument("twist_equation: D must be nonzero");
  if (f.j == 0) return {0, checked_mul64(d, f.curve.b)};
  if (f.j == 1728) return {checked_mul64(d, f.curve.a), 0};
  const std::int64_t d2 = checked_mul64(d, d);
  return {checked_mul64(d2, f.curve.a), checked_mul64(checked_mul64(d2, d), f.curve.b)};
}

std::int64_t nth_power_free_rep(Rational r, int n) {
  if (r.num == 0 || r.den == 0) throw std::invalid_argument("nth_power_free_rep: r must be a nonzero rational");
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("nth_power_free_rep: n must be even and >= 2");
  const bool negative = (r.num < 0) != (r.den < 0);
  // r = a/b ~ a·b^(n-1) mod n-th powers; reduce every exponent mod n.
  std::map<std::uint64_t, int> exps;
  for (const auto& pe : factorize(r.num).factors) exps[pe.prime] += pe.exponent;
  for (const auto& pe : factorize(r.den).factors) exps[pe.prime] += (n - 1) * pe.exponent;
  i128 z = 1;
  for (const auto& [p, e] : exps)
    for (int i = 0; i < e % n; ++i) z = checked_mul(z, static_cast<i128>(p));
  return narrow64(negative ? -z : z);
}

i128 twist_height(const FixedCurve& f, std::int64_t d) {
  if (d == 0) throw std::invalid_argument("twist_height: D must be nonzero");
  i128 h = f.height;
  const i128 abs_d = abs128(d);
  for (int i = 0; i < f.m; ++i) h = checked_mul(h, abs_d);
  return h;
}

std::uint64_t twist_bound(const FixedCurve& f, std::uint64_t x) {
  if (f.height > static_cast<i128>(x)) return 0;
  return integer_kth_root(x / static_cast<std::uint64_t>(f.height), f.m);
}

std::uint64_t count_ETj(const FixedCurve& f, std::uint64_t x) { return 2 * qk_mobius(twist_bound(f, x), f.n); }

std::vector<TwistClass> enumerate_ETj(const FixedCurve& f, std::uint64_t x, const CmTable& t) {
  const std::uint64_t bound = twist_bound(f, x);
  if (bound > kTwistListCeiling)
    throw CeilingExceeded("enumerate_ETj: D-bound " + std::to_string(bound) + " above list ceiling 1e7");
  std::vector<TwistClass> out;
  if (bound == 0) return out;
  for (std::int64_t d : power_free_list(bound, f.n)) {
    const Curve twisted = twist_equation(f, d);
    const auto order = cm_order_of(twisted, t);
    if (!order || order->j != f.j)
      throw VerificationError("twist D=" + std::to_string(d) + " of j=" + std::to_string(f.j) + " lost its CM order");
    if (twist_height(f, d) > static_cast<i128>(x))
      throw VerificationError("twist D=" + std::to_string(d) + " exceeds the height bound");
    out.push_back({f, d});
  }
  return out;
}

EtCounts count_ETcm(const FixedCurveSet& fixed, std::uint64_t x, const CmTable& t) {
  EtCounts out;
  out.x = x;
  for (const auto& f : fixed) {
    const auto idx = t.index_of(f.j);
    if (!idx) throw std::invalid_argument("count_ETcm: fixed curve with non-CM j");
    out.per_j[*idx] = count_ETj(f, x);
  }
  for (auto c : out.per_j) out.total += c;
  return out;
}

Decimal c_constant(const FixedCurve& f) {
  const Decimal h(to_string(f.height));
  const Decimal pi = boost::math::constants::pi<Decimal>();
  const Decimal zeta = f.n == 2 ? pi * pi / 6 : zeta_even(f.n).value;
  return Decimal(2) / zeta * pow(Decimal(1) / h, Decimal(1) / f.m);
}

}  // namespace cmcensus
