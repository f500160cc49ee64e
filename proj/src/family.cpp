#include "cmcensus/family.hpp"

#include <stdexcept>

#include "cmcensus/cuspidal.hpp"
#include "cmcensus/numeric.hpp"

namespace cmcensus {

std::uint64_t JTally::cm_total() const {
  std::uint64_t s = 0;
  for (auto c : counts) s += c;
  return s;
}

std::uint64_t JTally::count(std::int64_t j, const CmTable& t) const {
  auto i = t.index_of(j);
  if (!i) throw std::out_of_range("JTally: j=" + std::to_string(j) + " is not a CM j-invariant");
  return counts[*i];
}

JTally& JTally::operator+=(const JTally& other) {
  for (std::size_t i = 0; i < kCmCount; ++i) counts[i] += other.counts[i];
  non_cm += other.non_cm;
  total += other.total;
  return *this;
}

FamilyCounts& FamilyCounts::operator+=(const FamilyCounts& other) {
  d_prime += other.d_prime;
  m_count += other.m_count;
  s_count += other.s_count;
  e_count += other.e_count;
  ecm_count += other.ecm_count;
  tally += other.tally;
  return *this;
}

std::int64_t a_bound(std::uint64_t x) { return static_cast<std::int64_t>(integer_kth_root(x / 4, 3)); }

std::int64_t b_bound(std::uint64_t x) { return static_cast<std::int64_t>(integer_kth_root(x / 27, 2)); }

std::uint64_t count_box_Dprime(std::uint64_t x) {
  const auto na = static_cast<std::uint64_t>(2 * a_bound(x) + 1);
  const auto nb = static_cast<std::uint64_t>(2 * b_bound(x) + 1);
  return na * nb - 1;
}

Curve star_twist(std::int64_t d, const Curve& c) {
  if (d == 0) throw std::invalid_argument("star_twist: d must be nonzero");
  const std::int64_t d2 = checked_mul64(d, d);
  const std::int64_t d4 = checked_mul64(d2, d2);
  const std::int64_t d6 = checked_mul64(d4, d2);
  return {checked_mul64(d4, c.a), checked_mul64(d6, c.b)};
}

FamilyCounts enumerate_E_reference(std::uint64_t x) {
  const CmTable& table = cm_table();
  const std::int64_t amax = a_bound(x);
  const std::int64_t bmax = b_bound(x);
  FamilyCounts fc;
  fc.x = x;
  for (std::int64_t a = -amax; a <= amax; ++a) {
    for (std::int64_t b = -bmax; b <= bmax; ++b) {
      if (a == 0 && b == 0) continue;
      ++fc.d_prime;
      const Curve c{a, b};
      if (!is_minimal(c)) continue;
      ++fc.m_count;
      if (discriminant(c) == 0) {
        ++fc.s_count;
        continue;
      }
      ++fc.e_count;
      const JValue j = j_invariant(c);
      std::optional<std::size_t> idx;
      if (j.is_integer() && j.num >= std::numeric_limits<std::int64_t>::min() &&
          j.num <= std::numeric_limits<std::int64_t>::max())
        idx = table.index_of(static_cast<std::int64_t>(j.num));
      if (idx)
        ++fc.tally.counts[*idx];
      else
        ++fc.tally.non_cm;
    }
  }
  fc.tally.total = fc.e_count;
  fc.ecm_count = fc.tally.cm_total();
  return fc;
}

std::uint64_t count_singular_S(std::uint64_t x) {
  std::uint64_t s = 0;
  for (std::int64_t w = 1;; ++w) {
    const i128 w2 = static_cast<i128>(w) * w;
    if (checked_mul(108, w2 * w2 * w2) > static_cast<i128>(x)) break;
    if (is_minimal({narrow64(-3 * w2), narrow64(2 * w2 * w)})) s += 2;  // ±w
  }
  return s;
}

std::pair<std::uint64_t, std::uint64_t> mobius_inversion_check(std::uint64_t x, const ScanOptions& opts) {
  const std::uint64_t lhs = enumerate_E(x, opts).m_count;
  std::int64_t rhs = 0;
  const std::uint64_t dmax = integer_kth_root(x, 12);
  for (std::uint64_t d = 1; d <= dmax; ++d) {
    const int mu = mobius(static_cast<std::int64_t>(d));
    if (mu == 0) continue;
    std::uint64_t d12 = 1;
    for (int i = 0; i < 12; ++i) d12 *= d;
    // 4A^3 <= X/d^12 with A integral is the same predicate as 4A^3 d^12 <= X.
    rhs += mu * static_cast<std::int64_t>(count_box_Dprime(x / d12));
  }
  return {lhs, static_cast<std::uint64_t>(rhs)};
}

std::uint64_t count_Ej_fast(const JValue& j, std::uint64_t x) {
  if (j.num == 0) return 2 * qk_mobius(static_cast<std::uint64_t>(b_bound(x)), 6);
  if (j == JValue::integer(1728)) return 2 * qk_mobius(static_cast<std::uint64_t>(a_bound(x)), 4);

  const std::int64_t t = a_bound(x);
  if (t == 0) return 0;
  std::uint64_t count = 0;
  for (const auto& pt : enumerate_integral_points(aj_coefficient(j), t)) {
    if (pt.x == 0) continue;  // the cusp; B = 0 cannot carry j != 1728
    if (checked_mul(27, checked_mul(pt.y, pt.y)) > static_cast<i128>(x)) continue;
    if (is_minimal({narrow64(pt.x), narrow64(pt.y)})) ++count;
  }
  return count;
}

JTally count_Ecm_fast(std::uint64_t x, const CmTable& t) {
  JTally tally;
  for (std::size_t i = 0; i < kCmCount; ++i)
    tally.counts[i] = count_Ej_fast(JValue::integer(t.orders()[i].j), x);
  tally.total = tally.cm_total();
  return tally;
}

}  // namespace cmcensus
