#include "cmcensus/curve.hpp"

#include <stdexcept>

#include "cmcensus/numeric.hpp"

namespace cmcensus {

namespace {

i128 cube(i128 v) { return checked_mul(checked_mul(v, v), v); }

// 4A^3 + 27B^2
i128 disc_core(const Curve& c) {
  return checked_add(checked_mul(4, cube(c.a)), checked_mul(27, checked_mul(c.b, c.b)));
}

}  // namespace

JValue JValue::make(i128 num, i128 den) {
  if (den == 0) throw std::invalid_argument("JValue: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

std::string JValue::str() const {
  return den == 1 ? to_string(num) : to_string(num) + "/" + to_string(den);
}

CmTable::CmTable()
    : orders_{{
          {-3, 1, 0, {0, 1}},
          {-3, 2, 54000, {-15, 22}},
          {-3, 3, -12288000, {-120, 506}},
          {-4, 1, 1728, {1, 0}},
          {-4, 2, 287496, {-11, 14}},
          {-7, 1, -3375, {-35, 98}},
          {-7, 2, 16581375, {-595, 5586}},
          {-8, 1, 8000, {-30, 56}},
          {-11, 1, -32768, {-1056, 13552}},
          {-19, 1, -884736, {-152, 722}},
          {-43, 1, -884736000, {-3440, 77658}},
          {-67, 1, -147197952000, {-29480, 1948226}},
          {-163, 1, -262537412640768000, {-34790720, -78984748304}},
      }} {
  for (const auto& o : orders_) {
    if (j_invariant(o.rep) != JValue::integer(o.j))
      throw std::logic_error("CM table row d_K=" + std::to_string(o.d_k) + " f=" +
                             std::to_string(o.conductor) + ": representative has j=" +
                             j_invariant(o.rep).str());
  }
  for (std::size_t i = 0; i < kCmCount; ++i)
    for (std::size_t k = i + 1; k < kCmCount; ++k)
      if (orders_[i].j == orders_[k].j) throw std::logic_error("CM table: duplicate j");
}

std::optional<std::size_t> CmTable::index_of(std::int64_t j) const {
  for (std::size_t i = 0; i < kCmCount; ++i)
    if (orders_[i].j == j) return i;
  return std::nullopt;
}

const CmOrder* CmTable::find(std::int64_t j) const {
  auto i = index_of(j);
  return i ? &orders_[*i] : nullptr;
}

const CmOrder& CmTable::at(std::int64_t j) const {
  if (const CmOrder* o = find(j)) return *o;
  throw std::out_of_range("j=" + std::to_string(j) + " is not a CM j-invariant over Q");
}

void CmTable::write_csv(std::ostream& out) const {
  out << "d_K,f,A,B,j\n";
  for (const auto& o : orders_)
    out << o.d_k << ',' << o.conductor << ',' << o.rep.a << ',' << o.rep.b << ',' << o.j << '\n';
}

const CmTable& cm_table() {
  static const CmTable table;
  return table;
}

i128 discriminant(const Curve& c) { return checked_mul(-16, disc_core(c)); }

i128 naive_height(const Curve& c) {
  const i128 ha = checked_mul(4, cube(abs128(c.a)));
  const i128 hb = checked_mul(27, checked_mul(c.b, c.b));
  return ha > hb ? ha : hb;
}

bool is_minimal(const Curve& c) {
  if (c.a == 0 && c.b == 0) throw std::invalid_argument("is_minimal: (0,0) has no minimality class");
  // Every prime divides 0, so one coefficient vanishing reduces the test to
  // power-freeness of the other.
  if (c.a == 0) return is_k_power_free(c.b, 6);
  if (c.b == 0) return is_k_power_free(c.a, 4);
  const i128 abs_a = abs128(c.a);
  for (std::uint32_t p : cached_primes()) {
    const i128 p4 = static_cast<i128>(p) * p * p * p;
    if (p4 > abs_a) break;
    if (c.a % p4 != 0) continue;
    const i128 p6 = p4 * p * p;
    if (c.b % p6 == 0) return false;
  }
  return true;
}

namespace {

// 6912 A^3 / den with common factors cancelled before multiplying, so the
// only overflow left is a reduced j that genuinely exceeds 128 bits.
JValue reduced_j(const Curve& c, i128 den) {
  const i128 a3 = cube(c.a);
  const i128 g1 = gcd128(6912, den);
  const i128 g2 = gcd128(a3, den / g1);
  return JValue::make(checked_mul(6912 / g1, a3 / g2), den / g1 / g2);
}

}  // namespace

JValue j_invariant(const Curve& c) {
  const i128 den = disc_core(c);
  if (den == 0) throw std::invalid_argument("j_invariant: singular curve");
  return reduced_j(c, den);
}

std::optional<CmOrder> cm_order_of(const Curve& c, const CmTable& t) {
  const i128 den = disc_core(c);
  if (den == 0) throw std::invalid_argument("cm_order_of: singular curve");
  // j = 6912 A^3 / (4A^3 + 27B^2); only integral values can be CM.
  const i128 a3 = cube(c.a);
  const i128 g1 = gcd128(6912, den);
  const i128 g2 = gcd128(a3, den / g1);
  if (den / g1 / g2 != 1 && den / g1 / g2 != -1) return std::nullopt;
  i128 j;
  if (__builtin_mul_overflow(6912 / g1, a3 / g2, &j)) return std::nullopt;
  if (den < 0) j = -j;
  if (j > std::numeric_limits<std::int64_t>::max() || j < std::numeric_limits<std::int64_t>::min())
    return std::nullopt;
  if (const CmOrder* o = t.find(static_cast<std::int64_t>(j))) return *o;
  return std::nullopt;
}

bool in_family_E(const Curve& c, i128 x) {
  if (disc_core(c) == 0) return false;
  return is_minimal(c) && naive_height(c) <= x;
}

}  // namespace cmcensus
