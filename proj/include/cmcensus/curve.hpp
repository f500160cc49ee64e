#pragma once

// Short Weierstrass curves y^2 = x^3 + A x + B over Q and their pointwise
// predicates: discriminant, naive height, minimality, j-invariant, CM lookup.

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "cmcensus/int128.hpp"

namespace cmcensus {

/// y^2 = x^3 + a x + b. Singular and non-minimal pairs are representable.
/// Operating envelope: |a| <= 2^40, |b| <= 2^62; all intermediate products
/// are checked and overflow throws std::overflow_error.
struct Curve {
  std::int64_t a = 0;
  std::int64_t b = 0;
  bool operator==(const Curve&) const = default;
};

/// Reduced rational with positive denominator.
struct JValue {
  i128 num = 0;
  i128 den = 1;

  static JValue make(i128 num, i128 den);
  static JValue integer(i128 v) { return {v, 1}; }
  bool is_integer() const { return den == 1; }
  bool operator==(const JValue&) const = default;
  std::string str() const;
};

struct CmOrder {
  int d_k;           // field discriminant
  int conductor;     // f
  std::int64_t j;    // CM j-invariant
  Curve rep;         // fixed representative curve
};

inline constexpr std::size_t kCmCount = 13;

/// The thirteen class-number-one orders, in the order (d_K, f) ascending by
/// |d_K| then f. Index positions are stable and used by JTally/EtCounts.
class CmTable {
 public:
  /// Validates j(rep) == j for every row; throws std::logic_error otherwise.
  CmTable();

  const std::array<CmOrder, kCmCount>& orders() const { return orders_; }
  std::optional<std::size_t> index_of(std::int64_t j) const;
  const CmOrder* find(std::int64_t j) const;
  /// Throws std::out_of_range off the 13-element set.
  const CmOrder& at(std::int64_t j) const;

  void write_csv(std::ostream& out) const;

 private:
  std::array<CmOrder, kCmCount> orders_;
};

/// Process-wide table, built and self-checked on first use.
const CmTable& cm_table();

i128 discriminant(const Curve& c);
i128 naive_height(const Curve& c);
bool is_minimal(const Curve& c);
JValue j_invariant(const Curve& c);
std::optional<CmOrder> cm_order_of(const Curve& c, const CmTable& t = cm_table());
bool in_family_E(const Curve& c, i128 x);

}  // namespace cmcensus
