#pragma once

// Counting over the minimal-model family E(X): lattice box closed form,
// box scans (OpenMP kernel + serial reference), singular locus, Möbius
// inversion identity, and the fast per-j counters.

#include <array>
#include <cstdint>
#include <functional>
#include <utility>

#include "cmcensus/curve.hpp"

namespace cmcensus {

/// Per-j counts, indexed like CmTable::orders().
struct JTally {
  std::array<std::uint64_t, kCmCount> counts{};
  std::uint64_t non_cm = 0;
  std::uint64_t total = 0;

  std::uint64_t cm_total() const;
  std::uint64_t count(std::int64_t j, const CmTable& t = cm_table()) const;
  JTally& operator+=(const JTally& other);
  friend JTally operator+(JTally a, const JTally& b) { return a += b; }
  bool operator==(const JTally&) const = default;
};

struct FamilyCounts {
  std::uint64_t x = 0;
  std::uint64_t d_prime = 0;
  std::uint64_t m_count = 0;
  std::uint64_t s_count = 0;
  std::uint64_t e_count = 0;
  std::uint64_t ecm_count = 0;
  JTally tally;

  FamilyCounts& operator+=(const FamilyCounts& other);
  bool operator==(const FamilyCounts&) const = default;
};

inline constexpr std::uint64_t kDefaultScanCeiling = 10'000'000'000ULL;

struct ScanProgress {
  std::size_t chunk_id;
  std::size_t chunks_total;
  std::uint64_t e_so_far;  // E-count merged over chunks finished so far
};

struct ScanOptions {
  int workers = 0;  // 0: OpenMP default
  std::uint64_t ceiling = kDefaultScanCeiling;
  std::int64_t chunk_width = 0;  // A-values per chunk; 0 picks one
  std::function<void(const ScanProgress&)> on_chunk;
};

/// #{A >= 1 : 4A^3 <= X}
std::int64_t a_bound(std::uint64_t x);
/// #{B >= 1 : 27B^2 <= X}
std::int64_t b_bound(std::uint64_t x);

/// #D'(X) = (2 a_bound + 1)(2 b_bound + 1) - 1.
std::uint64_t count_box_Dprime(std::uint64_t x);

/// d * E_{A,B} = E_{d^4 A, d^6 B}.
Curve star_twist(std::int64_t d, const Curve& c);

/// Parallel box scan over A-chunks. Throws CeilingExceeded above opts.ceiling.
FamilyCounts enumerate_E(std::uint64_t x, const ScanOptions& opts = {});

/// Serial pair-by-pair scan using the curve-model predicates directly.
/// Kept as the reference the parallel kernel is tested against.
FamilyCounts enumerate_E_reference(std::uint64_t x);

/// w != 0 with (-3w^2, 2w^3) minimal and of height <= X.
std::uint64_t count_singular_S(std::uint64_t x);

/// (M(X) from the scan, Σ_{d^12 <= X} μ(d) #D'(X / d^12)).
std::pair<std::uint64_t, std::uint64_t> mobius_inversion_check(std::uint64_t x,
                                                               const ScanOptions& opts = {});

/// #E_j(X) without a box scan. j = 0, 1728 use k-free counts; any other
/// rational j goes through integral points on B^2 = a_j A^3.
std::uint64_t count_Ej_fast(const JValue& j, std::uint64_t x);

/// All thirteen CM counts via count_Ej_fast. non_cm is 0, total = CM sum.
JTally count_Ecm_fast(std::uint64_t x, const CmTable& t = cm_table());

}  // namespace cmcensus
