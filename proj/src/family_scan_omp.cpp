// Parallel box scan for E(X). The A-interval is cut into contiguous chunks;
// each chunk fills a private FamilyCounts and the partials are merged in
// chunk order after the parallel region.

#include <algorithm>
#include <atomic>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cmcensus/errors.hpp"
#include "cmcensus/family.hpp"
#include "cmcensus/numeric.hpp"

namespace cmcensus {

namespace {

// Heights beyond this no longer fit the 64-bit discriminant core 4A^3+27B^2.
constexpr std::uint64_t kOperatingCeiling = 1'000'000'000'000'000'000ULL;

struct KernelContext {
  std::int64_t bmax;
  std::array<std::int64_t, kCmCount> js;
  std::size_t j0_index;
  const std::vector<std::uint8_t>* b_sixth_free;  // flags over |B| <= bmax
};

// p^6 for every prime p with p^4 | a. Only these primes can break minimality.
std::vector<std::int64_t> minimality_witnesses(std::int64_t a) {
  std::vector<std::int64_t> out;
  const std::int64_t abs_a = a < 0 ? -a : a;
  for (std::uint32_t p : cached_primes()) {
    const std::int64_t p4 = static_cast<std::int64_t>(p) * p * p * p;
    if (p4 > abs_a) break;
    if (abs_a % p4 == 0) out.push_back(p4 * p * p);
  }
  return out;
}

void scan_zero_column(const KernelContext& ctx, FamilyCounts& out) {
  // A = 0: j = 0, never singular for B != 0, minimal iff B is 6th-power-free.
  std::uint64_t minimal = 0;
  for (std::int64_t b = 1; b <= ctx.bmax; ++b) minimal += (*ctx.b_sixth_free)[b];
  out.d_prime += 2 * static_cast<std::uint64_t>(ctx.bmax);
  out.m_count += 2 * minimal;
  out.e_count += 2 * minimal;
  out.tally.counts[ctx.j0_index] += 2 * minimal;
}

template <typename Num>
void scan_column(std::int64_t a, const KernelContext& ctx, FamilyCounts& out) {
  const auto witnesses = minimality_witnesses(a);
  const std::int64_t four_a3 = 4 * a * a * a;
  const Num num = static_cast<Num>(6912) * a * a * a;  // j numerator
  for (std::int64_t b = -ctx.bmax; b <= ctx.bmax; ++b) {
    ++out.d_prime;
    bool minimal = true;
    for (std::int64_t w : witnesses) {
      if (b % w == 0) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    ++out.m_count;
    const std::int64_t den = four_a3 + 27 * b * b;
    if (den == 0) {
      ++out.s_count;
      continue;
    }
    ++out.e_count;
    if (num % den != 0) {
      ++out.tally.non_cm;
      continue;
    }
    const Num j = num / den;
    std::size_t i = 0;
    while (i < kCmCount && static_cast<Num>(ctx.js[i]) != j) ++i;
    if (i < kCmCount)
      ++out.tally.counts[i];
    else
      ++out.tally.non_cm;
  }
}

}  // namespace

FamilyCounts enumerate_E(std::uint64_t x, const ScanOptions& opts) {
  if (x > opts.ceiling)
    throw CeilingExceeded("enumerate_E: X=" + std::to_string(x) + " exceeds scan ceiling " +
                          std::to_string(opts.ceiling));
  if (x > kOperatingCeiling) throw CeilingExceeded("enumerate_E: X above the 1e18 operating ceiling");

  const CmTable& table = cm_table();
  const std::int64_t amax = a_bound(x);
  const std::int64_t bmax = b_bound(x);
  const auto b_flags = k_free_flags(static_cast<std::uint64_t>(bmax), 6);

  KernelContext ctx{bmax, {}, *table.index_of(0), &b_flags};
  for (std::size_t i = 0; i < kCmCount; ++i) ctx.js[i] = table.orders()[i].j;

  // 6912 |A|^3 must fit in int64 for the narrow kernel.
  const bool narrow = static_cast<i128>(6912) * amax * amax * amax <= std::numeric_limits<std::int64_t>::max();

  const std::int64_t n_a = 2 * amax + 1;
  const std::int64_t width = opts.chunk_width > 0 ? opts.chunk_width : std::max<std::int64_t>(1, n_a / 64);
  const auto n_chunks = static_cast<std::size_t>((n_a + width - 1) / width);
  std::vector<FamilyCounts> partial(n_chunks);
  std::atomic<std::uint64_t> e_done{0};

#ifdef _OPENMP
  const int threads = opts.workers > 0 ? opts.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#endif
  for (std::size_t chunk = 0; chunk < n_chunks; ++chunk) {
    FamilyCounts& local = partial[chunk];
    const std::int64_t lo = -amax + static_cast<std::int64_t>(chunk) * width;
    const std::int64_t hi = std::min(amax, lo + width - 1);
    for (std::int64_t a = lo; a <= hi; ++a) {
      if (a == 0)
        scan_zero_column(ctx, local);
      else if (narrow)
        scan_column<std::int64_t>(a, ctx, local);
      else
        scan_column<i128>(a, ctx, local);
    }
    const std::uint64_t so_far = e_done.fetch_add(local.e_count) + local.e_count;
    if (opts.on_chunk) {
#ifdef _OPENMP
#pragma omp critical(cmcensus_scan_progress)
#endif
      opts.on_chunk({chunk, n_chunks, so_far});
    }
  }

  FamilyCounts fc;
  for (const auto& p : partial) fc += p;
  fc.x = x;
  fc.tally.total = fc.e_count;
  fc.ecm_count = fc.tally.cm_total();
  return fc;
}

}  // namespace cmcensus
