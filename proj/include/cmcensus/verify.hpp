#pragma once

// The invariant suite behind `cmcensus verify`: every check pits two
// independent routes against each other.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cmcensus/family.hpp"

namespace cmcensus {

struct CheckResult {
  std::string name;
  bool ok;
  std::string detail;  // first mismatch, or a short summary
};

inline constexpr std::uint64_t kCuspidalSeed = 20240611;

CheckResult check_qk_dual(std::uint64_t xmax);
CheckResult check_mobius_inversion(const std::vector<std::uint64_t>& xs, const ScanOptions& opts);
CheckResult check_cuspidal_oracle(int samples, std::uint64_t seed = kCuspidalSeed);
CheckResult check_twist_laws(std::int64_t dmax);
CheckResult check_scan_vs_reference(std::uint64_t x, const ScanOptions& opts);
CheckResult check_scan_vs_fast(std::uint64_t x, const ScanOptions& opts);
CheckResult check_et_dual(const std::vector<std::uint64_t>& xs);

/// All of the above at their default sizes. on_result fires as each check ends.
std::vector<CheckResult> run_verify_suite(const ScanOptions& opts,
                                          const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace cmcensus
