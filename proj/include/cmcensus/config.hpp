#pragma once

// Runtime settings: command-line flags win over CMCENSUS_* environment
// variables, which win over built-in defaults.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "cmcensus/family.hpp"

namespace cmcensus {

struct RuntimeConfig {
  std::uint64_t scan_ceiling = kDefaultScanCeiling;
  int workers = 0;
  std::string fixed_curves;  // empty: compiled-in representatives
};

struct ConfigFlags {
  std::optional<std::uint64_t> scan_ceiling;
  std::optional<int> workers;
  std::optional<std::string> fixed_curves;
};

using EnvLookup = std::function<const char*(const char*)>;

/// Reads CMCENSUS_SCAN_CEILING, CMCENSUS_WORKERS, CMCENSUS_FIXED_CURVES.
/// Malformed environment values raise std::invalid_argument naming the variable.
RuntimeConfig resolve_config(const ConfigFlags& flags, const EnvLookup& env = {});

}  // namespace cmcensus
