#include "cmcensus/config.hpp"

#include <cstdlib>
#include <stdexcept>

#include "cmcensus/int128.hpp"

namespace cmcensus {

namespace {

std::optional<std::string> lookup(const EnvLookup& env, const char* name) {
  const char* v = env ? env(name) : std::getenv(name);
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::string(v);
}

std::uint64_t parse_positive(const std::string& text, const char* name) {
  i128 v;
  try {
    v = parse_i128(text);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(name) + ": not an integer: '" + text + "'");
  }
  if (v < 0 || v > static_cast<i128>(UINT64_MAX)) throw std::invalid_argument(std::string(name) + ": out of range: " + text);
  return static_cast<std::uint64_t>(v);
}

}  // namespace

RuntimeConfig resolve_config(const ConfigFlags& flags, const EnvLookup& env) {
  RuntimeConfig cfg;
  if (auto v = lookup(env, "CMCENSUS_SCAN_CEILING")) cfg.scan_ceiling = parse_positive(*v, "CMCENSUS_SCAN_CEILING");
  if (auto v = lookup(env, "CMCENSUS_WORKERS")) {
    const auto w = parse_positive(*v, "CMCENSUS_WORKERS");
    if (w > 4096) throw std::invalid_argument("CMCENSUS_WORKERS: out of range: " + *v);
    cfg.workers = static_cast<int>(w);
  }
  if (auto v = lookup(env, "CMCENSUS_FIXED_CURVES")) cfg.fixed_curves = *v;

  if (flags.scan_ceiling) cfg.scan_ceiling = *flags.scan_ceiling;
  if (flags.workers) cfg.workers = *flags.workers;
  if (flags.fixed_curves) cfg.fixed_curves = *flags.fixed_curves;
  return cfg;
}

}  // namespace cmcensus
