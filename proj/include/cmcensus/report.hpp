#pragma once

// Asymptotic main terms, exact/decimal rendering, count reports and the
// table builders behind the CLI.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "cmcensus/family.hpp"
#include "cmcensus/numeric.hpp"
#include "cmcensus/twist.hpp"

namespace cmcensus {

enum class Family { E, Ecm, E0, E1728, ETj, ETcm };

std::string family_name(Family f);
Family parse_family(const std::string& name);

struct ExponentRatio {
  int num;
  int den;
};

struct AsymptoticPrediction {
  std::uint64_t x;
  Family family;
  std::optional<std::int64_t> j;  // ETj only
  Decimal main_terms;
  ExponentRatio leading_exponent;
  ExponentRatio error_exponent;
};

Decimal brumer_main_term(std::uint64_t x);
Decimal e0_main_term(std::uint64_t x);
Decimal e1728_main_term(std::uint64_t x);
Decimal ecm_main_terms(std::uint64_t x);
Decimal etj_main_term(const FixedCurve& f, std::uint64_t x);
Decimal etcm_main_terms(const FixedCurveSet& fixed, std::uint64_t x);

AsymptoticPrediction predict(Family family, std::uint64_t x, const FixedCurveSet& fixed,
                             std::optional<std::int64_t> j = std::nullopt);

/// Nonnegative value rounded half-even to `digits` significant digits, in
/// plain positional notation ("1043.74", "0.0105679", "330060").
std::string format_sig(const Decimal& v, int digits);

/// Exact num/den rounded half-even to `digits` significant digits.
std::string format_ratio(std::uint64_t num, std::uint64_t den, int digits);

/// Exact num/den rounded half-even to `places` digits after the point.
std::string format_ratio_places(std::uint64_t num, std::uint64_t den, int places);

struct Ratio {
  std::uint64_t num;
  std::uint64_t den;
};

/// Empty cell, exact integer, decimal prediction, exact ratio, or text.
using Cell = std::variant<std::monostate, i128, Decimal, Ratio, std::string>;

struct ReportMetadata {
  std::string timestamp;
  std::string version;
  int workers = 0;
};

struct CountReport {
  std::string family;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;  // sorted by X where X is a column
  std::vector<std::string> notes;       // emitted as '# ' lines
  ReportMetadata meta;
};

enum class TableFormat { Csv, Tsv };

TableFormat parse_format(const std::string& name);

inline constexpr int kTableDigits = 6;

/// Notes and header then rows, LF endings. Decimals and ratios at 6
/// significant digits, integers exact.
void emit_table(const CountReport& report, TableFormat format, std::ostream& out, bool with_metadata = false);

/// Writes to `path`; failures raise std::runtime_error naming the path.
void write_table(const CountReport& report, TableFormat format, const std::string& path, bool with_metadata = false);

struct ReportOptions {
  ScanOptions scan;
  FixedCurveSet fixed = default_fixed_curves();
};

std::vector<std::uint64_t> powers_of_ten(int lo, int hi);

/// Rows (X, #E, #E_cm, #E_0, #E_cm/#E, #E_0/#E_cm). #E comes from the box
/// scan and is left empty above the scan ceiling; the rest are fast counts.
CountReport density_report(const std::vector<std::uint64_t>& grid, const ReportOptions& opts);

CountReport table1(const ReportOptions& opts);
CountReport table2(const ReportOptions& opts);
CountReport table4(const ReportOptions& opts, std::uint64_t x = 10'000'000'000ULL);
CountReport table5(const ReportOptions& opts);
CountReport table6(const ReportOptions& opts, std::uint64_t x = 10'000'000'000ULL);

/// id in {"1","2","4","5","6","density"}.
CountReport build_table(const std::string& id, const ReportOptions& opts);

std::string library_version();

}  // namespace cmcensus
