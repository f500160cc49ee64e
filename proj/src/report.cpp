#include "cmcensus/report.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#ifndef CMCENSUS_VERSION
#define CMCENSUS_VERSION "0.0.0"
#endif

namespace cmcensus {

namespace {

Decimal dec(std::uint64_t x) { return Decimal(std::to_string(x)); }

Decimal root_of(std::uint64_t x, int num, int den) { return pow(dec(x), Decimal(num) / den); }

// Positional rendering of a digit string whose first digit sits at 10^exp10.
std::string render_positional(const std::string& digits, int exp10) {
  if (exp10 >= 0) {
    const auto int_len = static_cast<std::size_t>(exp10) + 1;
    if (digits.size() <= int_len) return digits + std::string(int_len - digits.size(), '0');
    return digits.substr(0, int_len) + "." + digits.substr(int_len);
  }
  return "0." + std::string(static_cast<std::size_t>(-exp10 - 1), '0') + digits;
}

u128 pow10_u128(int e) {
  u128 r = 1;
  for (int i = 0; i < e; ++i) r *= 10;
  return r;
}

u128 mul_checked(u128 a, u128 b) {
  u128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("ratio rendering overflow");
  return r;
}

std::string u128_str(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return {s.rbegin(), s.rend()};
}

// q + half-even rounding of r/d.
u128 round_half_even(u128 q, u128 r, u128 d) {
  const u128 twice = 2 * r;
  if (twice > d || (twice == d && (q % 2) == 1)) return q + 1;
  return q;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

CountReport make_report(std::string family, std::vector<std::string> columns, const ReportOptions& opts) {
  CountReport r;
  r.family = std::move(family);
  r.columns = std::move(columns);
  int workers = opts.scan.workers;
#ifdef _OPENMP
  if (workers == 0) workers = omp_get_max_threads();
#endif
  r.meta = {utc_timestamp(), library_version(), workers};
  return r;
}

const FixedCurve& fixed_for(const FixedCurveSet& fixed, std::int64_t j) {
  for (const auto& f : fixed)
    if (f.j == j) return f;
  throw std::invalid_argument("no fixed curve for j=" + std::to_string(j));
}

}  // namespace

std::string library_version() { return CMCENSUS_VERSION; }

std::string family_name(Family f) {
  switch (f) {
    case Family::E: return "E";
    case Family::Ecm: return "Ecm";
    case Family::E0: return "E0";
    case Family::E1728: return "E1728";
    case Family::ETj: return "ETj";
    case Family::ETcm: return "ETcm";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  for (Family f : {Family::E, Family::Ecm, Family::E0, Family::E1728, Family::ETj, Family::ETcm})
    if (family_name(f) == name) return f;
  throw std::invalid_argument("unknown family '" + name + "' (expected E, Ecm, E0, E1728, ETj, ETcm)");
}

Decimal brumer_main_term(std::uint64_t x) {
  const Decimal c = pow(Decimal(2), Decimal(4) / 3) / (pow(Decimal(3), Decimal(3) / 2) * zeta_even(10).value);
  return c * root_of(x, 5, 6);
}

Decimal e0_main_term(std::uint64_t x) {
  return Decimal(2) / (pow(Decimal(3), Decimal(3) / 2) * zeta_even(6).value) * root_of(x, 1, 2);
}

Decimal e1728_main_term(std::uint64_t x) {
  return pow(Decimal(2), Decimal(1) / 3) / zeta_even(4).value * root_of(x, 1, 3);
}

Decimal ecm_main_terms(std::uint64_t x) { return e0_main_term(x) + e1728_main_term(x); }

Decimal etj_main_term(const FixedCurve& f, std::uint64_t x) { return c_constant(f) * root_of(x, 1, f.m); }

Decimal etcm_main_terms(const FixedCurveSet& fixed, std::uint64_t x) {
  Decimal generic = 0;
  for (const auto& f : fixed)
    if (f.j != 0 && f.j != 1728) generic += c_constant(f);
  return c_constant(fixed_for(fixed, 0)) * root_of(x, 1, 2) + c_constant(fixed_for(fixed, 1728)) * root_of(x, 1, 3) +
         generic * root_of(x, 1, 6);
}

AsymptoticPrediction predict(Family family, std::uint64_t x, const FixedCurveSet& fixed, std::optional<std::int64_t> j) {
  if (x < 1) throw std::invalid_argument("predict: X must be >= 1");
  switch (family) {
    case Family::E: return {x, family, std::nullopt, brumer_main_term(x), {5, 6}, {7, 12}};
    case Family::Ecm: return {x, family, std::nullopt, ecm_main_terms(x), {1, 2}, {1, 6}};
    case Family::E0: return {x, family, std::nullopt, e0_main_term(x), {1, 2}, {1, 12}};
    case Family::E1728: return {x, family, std::nullopt, e1728_main_term(x), {1, 3}, {1, 12}};
    case Family::ETj: {
      if (!j) throw std::invalid_argument("predict: family ETj needs a j-invariant");
      const FixedCurve& f = fixed_for(fixed, *j);
      return {x, family, j, etj_main_term(f, x), {1, f.m}, {1, 12}};
    }
    case Family::ETcm: return {x, family, std::nullopt, etcm_main_terms(fixed, x), {1, 2}, {1, 12}};
  }
  throw std::invalid_argument("predict: unknown family");
}

std::string format_sig(const Decimal& v, int digits) {
  if (digits < 1) throw std::invalid_argument("format_sig: digits must be >= 1");
  if (v < 0) return "-" + format_sig(-v, digits);
  if (v == 0) return "0";
  const std::string s = v.str(digits + 30, std::ios_base::scientific);
  const auto epos = s.find_first_of("eE");
  std::string mant;
  for (char c : s.substr(0, epos))
    if (c >= '0' && c <= '9') mant.push_back(c);
  int exp10 = std::stoi(s.substr(epos + 1));

  std::string keep = mant.substr(0, static_cast<std::size_t>(digits));
  keep.resize(static_cast<std::size_t>(digits), '0');
  const std::string rest = mant.size() > keep.size() ? mant.substr(keep.size()) : "";
  bool up = false;
  if (!rest.empty() && rest[0] >= '5') {
    const bool exact_half = rest[0] == '5' && rest.find_first_not_of('0', 1) == std::string::npos;
    up = !exact_half || ((keep.back() - '0') % 2 == 1);
  }
  if (up) {
    int i = digits - 1;
    while (i >= 0 && keep[static_cast<std::size_t>(i)] == '9') keep[static_cast<std::size_t>(i--)] = '0';
    if (i < 0) {
      keep = "1" + std::string(static_cast<std::size_t>(digits - 1), '0');
      ++exp10;
    } else {
      ++keep[static_cast<std::size_t>(i)];
    }
  }
  return render_positional(keep, exp10);
}

std::string format_ratio(std::uint64_t num, std::uint64_t den, int digits) {
  if (den == 0) throw std::invalid_argument("format_ratio: zero denominator");
  if (digits < 1) throw std::invalid_argument("format_ratio: digits must be >= 1");
  if (num == 0) return "0";
  const u128 n = num;
  const u128 d = den;
  int e = 0;  // 10^e <= n/d < 10^(e+1)
  if (n >= d) {
    while (n >= mul_checked(d, pow10_u128(e + 1))) ++e;
  } else {
    while (mul_checked(n, pow10_u128(-e)) < d) --e;
  }
  const int shift = digits - 1 - e;
  u128 big_n = n;
  u128 big_d = d;
  if (shift >= 0)
    big_n = mul_checked(n, pow10_u128(shift));
  else
    big_d = mul_checked(d, pow10_u128(-shift));
  u128 q = round_half_even(big_n / big_d, big_n % big_d, big_d);
  if (q == pow10_u128(digits)) {
    q /= 10;
    ++e;
  }
  return render_positional(u128_str(q), e);
}

std::string format_ratio_places(std::uint64_t num, std::uint64_t den, int places) {
  if (den == 0) throw std::invalid_argument("format_ratio_places: zero denominator");
  if (places < 0) throw std::invalid_argument("format_ratio_places: places must be >= 0");
  const u128 scale = pow10_u128(places);
  const u128 big_n = mul_checked(num, scale);
  const u128 q = round_half_even(big_n / den, big_n % den, den);
  if (places == 0) return u128_str(q);
  std::string frac = u128_str(q % scale);
  frac = std::string(static_cast<std::size_t>(places) - frac.size(), '0') + frac;
  return u128_str(q / scale) + "." + frac;
}

TableFormat parse_format(const std::string& name) {
  if (name == "csv") return TableFormat::Csv;
  if (name == "tsv") return TableFormat::Tsv;
  throw std::invalid_argument("unknown table format '" + name + "' (expected csv or tsv)");
}

void emit_table(const CountReport& report, TableFormat format, std::ostream& out, bool with_metadata) {
  const char sep = format == TableFormat::Csv ? ',' : '\t';
  if (with_metadata) {
    out << "# family: " << report.family << '\n';
    out << "# generated: " << report.meta.timestamp << '\n';
    out << "# version: " << report.meta.version << '\n';
    out << "# workers: " << report.meta.workers << '\n';
  }
  for (const auto& note : report.notes) out << "# " << note << '\n';
  for (std::size_t i = 0; i < report.columns.size(); ++i) out << (i ? std::string(1, sep) : "") << report.columns[i];
  out << '\n';
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << sep;
      std::visit(
          [&out](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, i128>)
              out << to_string(v);
            else if constexpr (std::is_same_v<T, Decimal>)
              out << format_sig(v, kTableDigits);
            else if constexpr (std::is_same_v<T, Ratio>)
              out << format_ratio(v.num, v.den, kTableDigits);
            else if constexpr (std::is_same_v<T, std::string>)
              out << v;
          },
          row[i]);
    }
    out << '\n';
  }
}

void write_table(const CountReport& report, TableFormat format, const std::string& path, bool with_metadata) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  emit_table(report, format, out, with_metadata);
  out.flush();
  if (!out) throw std::runtime_error("write failed for " + path);
}

std::vector<std::uint64_t> powers_of_ten(int lo, int hi) {
  std::vector<std::uint64_t> out;
  std::uint64_t p = 1;
  for (int e = 0; e <= hi; ++e) {
    if (e >= lo) out.push_back(p);
    p *= 10;
  }
  return out;
}

CountReport density_report(const std::vector<std::uint64_t>& grid, const ReportOptions& opts) {
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (grid[i] <= grid[i - 1]) throw std::invalid_argument("density_report: grid must be strictly increasing");
  CountReport r = make_report("density", {"X", "E", "E_cm", "E_0", "E_cm/E", "E_0/E_cm"}, opts);
  const CmTable& t = cm_table();
  for (std::uint64_t x : grid) {
    const JTally fast = count_Ecm_fast(x, t);
    const std::uint64_t ecm = fast.cm_total();
    const std::uint64_t e0 = fast.count(0, t);
    Cell e_cell;
    Cell cm_ratio;
    if (x <= opts.scan.ceiling) {
      const std::uint64_t e = enumerate_E(x, opts.scan).e_count;
      e_cell = static_cast<i128>(e);
      if (e > 0) cm_ratio = Ratio{ecm, e};
    }
    Cell j0_ratio;
    if (ecm > 0) j0_ratio = Ratio{e0, ecm};
    r.rows.push_back({static_cast<i128>(x), e_cell, static_cast<i128>(ecm), static_cast<i128>(e0), cm_ratio, j0_ratio});
  }
  return r;
}

CountReport table1(const ReportOptions& opts) {
  CountReport r = make_report("E", {"X", "E", "E_cm", "E_cm/E"}, opts);
  for (std::uint64_t x : powers_of_ten(1, 7)) {
    const FamilyCounts fc = enumerate_E(x, opts.scan);
    r.rows.push_back({static_cast<i128>(x), static_cast<i128>(fc.e_count), static_cast<i128>(fc.ecm_count),
                      Ratio{fc.ecm_count, fc.e_count}});
  }
  return r;
}

CountReport table2(const ReportOptions& opts) {
  CountReport r = make_report("E", {"X", "E", "brumer_main_term", "E_cm", "ecm_main_terms"}, opts);
  for (std::uint64_t x : powers_of_ten(1, 7)) {
    const FamilyCounts fc = enumerate_E(x, opts.scan);
    r.rows.push_back({static_cast<i128>(x), static_cast<i128>(fc.e_count), brumer_main_term(x),
                      static_cast<i128>(fc.ecm_count), ecm_main_terms(x)});
  }
  return r;
}

CountReport table4(const ReportOptions& opts, std::uint64_t x) {
  CountReport r = make_report("Ej", {"d_K", "f", "j", "E_j", "E_j/E_cm"}, opts);
  r.notes.push_back("X = " + std::to_string(x));
  const CmTable& t = cm_table();
  const JTally tally = count_Ecm_fast(x, t);
  const std::uint64_t total = tally.cm_total();
  for (std::size_t i = 0; i < kCmCount; ++i) {
    const CmOrder& o = t.orders()[i];
    Cell ratio;
    if (total > 0) ratio = Ratio{tally.counts[i], total};
    r.rows.push_back({static_cast<i128>(o.d_k), static_cast<i128>(o.conductor), static_cast<i128>(o.j),
                      static_cast<i128>(tally.counts[i]), ratio});
  }
  return r;
}

CountReport table5(const ReportOptions& opts) {
  CountReport r = make_report("E0", {"X", "E_cm", "E_0", "e0_main_term", "E_0/E_cm"}, opts);
  for (std::uint64_t x : powers_of_ten(2, 12)) {
    const JTally tally = count_Ecm_fast(x);
    const std::uint64_t ecm = tally.cm_total();
    const std::uint64_t e0 = tally.count(0);
    r.rows.push_back({static_cast<i128>(x), static_cast<i128>(ecm), static_cast<i128>(e0), e0_main_term(x),
                      Ratio{e0, ecm}});
  }
  return r;
}

CountReport table6(const ReportOptions& opts, std::uint64_t x) {
  CountReport r = make_report("ETj", {"d_K", "f", "j", "A_j", "B_j", "ET_j", "ET_j/ET_cm"}, opts);
  r.notes.push_back("X = " + std::to_string(x));
  r.notes.push_back(
      "ET_j depends on the fixed curve chosen per j; counts are exact for the A_j, B_j listed here and "
      "reproduce published ET tables only when the same fixed curves are supplied via --fixed-curves");
  const CmTable& t = cm_table();
  const EtCounts et = count_ETcm(opts.fixed, x, t);
  for (std::size_t i = 0; i < kCmCount; ++i) {
    const CmOrder& o = t.orders()[i];
    const FixedCurve& f = fixed_for(opts.fixed, o.j);
    Cell ratio;
    if (et.total > 0) ratio = Ratio{et.per_j[i], et.total};
    r.rows.push_back({static_cast<i128>(o.d_k), static_cast<i128>(o.conductor), static_cast<i128>(o.j),
                      static_cast<i128>(f.curve.a), static_cast<i128>(f.curve.b), static_cast<i128>(et.per_j[i]),
                      ratio});
  }
  return r;
}

CountReport build_table(const std::string& id, const ReportOptions& opts) {
  if (id == "1") return table1(opts);
  if (id == "2") return table2(opts);
  if (id == "4") return table4(opts);
  if (id == "5") return table5(opts);
  if (id == "6") return table6(opts);
  if (id == "density") return density_report(powers_of_ten(2, 12), opts);
  throw std::invalid_argument("unknown table id '" + id + "' (expected 1, 2, 4, 5, 6 or density)");
}

}  // namespace cmcensus
