// cmcensus: counts of CM elliptic curves by naive height.
//
// exit codes: 0 ok, 1 verification mismatch, 2 usage error, 3 resource ceiling

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "cmcensus/config.hpp"
#include "cmcensus/errors.hpp"
#include "cmcensus/family.hpp"
#include "cmcensus/report.hpp"
#include "cmcensus/twist.hpp"
#include "cmcensus/verify.hpp"

using namespace cmcensus;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kCeiling = 3 };

// "10000", "1e10" or "10^10"
std::uint64_t parse_height(const std::string& text) {
  const auto pos = text.find_first_of("e^");
  i128 v;
  if (pos == std::string::npos) {
    v = parse_i128(text);
  } else {
    const i128 base = parse_i128(text.substr(0, pos));
    const i128 exp = parse_i128(text.substr(pos + 1));
    if (exp < 0 || exp > 19) throw std::invalid_argument("height exponent out of range: " + text);
    if (text[pos] == 'e') {
      v = base;
      for (int i = 0; i < static_cast<int>(exp); ++i) v = checked_mul(v, 10);
    } else {
      v = pow_capped(base, static_cast<int>(exp), static_cast<i128>(UINT64_MAX) + 1);
    }
  }
  if (v < 1 || v > static_cast<i128>(UINT64_MAX)) throw std::invalid_argument("height must be in [1, 2^64): " + text);
  return static_cast<std::uint64_t>(v);
}

// "54000", "-3375" or "a/b"
JValue parse_j(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return JValue::integer(parse_i128(text));
  const i128 den = parse_i128(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("j denominator is zero");
  return JValue::make(parse_i128(text.substr(0, slash)), den);
}

// called under the scan's critical section, so the counter needs no lock
void progress_line(const ScanProgress& p) {
  static std::size_t done = 0;
  ++done;
  std::fprintf(stderr, "\rscan: %zu/%zu chunks, E so far %llu", done, p.chunks_total,
               static_cast<unsigned long long>(p.e_so_far));
  if (done == p.chunks_total) {
    std::fputc('\n', stderr);
    done = 0;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cmcensus: exact census of CM elliptic curves ordered by naive height"};
  app.require_subcommand(1);
  app.set_version_flag("--version", library_version());

  std::string ceiling_text;
  int workers_flag = -1;
  std::string fixed_flag;
  bool progress = false;
  app.add_option("--scan-ceiling", ceiling_text, "largest X the box scan may run at (env CMCENSUS_SCAN_CEILING)");
  app.add_option("--workers", workers_flag, "OpenMP threads, 0 = runtime default (env CMCENSUS_WORKERS)")
      ->check(CLI::Range(0, 4096));
  app.add_flag("--progress", progress, "report box-scan progress on stderr");
  app.fallthrough();

  std::string xmax_text;
  std::string j_text;
  std::string table_id;
  std::string out_path;
  std::string format_text = "csv";
  std::string family_text;

  auto* count_e = app.add_subcommand("count-e", "box scan of E(X): #E, #S, per-j tally");
  count_e->add_option("--xmax", xmax_text, "height bound X")->required();

  auto* count_cm = app.add_subcommand("count-cm", "fast per-j counts of E_cm(X)");
  count_cm->add_option("--xmax", xmax_text, "height bound X")->required();

  auto* count_j = app.add_subcommand("count-j", "fast count of E_j(X) for any rational j");
  count_j->add_option("--j", j_text, "j-invariant, integer or a/b")->required();
  count_j->add_option("--xmax", xmax_text, "height bound X")->required();

  auto* table = app.add_subcommand("table", "write one of the census tables");
  table->add_option("--id", table_id, "table id")->required()->check(CLI::IsMember({"1", "2", "4", "5", "6", "density"}));
  table->add_option("--out", out_path, "output path")->required();
  table->add_option("--format", format_text, "csv or tsv")->check(CLI::IsMember({"csv", "tsv"}));

  auto* et = app.add_subcommand("et", "twist-family counts ET_j(X)");
  et->add_option("--xmax", xmax_text, "height bound X")->required();
  et->add_option("--fixed-curves", fixed_flag, "CSV j,A,B overriding the fixed curves (env CMCENSUS_FIXED_CURVES)");

  auto* verify = app.add_subcommand("verify", "run the invariant suite");

  auto* asym = app.add_subcommand("asym", "asymptotic main terms");
  asym->add_option("--family", family_text, "E, Ecm, E0, E1728, ETj or ETcm")->required();
  asym->add_option("--xmax", xmax_text, "height bound X")->required();
  asym->add_option("--j", j_text, "j-invariant (family ETj)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    ConfigFlags flags;
    if (!ceiling_text.empty()) flags.scan_ceiling = parse_height(ceiling_text);
    if (workers_flag >= 0) flags.workers = workers_flag;
    if (!fixed_flag.empty()) flags.fixed_curves = fixed_flag;
    const RuntimeConfig cfg = resolve_config(flags);

    ReportOptions opts;
    opts.scan.ceiling = cfg.scan_ceiling;
    opts.scan.workers = cfg.workers;
    if (progress) opts.scan.on_chunk = progress_line;
    if (!cfg.fixed_curves.empty()) opts.fixed = load_fixed_curves(cfg.fixed_curves);

    const CmTable& t = cm_table();

    if (*count_e) {
      const std::uint64_t x = parse_height(xmax_text);
      const FamilyCounts fc = enumerate_E(x, opts.scan);
      std::cout << "X\t" << fc.x << "\nD'\t" << fc.d_prime << "\nM\t" << fc.m_count << "\nS\t" << fc.s_count
                << "\nE\t" << fc.e_count << "\nE_cm\t" << fc.ecm_count << "\nnon_cm\t" << fc.tally.non_cm
                << "\nE_cm/E\t" << (fc.e_count ? format_ratio(fc.ecm_count, fc.e_count, kTableDigits) : "") << '\n';
      for (std::size_t i = 0; i < kCmCount; ++i)
        std::cout << "E_j[" << t.orders()[i].j << "]\t" << fc.tally.counts[i] << '\n';
    } else if (*count_cm) {
      const std::uint64_t x = parse_height(xmax_text);
      const JTally tally = count_Ecm_fast(x, t);
      std::cout << "d_K\tf\tj\tE_j\n";
      for (std::size_t i = 0; i < kCmCount; ++i) {
        const CmOrder& o = t.orders()[i];
        std::cout << o.d_k << '\t' << o.conductor << '\t' << o.j << '\t' << tally.counts[i] << '\n';
      }
      std::cout << "total\t\t\t" << tally.cm_total() << '\n';
    } else if (*count_j) {
      const std::uint64_t x = parse_height(xmax_text);
      const JValue j = parse_j(j_text);
      std::cout << count_Ej_fast(j, x) << '\n';
    } else if (*table) {
      const CountReport r = build_table(table_id, opts);
      write_table(r, parse_format(format_text), out_path, true);
      std::cerr << "wrote " << r.rows.size() << " rows to " << out_path << '\n';
    } else if (*et) {
      const std::uint64_t x = parse_height(xmax_text);
      const EtCounts counts = count_ETcm(opts.fixed, x, t);
      std::cout << "j\tA_j\tB_j\tn\tm\tET_j\tmain_term\n";
      for (std::size_t i = 0; i < kCmCount; ++i) {
        const FixedCurve& f = opts.fixed[i];
        std::cout << f.j << '\t' << f.curve.a << '\t' << f.curve.b << '\t' << f.n << '\t' << f.m << '\t'
                  << counts.per_j[i] << '\t' << format_sig(etj_main_term(f, x), kTableDigits) << '\n';
      }
      std::cout << "total\t\t\t\t\t" << counts.total << '\t' << format_sig(etcm_main_terms(opts.fixed, x), kTableDigits)
                << '\n';
    } else if (*verify) {
      bool all_ok = true;
      run_verify_suite(opts.scan, [&](const CheckResult& r) {
        all_ok = all_ok && r.ok;
        std::cout << (r.ok ? "ok   " : "FAIL ") << r.name << ": " << r.detail << std::endl;
      });
      return all_ok ? kOk : kMismatch;
    } else if (*asym) {
      const std::uint64_t x = parse_height(xmax_text);
      std::optional<std::int64_t> j;
      if (!j_text.empty()) j = narrow64(parse_i128(j_text));
      const AsymptoticPrediction p = predict(parse_family(family_text), x, opts.fixed, j);
      std::cout << "family\t" << family_name(p.family) << (p.j ? "[" + std::to_string(*p.j) + "]" : "") << "\nX\t" << p.x
                << "\nmain_terms\t" << format_sig(p.main_terms, 12) << "\nleading_exponent\t" << p.leading_exponent.num
                << '/' << p.leading_exponent.den << "\nerror_exponent\t" << p.error_exponent.num << '/'
                << p.error_exponent.den << '\n';
    }
  } catch (const CeilingExceeded& e) {
    std::cerr << "cmcensus: " << e.what() << '\n';
    return kCeiling;
  } catch (const VerificationError& e) {
    std::cerr << "cmcensus: verification failed: " << e.what() << '\n';
    return kMismatch;
  } catch (const std::invalid_argument& e) {
    std::cerr << "cmcensus: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "cmcensus: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "cmcensus: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}
