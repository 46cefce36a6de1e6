// cyclo6: cyclotomy-of-order-6 toolkit
//
// Subcommands: classes, cyclo-numbers, verify-formulas, search, acf.
// Exit codes: 0 success, 2 usage or domain error, 3 search hit at order 6
// (an almost difference set or difference set where none should exist),
// 4 internal inconsistency between independent computation routes.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "cyclo6/report.hpp"
#include "cyclo6/version.hpp"

namespace fs = std::filesystem;
using namespace cyclo6;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCounterexample = 3;
constexpr int kExitInternal = 4;

struct Output {
  bool json = false;
  bool csv = false;
  std::string out_path;  // file or directory depending on the command
};

void add_output_flags(CLI::App* cmd, Output* out) {
  cmd->add_flag("--json", out->json, "machine-readable report on stdout");
  cmd->add_flag("--csv", out->csv, "CSV report on stdout");
  cmd->add_option("--out", out->out_path,
                  "write the report here as well (directory for range runs)");
}

void apply_threads(int threads) {
  if (const char* env = std::getenv("CYCLO6_THREADS")) {
    threads = std::atoi(env);
  }
#ifdef _OPENMP
  if (threads >= 1) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

std::string default_outdir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("CYCLO6_OUTDIR")) return env;
  return "";
}

struct PrimeRange {
  uint64_t lo = 0;
  uint64_t hi = 0;
  bool is_range = false;
};

PrimeRange parse_range(const std::string& text) {
  PrimeRange r;
  const size_t dots = text.find("..");
  if (dots == std::string::npos) {
    r.lo = r.hi = std::stoull(text);
  } else {
    r.lo = std::stoull(text.substr(0, dots));
    r.hi = std::stoull(text.substr(dots + 2));
    r.is_range = true;
    if (r.lo == 0 || r.hi < r.lo) throw CLI::ValidationError("range must be lo..hi with lo <= hi");
  }
  return r;
}

void emit(const std::string& text, const std::string& out_path) {
  std::cout << text;
  if (!out_path.empty()) {
    fs::path p(out_path);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream f(p, std::ios::binary);
    f << text;
  }
}

std::string human_header(const CyclotomyContext& ctx) {
  std::ostringstream os;
  os << "# cyclo6 " << kVersion << " | p=" << ctx.p << " d=" << ctx.d << " f=" << ctx.f
     << " alpha=" << ctx.alpha;
  if (ctx.d == 6) os << " m_mod3=" << ctx.m_mod3;
  if (ctx.sextic_forms) os << " A=" << ctx.A << " B=" << ctx.B;
  os << "\n";
  return os.str();
}

// ---------------------------------------------------------------- classes

int run_classes(uint64_t p, uint32_t d, bool full, const Output& out) {
  const CyclotomyContext ctx = build_context(p, d);
  if (out.json) {
    emit(make_envelope("classes", context_meta(ctx), classes_body(ctx)).dump(2) + "\n",
         out.out_path);
    return kExitOk;
  }
  std::ostringstream os;
  os << human_header(ctx);
  const size_t elide_above = 24;
  for (uint32_t i = 0; i < d; ++i) {
    const auto members = ctx.class_members(i);
    os << "D_" << i << " = {";
    const size_t shown = (!full && members.size() > elide_above) ? elide_above : members.size();
    for (size_t j = 0; j < shown; ++j) {
      if (j) os << ",";
      os << members[j];
    }
    if (shown < members.size()) os << ",...";
    os << "}";
    if (shown < members.size()) os << " (" << members.size() << " elements, --full to list)";
    os << "\n";
  }
  emit(os.str(), out.out_path);
  return kExitOk;
}

// ---------------------------------------------------------- cyclo-numbers

int run_cyclo_numbers(uint64_t p, uint32_t d, const std::string& mode, const Output& out) {
  const CyclotomyContext ctx = build_context(p, d);
  if (mode != "oracle" && !ctx.sextic_forms) {
    throw std::invalid_argument("closed forms available only for d=6 with f even");
  }
  if (out.json) {
    emit(make_envelope("cyclo_numbers", context_meta(ctx), cyclo_numbers_body(ctx, mode)).dump(2) +
             "\n",
         out.out_path);
    return kExitOk;
  }
  if (out.csv) {
    emit(cyclo_numbers_csv(ctx, mode == "both" ? "oracle" : mode), out.out_path);
    return kExitOk;
  }
  std::ostringstream os;
  os << human_header(ctx) << "(h,k)_" << d << " [" << mode << "]\n";
  size_t mismatches = 0;
  for (uint32_t h = 0; h < d; ++h) {
    for (uint32_t k = 0; k < d; ++k) {
      if (mode == "oracle") {
        os << std::setw(8) << cyclotomic_number_bruteforce(ctx, h, k);
      } else if (mode == "formula") {
        os << std::setw(8) << cyclotomic_number_formula(ctx, h, k);
      } else {
        const uint64_t o = cyclotomic_number_bruteforce(ctx, h, k);
        const uint64_t f = cyclotomic_number_formula(ctx, h, k);
        if (o != f) ++mismatches;
        os << std::setw(8) << (std::to_string(o) + (o == f ? "" : "!" + std::to_string(f)));
      }
    }
    os << "\n";
  }
  if (mode == "both") os << "mismatches: " << mismatches << "\n";
  emit(os.str(), out.out_path);
  return kExitOk;
}

// -------------------------------------------------------- verify-formulas

std::string formulas_human(const DiscrepancyReport& rep) {
  std::ostringstream os;
  os << "p=" << rep.p << " alpha=" << rep.alpha << " A=" << rep.A << " B=" << rep.B
     << " m_mod3=" << rep.m_mod3 << " checks=" << rep.checks.size()
     << " mismatches=" << rep.mismatches() << "\n";
  for (const FormulaCheck& c : rep.checks) {
    if (c.match) continue;
    os << "  MISMATCH " << c.entry << ": formula " << c.formula_value.str() << " vs oracle "
       << c.oracle_value;
    if (c.published_form) os << "   [" << c.published_form->str() << "]";
    os << "\n";
  }
  return os.str();
}

int run_verify_formulas(const PrimeRange& range, size_t min_contexts, const Output& out,
                        int threads) {
  apply_threads(threads);
  const std::string outdir = default_outdir(out.out_path);

  std::vector<uint64_t> primes;
  for (uint64_t p : primes_in_class(range.hi, 12, 1)) {
    if (p >= range.lo) primes.push_back(p);
  }

  // single-prime convenience: report a skip instead of erroring out
  if (!range.is_range && primes.empty()) {
    json body;
    body["skipped"] = true;
    body["p"] = range.lo;
    body["reason"] = is_prime(range.lo) ? "not congruent to 1 mod 12" : "not prime";
    json meta;
    meta["tool"] = "cyclo6";
    meta["version"] = kVersion;
    if (out.json) {
      std::cout << make_envelope("verify_formulas", meta, body).dump(2) << "\n";
    } else {
      std::cout << "p=" << range.lo << " skipped: " << body["reason"].get<std::string>() << "\n";
    }
    return kExitOk;
  }

  std::vector<DiscrepancyReport> reports(primes.size());
  const int64_t n = static_cast<int64_t>(primes.size());
#pragma omp parallel for schedule(dynamic)
  for (int64_t i = 0; i < n; ++i) {
    reports[i] = verify_formulas(build_context(primes[i], 6));
  }

  if (!outdir.empty()) {
    fs::create_directories(outdir);
    for (size_t i = 0; i < primes.size(); ++i) {
      std::ostringstream name;
      name << "formulas_p" << std::setw(8) << std::setfill('0') << primes[i] << ".json";
      std::ofstream f(fs::path(outdir) / name.str(), std::ios::binary);
      const CyclotomyContext ctx = build_context(primes[i], 6);
      f << make_envelope("verify_formulas", context_meta(ctx), to_json(reports[i])).dump(2)
        << "\n";
    }
  }

  const ErrataReport errata = aggregate_checks(reports, min_contexts);
  json meta;
  meta["tool"] = "cyclo6";
  meta["version"] = kVersion;
  if (out.json) {
    json body = to_json(errata);
    if (!range.is_range && reports.size() == 1) body["report"] = to_json(reports[0]);
    std::cout << make_envelope("errata", meta, body).dump(2) << "\n";
  } else {
    std::ostringstream os;
    for (const DiscrepancyReport& rep : reports) os << formulas_human(rep);
    os << "contexts: " << errata.contexts << " (per class:";
    for (size_t c : errata.per_class) os << " " << c;
    os << ")\nflagged entries:\n";
    for (const EntryStatus* e : errata.flagged()) {
      os << "  " << e->entry << " [m=" << e->m_mod3 << "] mismatched " << e->mismatches << "/"
         << e->contexts;
      if (e->published) os << "  published " << e->published->str();
      if (e->corrected) {
        os << "  corrected " << e->corrected->str()
           << (e->contexts >= errata.min_contexts ? " (proven)" : " (needs more primes)");
      }
      os << "\n";
    }
    if (errata.flagged().empty()) os << "  none\n";
    std::cout << os.str();
    if (!outdir.empty()) {
      std::ofstream f(fs::path(outdir) / "errata_summary.json", std::ios::binary);
      f << make_envelope("errata", meta, to_json(errata)).dump(2) << "\n";
    }
  }
  return kExitOk;
}

// ------------------------------------------------------------------ search

struct SearchFlags {
  std::string k_list;
  std::string variant = "both";
  bool same_k = false;
  bool mixed = false;           // explicit form of the all-pairs default
  bool all_k = false;           // explicit form of the all-k default
  bool both_variants = false;   // explicit form of the both-variants default
  double spot_check = 0.0;
  uint64_t seed = 1;
  bool include_rows = false;
  int threads = 0;
};

SweepOptions to_sweep_options(const SearchFlags& flags, uint32_t d) {
  if (flags.same_k && flags.mixed) {
    throw std::invalid_argument("--same-k and --mixed are mutually exclusive");
  }
  SweepOptions opt;
  if (!flags.k_list.empty() && !flags.all_k) {
    for (uint32_t k : IndexSet::parse(flags.k_list, d).members()) opt.k_values.push_back(k);
  }
  if (flags.both_variants || flags.variant == "both") {
    // keep both
  } else if (flags.variant == "C") {
    opt.variant_cprime = false;
  } else if (flags.variant == "Cprime" || flags.variant == "C'") {
    opt.variant_c = false;
  } else {
    throw std::invalid_argument("variant must be C, Cprime or both");
  }
  opt.pair_mode = flags.same_k ? PairMode::SameK : PairMode::AllPairs;
  if (flags.spot_check > 0) opt.naive_check = NaiveCheck::sample(flags.spot_check, flags.seed);
  return opt;
}

json search_meta(uint32_t d, const SearchFlags& flags) {
  json meta;
  meta["tool"] = "cyclo6";
  meta["version"] = kVersion;
  meta["d"] = d;
  json options;
  options["k"] = flags.k_list.empty() ? "all" : flags.k_list;
  options["variant"] = flags.variant;
  options["pair_mode"] = flags.same_k ? "same-k" : "all-pairs";
  options["spot_check"] = flags.spot_check;
  options["seed"] = flags.seed;
  meta["options"] = std::move(options);
  return meta;
}

bool counterexample_fires(uint32_t d, uint64_t f, size_t hits) {
  return d == 6 && f % 2 == 0 && hits > 0;
}

int run_search_single(uint64_t p, uint32_t d, const SearchFlags& flags, const Output& out) {
  apply_threads(flags.threads);
  const CyclotomyContext ctx = build_context(p, d);
  const SweepOptions opt = to_sweep_options(flags, d);
  const SearchReport rep = sweep_dhm(ctx, opt);
  std::cerr << "# elapsed " << std::fixed << std::setprecision(1) << rep.wall_ms << " ms\n";

  if (out.json) {
    json meta = search_meta(d, flags);
    meta.update(context_meta(ctx));
    emit(make_envelope("search", meta, to_json(rep, flags.include_rows)).dump(2) + "\n",
         out.out_path);
  } else if (out.csv) {
    emit(search_rows_csv(rep), out.out_path);
  } else {
    std::ostringstream os;
    os << human_header(ctx);
    os << "pairs mode=" << pair_mode_name(rep.pair_mode) << " rows=" << rep.rows.size()
       << " ads=" << rep.ads_hits << " ds=" << rep.ds_hits << "\n";
    for (const SearchRow& row : rep.rows) {
      if (row.cls == AdsClass::Neither) continue;
      os << "  HIT I=" << row.I.str() << " J=" << row.J.str() << " variant="
         << variant_name(row.variant) << " " << ads_class_name(row.cls) << " (n=" << row.n
         << ",k=" << row.k << ",lambda=" << row.lambda << ",t=" << row.t << ")\n";
    }
    emit(os.str(), out.out_path);
  }
  return counterexample_fires(d, ctx.f, rep.ads_hits + rep.ds_hits) ? kExitCounterexample
                                                                    : kExitOk;
}

int run_search_range(const PrimeRange& range, uint32_t d, const SearchFlags& flags,
                     const Output& out) {
  apply_threads(flags.threads);
  const SweepOptions opt = to_sweep_options(flags, d);
  const std::string outdir = default_outdir(out.out_path);

  RangeSweepReport rep;
  if (outdir.empty()) {
    rep = sweep_prime_range(range.lo, range.hi, d, opt);
  } else {
    // checkpointed run: one file per prime, skip the ones already present
    fs::create_directories(outdir);
    const uint64_t residue_mod = (d == 6) ? 12 : d;
    std::vector<uint64_t> primes;
    for (uint64_t p : primes_in_class(range.hi, residue_mod, 1 % residue_mod)) {
      if (p >= range.lo) primes.push_back(p);
    }
    rep.p_min = range.lo;
    rep.p_max = range.hi;
    rep.d = d;
    rep.pair_mode = opt.pair_mode;
    rep.variant_c = opt.variant_c;
    rep.variant_cprime = opt.variant_cprime;
    rep.primes.assign(primes.size(), {});

    auto prime_path = [&outdir](uint64_t p) {
      std::ostringstream name;
      name << "search_p" << std::setw(8) << std::setfill('0') << p << ".json";
      return fs::path(outdir) / name.str();
    };

    SweepOptions inner = opt;
    inner.parallel = false;
    size_t done = 0;
    const int64_t n = static_cast<int64_t>(primes.size());
#pragma omp parallel for schedule(dynamic)
    for (int64_t i = 0; i < n; ++i) {
      const uint64_t p = primes[i];
      if (fs::exists(prime_path(p))) continue;
      try {
        const CyclotomyContext ctx = build_context(p, d);
        const SearchReport sweep = sweep_dhm(ctx, inner);
        json meta = search_meta(d, flags);
        meta.update(context_meta(ctx));
        const std::string text =
            make_envelope("search", meta, to_json(sweep, flags.include_rows)).dump(2) + "\n";
#pragma omp critical
        {
          std::ofstream f(prime_path(p), std::ios::binary);
          f << text;
          ++done;
          std::ofstream s(fs::path(outdir) / "summary.json", std::ios::binary);
          s << json{{"progress", done}, {"of", primes.size()}}.dump() << "\n";
        }
      } catch (const std::exception& e) {
#pragma omp critical
        rep.primes[i].error = e.what();
      }
    }

    for (size_t i = 0; i < primes.size(); ++i) {
      PrimeSummary& sum = rep.primes[i];
      sum.p = primes[i];
      if (!sum.error.empty()) continue;
      const json j = json::parse(std::ifstream(prime_path(primes[i])));
      const json& body = j.at("body");
      sum.rows = body.at("rows").get<size_t>();
      sum.ads_hits = body.at("ads_hits").get<size_t>();
      sum.ds_hits = body.at("ds_hits").get<size_t>();
      rep.total_rows += sum.rows;
      rep.total_hits += sum.ads_hits + sum.ds_hits;
    }
  }

  json meta = search_meta(d, flags);
  const json summary = make_envelope("range_search", meta, to_json(rep));
  if (!outdir.empty()) {
    std::ofstream s(fs::path(outdir) / "summary.json", std::ios::binary);
    s << summary.dump(2) << "\n";
  }
  if (out.json) {
    std::cout << summary.dump(2) << "\n";
  } else {
    std::ostringstream os;
    os << "# cyclo6 " << kVersion << " | search " << range.lo << ".." << range.hi << " order " << d
       << " (" << pair_mode_name(rep.pair_mode) << ")\n";
    for (const PrimeSummary& s : rep.primes) {
      os << "p=" << s.p << " rows=" << s.rows << " ads=" << s.ads_hits << " ds=" << s.ds_hits;
      if (!s.error.empty()) os << " ERROR=" << s.error;
      os << "\n";
    }
    os << "primes=" << rep.primes.size() << " total_rows=" << rep.total_rows
       << " total_hits=" << rep.total_hits << "\n";
    for (const auto& [p, row] : rep.hit_rows) {
      os << "  HIT p=" << p << " I=" << row.I.str() << " J=" << row.J.str() << " variant="
         << variant_name(row.variant) << " " << ads_class_name(row.cls) << " (n=" << row.n
         << ",k=" << row.k << ",lambda=" << row.lambda << ",t=" << row.t << ")\n";
    }
    std::cout << os.str();
  }
  // range mode for d=6 only sweeps f-even primes, so any hit is a counterexample
  return (d == 6 && rep.total_hits > 0) ? kExitCounterexample : kExitOk;
}

// --------------------------------------------------------------------- acf

int run_acf(uint64_t p, uint32_t d, const std::string& i_csv, const std::string& j_csv,
            const std::string& variant, bool seq_csv, bool seq_bits, const Output& out) {
  const CyclotomyContext ctx = build_context(p, d);
  const IndexSet I = IndexSet::parse(i_csv, d);
  const IndexSet J = IndexSet::parse(j_csv, d);
  Variant v = Variant::C;
  if (variant == "Cprime" || variant == "C'") v = Variant::Cprime;
  else if (variant != "C") throw std::invalid_argument("variant must be C or Cprime");

  const SupportSet support = build_dhm_support(ctx, I, J, v);
  const BipolarSequence seq = support_to_sequence(support);
  const AcfProfile acf = periodic_autocorrelation(seq);

  if (seq_csv) {
    emit(to_csv_row(seq) + "\n", out.out_path);
    return kExitOk;
  }
  if (seq_bits) {
    emit(to_bitstring(seq) + "\n", out.out_path);
    return kExitOk;
  }
  if (out.json) {
    emit(make_envelope("acf", context_meta(ctx), acf_body(support, seq, acf)).dump(2) + "\n",
         out.out_path);
    return kExitOk;
  }
  if (out.csv) {
    emit(acf_csv(acf), out.out_path);
    return kExitOk;
  }
  std::ostringstream os;
  os << human_header(ctx);
  os << "I=" << I.str() << " J=" << J.str() << " variant=" << variant_name(v) << " n="
     << seq.period() << " k=" << support.k() << "\n";
  const auto levels = acf.levels();
  os << "levels (" << levels.size() << "):";
  for (int64_t v2 : levels) os << " " << v2;
  os << "\npeak=" << acf.peak << "\n";
  emit(os.str(), out.out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cyclotomy-of-order-6 toolkit: class tables, cyclotomic number formulas,\n"
               "distance-function verification, exhaustive DHM-support search, and\n"
               "autocorrelation analysis over GF(2) x Z_p"};
  app.require_subcommand(1);

  // classes
  std::string classes_p;
  uint32_t classes_d = 6;
  bool classes_full = false;
  Output classes_out;
  CLI::App* classes = app.add_subcommand("classes", "print the cyclotomic class table");
  classes->add_option("p", classes_p, "odd prime")->required();
  classes->add_option("d", classes_d, "cyclotomy order")->required();
  classes->add_flag("--full", classes_full, "never elide long classes");
  add_output_flags(classes, &classes_out);

  // cyclo-numbers
  std::string cn_p;
  uint32_t cn_d = 6;
  std::string cn_mode = "both";
  Output cn_out;
  CLI::App* cn = app.add_subcommand("cyclo-numbers", "d x d cyclotomic number table");
  cn->add_option("p", cn_p, "odd prime")->required();
  cn->add_option("d", cn_d, "cyclotomy order")->required();
  cn->add_option("--mode", cn_mode, "oracle | formula | both")
      ->check(CLI::IsMember({"oracle", "formula", "both"}));
  add_output_flags(cn, &cn_out);

  // verify-formulas
  std::string vf_range;
  size_t vf_min_contexts = 25;
  int vf_threads = 0;
  Output vf_out;
  CLI::App* vf = app.add_subcommand(
      "verify-formulas", "check every closed form against direct enumeration");
  vf->add_option("range", vf_range, "prime or lo..hi range")->required();
  vf->add_option("--min-contexts", vf_min_contexts,
                 "primes per class required to call a correction proven");
  vf->add_option("--threads", vf_threads, "parallelism degree");
  add_output_flags(vf, &vf_out);

  // search
  std::string s_range;
  uint32_t s_d = 6;
  SearchFlags s_flags;
  Output s_out;
  CLI::App* search = app.add_subcommand("search", "exhaustive DHM-support classification");
  search->add_option("range", s_range, "prime or lo..hi range")->required();
  search->add_option("--order", s_d, "cyclotomy order d");
  search->add_option("--k", s_flags.k_list, "cardinalities to sweep, e.g. 1,2,3 (default all)");
  search->add_flag("--all-k", s_flags.all_k, "sweep every cardinality 1..d-1 (the default)");
  search->add_option("--variant", s_flags.variant, "C | Cprime | both");
  search->add_flag("--both-variants", s_flags.both_variants, "sweep C and C' (the default)");
  search->add_flag("--same-k", s_flags.same_k, "restrict to |I| = |J| pairs");
  search->add_flag("--mixed", s_flags.mixed, "include |I| != |J| pairs (the default)");
  search->add_option("--spot-check", s_flags.spot_check,
                     "fraction of rows to re-check against literal spectra");
  search->add_option("--seed", s_flags.seed, "seed for the spot-check row sample");
  search->add_flag("--rows", s_flags.include_rows, "include every row in JSON output");
  search->add_option("--threads", s_flags.threads, "parallelism degree");
  add_output_flags(search, &s_out);

  // acf
  std::string a_p, a_i = "0,1,2", a_j = "0,4,5", a_variant = "C";
  uint32_t a_d = 6;
  bool a_seq_csv = false, a_seq_bits = false;
  Output a_out;
  CLI::App* acf = app.add_subcommand("acf", "autocorrelation of the DHM support sequence");
  acf->add_option("p", a_p, "odd prime with d | p-1")->required();
  acf->add_option("--order", a_d, "cyclotomy order d");
  acf->add_option("--I", a_i, "index set for the {0} x D_I part");
  acf->add_option("--J", a_j, "index set for the {1} x D_J part");
  acf->add_option("--variant", a_variant, "C | Cprime");
  acf->add_flag("--seq-csv", a_seq_csv, "print the +-1 sequence as CSV and exit");
  acf->add_flag("--seq-bits", a_seq_bits, "print the 0/1 support bitstring and exit");
  add_output_flags(acf, &a_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (classes->parsed()) {
      return run_classes(std::stoull(classes_p), classes_d, classes_full, classes_out);
    }
    if (cn->parsed()) {
      return run_cyclo_numbers(std::stoull(cn_p), cn_d, cn_mode, cn_out);
    }
    if (vf->parsed()) {
      return run_verify_formulas(parse_range(vf_range), vf_min_contexts, vf_out, vf_threads);
    }
    if (search->parsed()) {
      const PrimeRange range = parse_range(s_range);
      return range.is_range ? run_search_range(range, s_d, s_flags, s_out)
                            : run_search_single(range.lo, s_d, s_flags, s_out);
    }
    if (acf->parsed()) {
      return run_acf(std::stoull(a_p), a_d, a_i, a_j, a_variant, a_seq_csv, a_seq_bits, a_out);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
