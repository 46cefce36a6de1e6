#include "cyclo6/report.hpp"

#include "cyclo6/version.hpp"

namespace cyclo6 {

json make_envelope(const std::string& kind, json meta, json body) {
  if (!meta.contains("command")) meta["command"] = kind;
  json env;
  env["kind"] = kind;
  env["meta"] = std::move(meta);
  env["body"] = std::move(body);
  return env;
}

json context_meta(const CyclotomyContext& ctx) {
  json meta;
  meta["tool"] = "cyclo6";
  meta["version"] = kVersion;
  meta["p"] = ctx.p;
  meta["d"] = ctx.d;
  meta["f"] = ctx.f;
  meta["alpha"] = ctx.alpha;
  if (ctx.d == 6) meta["m_mod3"] = ctx.m_mod3;
  if (ctx.sextic_forms) {
    meta["A"] = ctx.A;
    meta["B"] = ctx.B;
  }
  return meta;
}

json spectrum_json(const DistanceSpectrum& spec) {
  json rows = json::array();
  for (const auto& [value, count] : spec.histogram) {
    rows.push_back(json::array({value, count}));
  }
  json out;
  out["values"] = std::move(rows);
  out["shifts"] = spec.total;
  return out;
}

json to_json(const AdsReport& rep) {
  json out;
  out["classification"] = ads_class_name(rep.classification);
  out["n"] = rep.n;
  out["k"] = rep.k;
  if (rep.classification != AdsClass::Neither) {
    out["lambda"] = rep.lambda;
    out["t"] = rep.t;
  }
  out["spectrum"] = spectrum_json(rep.spectrum);
  return out;
}

json classes_body(const CyclotomyContext& ctx) {
  json classes = json::array();
  for (uint32_t i = 0; i < ctx.d; ++i) {
    json entry;
    entry["index"] = i;
    entry["elements"] = ctx.class_members(i);
    classes.push_back(std::move(entry));
  }
  json out;
  out["classes"] = std::move(classes);
  return out;
}

json cyclo_numbers_body(const CyclotomyContext& ctx, const std::string& mode) {
  json out;
  out["mode"] = mode;
  json table = json::array();
  size_t mismatches = 0;
  for (uint32_t h = 0; h < ctx.d; ++h) {
    json row = json::array();
    for (uint32_t k = 0; k < ctx.d; ++k) {
      if (mode == "oracle") {
        row.push_back(cyclotomic_number_bruteforce(ctx, h, k));
      } else if (mode == "formula") {
        row.push_back(cyclotomic_number_formula(ctx, h, k));
      } else {
        const uint64_t oracle = cyclotomic_number_bruteforce(ctx, h, k);
        const uint64_t formula = cyclotomic_number_formula(ctx, h, k);
        if (oracle != formula) ++mismatches;
        json cell;
        cell["oracle"] = oracle;
        cell["formula"] = formula;
        row.push_back(std::move(cell));
      }
    }
    table.push_back(std::move(row));
  }
  out["table"] = std::move(table);
  if (mode == "both") out["mismatches"] = mismatches;
  return out;
}

json to_json(const DiscrepancyReport& rep) {
  json out;
  out["p"] = rep.p;
  out["alpha"] = rep.alpha;
  out["A"] = rep.A;
  out["B"] = rep.B;
  out["m_mod3"] = rep.m_mod3;
  out["mismatches"] = rep.mismatches();
  json checks = json::array();
  for (const FormulaCheck& c : rep.checks) {
    json e;
    e["entry"] = c.entry;
    e["formula"] = c.formula_value.str();
    e["oracle"] = c.oracle_value;
    e["match"] = c.match;
    if (c.published_form) e["form"] = c.published_form->str();
    checks.push_back(std::move(e));
  }
  out["checks"] = std::move(checks);
  return out;
}

json to_json(const ErrataReport& rep) {
  json out;
  out["p_max"] = rep.p_max;
  out["contexts"] = rep.contexts;
  out["contexts_per_class"] = rep.per_class;
  out["min_contexts"] = rep.min_contexts;
  json entries = json::array();
  for (const EntryStatus& e : rep.entries) {
    json j;
    j["entry"] = e.entry;
    j["m_mod3"] = e.m_mod3;
    j["contexts"] = e.contexts;
    j["mismatches"] = e.mismatches;
    j["persistent"] = e.persistent();
    if (e.published) j["published"] = e.published->str();
    if (e.corrected) {
      j["corrected"] = e.corrected->str();
      j["proven"] = e.contexts >= rep.min_contexts;
    }
    entries.push_back(std::move(j));
  }
  out["entries"] = std::move(entries);
  return out;
}

json row_json(const SearchRow& row) {
  json out;
  out["I"] = row.I.str();
  out["J"] = row.J.str();
  out["variant"] = variant_name(row.variant);
  out["class"] = ads_class_name(row.cls);
  out["n"] = row.n;
  out["k"] = row.k;
  if (row.cls != AdsClass::Neither) {
    out["lambda"] = row.lambda;
    out["t"] = row.t;
  }
  out["spectrum"] = spectrum_json(row.spectrum);
  return out;
}

json to_json(const SearchReport& rep, bool include_rows) {
  json out;
  out["p"] = rep.p;
  out["d"] = rep.d;
  out["f"] = rep.f;
  out["alpha"] = rep.alpha;
  if (rep.sextic) {
    out["A"] = rep.A;
    out["B"] = rep.B;
    out["m_mod3"] = rep.m_mod3;
  }
  out["pair_mode"] = pair_mode_name(rep.pair_mode);
  out["variants"] = json::array();
  if (rep.variant_c) out["variants"].push_back("C");
  if (rep.variant_cprime) out["variants"].push_back("C'");
  out["rows"] = rep.rows.size();
  out["ads_hits"] = rep.ads_hits;
  out["ds_hits"] = rep.ds_hits;
  out["naive_checked"] = rep.naive_checked;
  json hits = json::array();
  for (const SearchRow& row : rep.rows) {
    if (row.cls != AdsClass::Neither) hits.push_back(row_json(row));
  }
  out["hit_rows"] = std::move(hits);
  if (include_rows) {
    json rows = json::array();
    for (const SearchRow& row : rep.rows) rows.push_back(row_json(row));
    out["all_rows"] = std::move(rows);
  }
  return out;
}

json to_json(const RangeSweepReport& rep) {
  json out;
  out["p_min"] = rep.p_min;
  out["p_max"] = rep.p_max;
  out["d"] = rep.d;
  out["pair_mode"] = pair_mode_name(rep.pair_mode);
  out["total_rows"] = rep.total_rows;
  out["total_hits"] = rep.total_hits;
  json primes = json::array();
  for (const PrimeSummary& s : rep.primes) {
    json j;
    j["p"] = s.p;
    j["rows"] = s.rows;
    j["ads_hits"] = s.ads_hits;
    j["ds_hits"] = s.ds_hits;
    if (!s.error.empty()) j["error"] = s.error;
    primes.push_back(std::move(j));
  }
  out["primes"] = std::move(primes);
  json witnesses = json::array();
  for (const auto& [p, row] : rep.hit_rows) {
    json j = row_json(row);
    j["p"] = p;
    witnesses.push_back(std::move(j));
  }
  out["hit_rows"] = std::move(witnesses);
  return out;
}

json to_json(const CanonicalPairReport& rep) {
  json out;
  out["p"] = rep.p;
  out["variant"] = variant_name(rep.variant);
  out["ads"] = to_json(rep.ads);
  json closed = json::array();
  for (const auto& cv : rep.closed_values) {
    json j;
    j["entry"] = cv.entry;
    j["closed"] = cv.closed.str();
    j["observed"] = cv.observed;
    closed.push_back(std::move(j));
  }
  out["closed_values"] = std::move(closed);
  return out;
}

json acf_body(const SupportSet& support, const BipolarSequence& seq, const AcfProfile& acf) {
  const LevelSummary levels = classify_levels(acf);
  json out;
  out["n"] = seq.period();
  out["k"] = support.k();
  out["peak"] = acf.peak;
  out["offpeak"] = acf.offpeak;
  out["levels"] = levels.values;
  out["level_count"] = levels.count;
  out["three_level"] = levels.three_level;
  out["sequence"] = to_bitstring(seq);
  return out;
}

std::string search_rows_csv(const SearchReport& rep) {
  std::string out = "p,d,kI,kJ,I,J,variant,class,n,k,lambda,t\n";
  for (const SearchRow& row : rep.rows) {
    out += std::to_string(rep.p) + "," + std::to_string(rep.d) + "," +
           std::to_string(row.I.k()) + "," + std::to_string(row.J.k()) + "," + row.I.str() + "," +
           row.J.str() + "," + variant_name(row.variant) + "," + ads_class_name(row.cls) + "," +
           std::to_string(row.n) + "," + std::to_string(row.k) + ",";
    if (row.cls != AdsClass::Neither) {
      out += std::to_string(row.lambda) + "," + std::to_string(row.t);
    } else {
      out += ",";
    }
    out += "\n";
  }
  return out;
}

std::string acf_csv(const AcfProfile& acf) {
  std::string out = "tau,value\n";
  out += "0," + std::to_string(acf.peak) + "\n";
  for (size_t i = 0; i < acf.offpeak.size(); ++i) {
    out += std::to_string(i + 1) + "," + std::to_string(acf.offpeak[i]) + "\n";
  }
  return out;
}

std::string cyclo_numbers_csv(const CyclotomyContext& ctx, const std::string& mode) {
  std::string out = "h,k,value\n";
  for (uint32_t h = 0; h < ctx.d; ++h) {
    for (uint32_t k = 0; k < ctx.d; ++k) {
      const uint64_t v = (mode == "formula") ? cyclotomic_number_formula(ctx, h, k)
                                             : cyclotomic_number_bruteforce(ctx, h, k);
      out += std::to_string(h) + "," + std::to_string(k) + "," + std::to_string(v) + "\n";
    }
  }
  return out;
}

}  // namespace cyclo6
