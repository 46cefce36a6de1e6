#include "cyclo6/ads_search.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "cyclo6/numeric.hpp"

namespace cyclo6 {

const char* ads_class_name(AdsClass c) {
  switch (c) {
    case AdsClass::DifferenceSet: return "difference-set";
    case AdsClass::AlmostDifferenceSet: return "almost-difference-set";
    case AdsClass::Neither: return "neither";
  }
  return "?";
}

const char* pair_mode_name(PairMode m) { return m == PairMode::SameK ? "same-k" : "all-pairs"; }

AdsReport classify_spectrum(uint64_t n, uint64_t k, DistanceSpectrum spec) {
  AdsReport rep;
  rep.n = n;
  rep.k = k;
  if (spec.histogram.size() == 1) {
    rep.classification = AdsClass::DifferenceSet;
    rep.lambda = spec.histogram.begin()->first;
    rep.t = n - 1;
  } else if (spec.histogram.size() == 2) {
    const auto lo = spec.histogram.begin();
    const auto hi = std::next(lo);
    if (hi->first == lo->first + 1) {
      rep.classification = AdsClass::AlmostDifferenceSet;
      rep.lambda = lo->first;
      rep.t = lo->second;
    }
  }
  rep.spectrum = std::move(spec);
  return rep;
}

AdsReport classify_ads(const SupportSet& s) {
  if (s.k() == 0 || s.k() == s.n) {
    throw std::invalid_argument("classification needs a nonempty proper support");
  }
  return classify_spectrum(s.n, s.k(), spectrum(s));
}

namespace {

// k-subsets of {0..d-1} in lexicographic order of their member lists
std::vector<IndexSet> subsets_of_size(uint32_t d, uint32_t k) {
  std::vector<IndexSet> out;
  std::vector<uint32_t> idx(k);
  for (uint32_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    uint32_t bits = 0;
    for (uint32_t v : idx) bits |= 1u << v;
    out.push_back(IndexSet::from_bits(bits, d));
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && idx[i] == d - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (uint32_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

struct RowKey {
  IndexSet I, J;
  Variant variant;
};

std::vector<RowKey> enumerate_rows(uint32_t d, const SweepOptions& opt) {
  std::vector<uint32_t> ks = opt.k_values;
  if (ks.empty()) {
    for (uint32_t k = 1; k < d; ++k) ks.push_back(k);
  }
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  for (uint32_t k : ks) {
    if (k == 0 || k >= d) throw std::invalid_argument("cardinality k must satisfy 1 <= k < d");
  }

  std::vector<Variant> variants;
  if (opt.variant_c) variants.push_back(Variant::C);
  if (opt.variant_cprime) variants.push_back(Variant::Cprime);
  if (variants.empty()) throw std::invalid_argument("at least one variant required");

  std::vector<RowKey> rows;
  auto emit_pairs = [&](const std::vector<IndexSet>& lhs, const std::vector<IndexSet>& rhs) {
    for (const IndexSet& I : lhs) {
      for (const IndexSet& J : rhs) {
        for (Variant v : variants) rows.push_back({I, J, v});
      }
    }
  };
  if (opt.pair_mode == PairMode::SameK) {
    for (uint32_t k : ks) {
      const auto subs = subsets_of_size(d, k);
      emit_pairs(subs, subs);
    }
  } else {
    for (uint32_t a : ks) {
      const auto lhs = subsets_of_size(d, a);
      for (uint32_t b : ks) {
        emit_pairs(lhs, subsets_of_size(d, b));
      }
    }
  }
  return rows;
}

// per-subset distance profile over class indices h: sum of N[(i+h)][(i'+h)]
struct SubsetProfiles {
  uint32_t d = 0;
  std::vector<std::vector<uint64_t>> same;  // [bits][h]

  static SubsetProfiles build(const CyclotomyContext& ctx) {
    SubsetProfiles sp;
    sp.d = ctx.d;
    sp.same.assign(1u << ctx.d, {});
    return sp;
  }

  const std::vector<uint64_t>& for_set(const CyclotomyContext& ctx, IndexSet S) {
    auto& slot = same[S.bits];
    if (!slot.empty()) return slot;
    slot.assign(ctx.d, 0);
    const auto mem = S.members();
    for (uint32_t h = 0; h < ctx.d; ++h) {
      uint64_t acc = 0;
      for (uint32_t i : mem) {
        for (uint32_t j : mem) acc += ctx.cyclo_num((i + h) % ctx.d, (j + h) % ctx.d);
      }
      slot[h] = acc;
    }
    return slot;
  }
};

DistanceSpectrum fast_row_spectrum(const CyclotomyContext& ctx, const std::vector<uint64_t>& dI,
                                   const std::vector<uint64_t>& dJ, IndexSet I, IndexSet J,
                                   Variant variant) {
  const uint32_t d = ctx.d;
  const uint64_t f = ctx.f;
  const uint32_t cm1 = ctx.class_of_minus1();
  const auto im = I.members();
  const auto jm = J.members();

  DistanceSpectrum spec;
  spec.total = 2 * ctx.p - 1;
  for (uint32_t h = 0; h < d; ++h) {
    uint64_t v0 = dI[h] + dJ[h];
    uint64_t cross = 0;
    for (uint32_t i : im) {
      for (uint32_t j : jm) {
        cross += ctx.cyclo_num((i + h) % d, (j + h) % d);
        cross += ctx.cyclo_num((j + h) % d, (i + h) % d);
      }
    }
    uint64_t v1 = cross;
    if (variant == Variant::Cprime) {
      // w2 ranges over the class c with (w2^{-1}) in D_h
      const uint32_t c = (d - h) % d;
      const uint32_t cneg = (c + cm1) % d;
      v0 += (I.contains(c) ? 1 : 0) + (I.contains(cneg) ? 1 : 0);
      v1 += (J.contains(c) ? 1 : 0) + (J.contains(cneg) ? 1 : 0);
    }
    spec.histogram[static_cast<int64_t>(v0)] += f;
    spec.histogram[static_cast<int64_t>(v1)] += f;
  }
  const uint64_t inter = IndexSet{I.bits & J.bits, d}.k();
  spec.histogram[static_cast<int64_t>(2 * inter * f)] += 1;  // the (1, 0) shift
  return spec;
}

}  // namespace

SearchReport sweep_dhm(const CyclotomyContext& ctx, const SweepOptions& opt) {
  if (ctx.d > 16) throw std::invalid_argument("sweep supports orders up to 16");
  const auto start = std::chrono::steady_clock::now();
  SearchReport rep;
  rep.p = ctx.p;
  rep.d = ctx.d;
  rep.f = ctx.f;
  rep.alpha = ctx.alpha;
  rep.sextic = ctx.sextic_forms;
  rep.A = ctx.A;
  rep.B = ctx.B;
  rep.m_mod3 = ctx.m_mod3;
  rep.pair_mode = opt.pair_mode;
  rep.variant_c = opt.variant_c;
  rep.variant_cprime = opt.variant_cprime;
  rep.k_values = opt.k_values;

  const std::vector<RowKey> keys = enumerate_rows(ctx.d, opt);
  rep.rows.assign(keys.size(), {});

  // pre-drawn selection keeps sampling independent of the execution order
  std::vector<uint8_t> check_row(keys.size(), 0);
  if (opt.naive_check.mode == NaiveCheck::Mode::Full) {
    std::fill(check_row.begin(), check_row.end(), 1);
  } else if (opt.naive_check.mode == NaiveCheck::Mode::Sample) {
    Rng rng(opt.naive_check.seed);
    const uint64_t cut = static_cast<uint64_t>(opt.naive_check.fraction * 1e6);
    for (auto& flag : check_row) flag = rng.below(1000000) < cut ? 1 : 0;
  }

  SubsetProfiles profiles = SubsetProfiles::build(ctx);
  // touch every needed subset up front; the cache is then read-only
  for (const RowKey& key : keys) {
    profiles.for_set(ctx, key.I);
    profiles.for_set(ctx, key.J);
  }

  std::vector<std::string> failures(keys.size());
  const int64_t nrows = static_cast<int64_t>(keys.size());
#pragma omp parallel for schedule(dynamic, 16) if (opt.parallel)
  for (int64_t r = 0; r < nrows; ++r) {
    const RowKey& key = keys[r];
    SearchRow& row = rep.rows[r];
    row.I = key.I;
    row.J = key.J;
    row.variant = key.variant;
    row.n = 2 * ctx.p;
    row.k = (key.I.k() + key.J.k()) * ctx.f + (key.variant == Variant::Cprime ? 1 : 0);

    DistanceSpectrum spec = fast_row_spectrum(ctx, profiles.same[key.I.bits],
                                              profiles.same[key.J.bits], key.I, key.J, key.variant);
    if (spec.weighted_sum() != row.k * row.k - row.k) {
      failures[r] = "difference-mass identity violated";
      continue;
    }
    if (check_row[r]) {
      const DistanceSpectrum naive =
          spectrum_serial(build_dhm_support(ctx, key.I, key.J, key.variant));
      if (!(naive == spec)) {
        failures[r] = "fast spectrum disagrees with set-intersection spectrum";
        continue;
      }
    }
    const AdsReport ads = classify_spectrum(row.n, row.k, std::move(spec));
    row.cls = ads.classification;
    row.lambda = ads.lambda;
    row.t = ads.t;
    row.spectrum = ads.spectrum;
  }

  for (int64_t r = 0; r < nrows; ++r) {
    if (!failures[r].empty()) {
      throw std::logic_error("internal inconsistency at p=" + std::to_string(ctx.p) + " I=" +
                             keys[r].I.str() + " J=" + keys[r].J.str() + " variant=" +
                             variant_name(keys[r].variant) + ": " + failures[r]);
    }
  }
  for (const SearchRow& row : rep.rows) {
    if (row.cls == AdsClass::AlmostDifferenceSet) ++rep.ads_hits;
    if (row.cls == AdsClass::DifferenceSet) ++rep.ds_hits;
  }
  for (uint8_t flag : check_row) rep.naive_checked += flag;
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                    .count();
  return rep;
}

RangeSweepReport sweep_prime_range(uint64_t p_min, uint64_t p_max, uint32_t d,
                                   const SweepOptions& opt) {
  RangeSweepReport rep;
  rep.p_min = p_min;
  rep.p_max = p_max;
  rep.d = d;
  rep.pair_mode = opt.pair_mode;
  rep.variant_c = opt.variant_c;
  rep.variant_cprime = opt.variant_cprime;

  const uint64_t residue_mod = (d == 6) ? 12 : d;
  std::vector<uint64_t> primes;
  for (uint64_t p : primes_in_class(p_max, residue_mod, 1 % residue_mod)) {
    if (p >= p_min && p >= 3) primes.push_back(p);
  }
  rep.primes.assign(primes.size(), {});
  std::vector<std::vector<std::pair<uint64_t, SearchRow>>> witnesses(primes.size());

  SweepOptions inner = opt;
  inner.parallel = false;  // parallelism lives across primes here
  const int64_t n = static_cast<int64_t>(primes.size());
#pragma omp parallel for schedule(dynamic) if (opt.parallel)
  for (int64_t i = 0; i < n; ++i) {
    PrimeSummary& sum = rep.primes[i];
    sum.p = primes[i];
    try {
      const CyclotomyContext ctx = build_context(primes[i], d);
      const SearchReport sweep = sweep_dhm(ctx, inner);
      sum.rows = sweep.rows.size();
      sum.ads_hits = sweep.ads_hits;
      sum.ds_hits = sweep.ds_hits;
      for (const SearchRow& row : sweep.rows) {
        if (row.cls != AdsClass::Neither) witnesses[i].emplace_back(primes[i], row);
      }
    } catch (const std::exception& e) {
      sum.error = e.what();
    }
  }

  for (size_t i = 0; i < primes.size(); ++i) {
    rep.total_rows += rep.primes[i].rows;
    rep.total_hits += rep.primes[i].ads_hits + rep.primes[i].ds_hits;
    for (auto& w : witnesses[i]) rep.hit_rows.push_back(std::move(w));
  }
  return rep;
}

RangeSweepReport verify_nonexistence(uint64_t p_max, const SweepOptions& opt) {
  return sweep_prime_range(13, p_max, 6, opt);
}

CanonicalPairReport classify_canonical_pair(const CyclotomyContext& ctx, Variant v) {
  if (ctx.d != 6) throw std::invalid_argument("canonical pair lives in order-6 cyclotomy");
  const IndexSet I = IndexSet::of({0, 1, 2}, 6);
  const IndexSet J = IndexSet::of({0, 4, 5}, 6);

  CanonicalPairReport rep;
  rep.p = ctx.p;
  rep.variant = v;
  const SupportSet support = build_dhm_support(ctx, I, J, v);
  rep.ads = classify_ads(support);

  if (ctx.sextic_forms) {
    for (uint32_t w1 = 0; w1 <= 1; ++w1) {
      for (uint32_t h = 0; h < 6; ++h) {
        const uint64_t w2 = pow_mod(ctx.alpha, (6 - h) % 6, ctx.p);
        Rational closed = dc_form_value(ctx, w1, h);
        if (v == Variant::Cprime) {
          closed = closed +
                   Rational(static_cast<long long>(dc_origin_correction(ctx, I, J, w1, w2)));
        }
        rep.closed_values.push_back({"dC[w1=" + std::to_string(w1) + "][D" + std::to_string(h) +
                                         "]",
                                     closed, difference_function(support, w1, w2)});
      }
    }
    rep.closed_values.push_back(
        {"dC[w1=1,w2=0]", dc_form_value(ctx, 1, std::nullopt), difference_function(support, 1, 0)});
  }
  return rep;
}

}  // namespace cyclo6
