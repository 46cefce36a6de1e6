#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclo6/distance.hpp"
#include "cyclo6/formulas.hpp"

namespace cyclo6 {

enum class AdsClass { DifferenceSet, AlmostDifferenceSet, Neither };
const char* ads_class_name(AdsClass c);

struct AdsReport {
  AdsClass classification = AdsClass::Neither;
  uint64_t n = 0;
  uint64_t k = 0;
  int64_t lambda = 0;  // DS: the single value; ADS: the smaller value
  uint64_t t = 0;      // ADS: multiplicity of lambda; DS: n-1
  DistanceSpectrum spectrum;
};

// strict reading: DS means a one-valued spectrum, ADS exactly two adjacent
// values; anything else (including two values with gap > 1) is Neither
AdsReport classify_spectrum(uint64_t n, uint64_t k, DistanceSpectrum spec);
AdsReport classify_ads(const SupportSet& s);  // rejects empty and full supports

enum class PairMode { SameK, AllPairs };
const char* pair_mode_name(PairMode m);

struct NaiveCheck {
  enum class Mode { None, Full, Sample };
  Mode mode = Mode::None;
  double fraction = 0.05;  // Sample only
  uint64_t seed = 1;
  static NaiveCheck none() { return {}; }
  static NaiveCheck full() { return {Mode::Full, 0, 0}; }
  static NaiveCheck sample(double fraction, uint64_t seed) {
    return {Mode::Sample, fraction, seed};
  }
};

struct SweepOptions {
  std::vector<uint32_t> k_values;  // empty = all of 1..d-1
  bool variant_c = true;
  bool variant_cprime = true;
  PairMode pair_mode = PairMode::AllPairs;
  NaiveCheck naive_check;
  bool parallel = true;
};

struct SearchRow {
  IndexSet I, J;
  Variant variant = Variant::C;
  AdsClass cls = AdsClass::Neither;
  uint64_t n = 0;
  uint64_t k = 0;
  int64_t lambda = 0;
  uint64_t t = 0;
  DistanceSpectrum spectrum;
};

struct SearchReport {
  uint64_t p = 0;
  uint32_t d = 0;
  uint64_t f = 0;
  uint64_t alpha = 0;
  bool sextic = false;
  int64_t A = 0;
  int64_t B = 0;
  uint32_t m_mod3 = 0;
  PairMode pair_mode = PairMode::AllPairs;
  bool variant_c = true;
  bool variant_cprime = true;
  std::vector<uint32_t> k_values;
  std::vector<SearchRow> rows;  // canonical order: (|I|, |J|, I lex, J lex, variant)
  size_t ads_hits = 0;
  size_t ds_hits = 0;
  size_t naive_checked = 0;
  double wall_ms = 0;  // never serialized
};

// classifies every DHM support over the requested (I, J, variant) space using
// the cyclotomic-number fast path; optional cross-check against the literal
// set-intersection spectrum
SearchReport sweep_dhm(const CyclotomyContext& ctx, const SweepOptions& opt);

struct PrimeSummary {
  uint64_t p = 0;
  size_t rows = 0;
  size_t ads_hits = 0;
  size_t ds_hits = 0;
  std::string error;  // nonempty if this prime failed and was skipped
};

struct RangeSweepReport {
  uint64_t p_min = 0;
  uint64_t p_max = 0;
  uint32_t d = 6;
  PairMode pair_mode = PairMode::AllPairs;
  bool variant_c = true;
  bool variant_cprime = true;
  std::vector<PrimeSummary> primes;                      // ascending p
  std::vector<std::pair<uint64_t, SearchRow>> hit_rows;  // every ADS/DS found, with its p
  size_t total_rows = 0;
  size_t total_hits = 0;  // ADS + DS rows
};

// Sweeps every qualifying prime in [p_min, p_max]: d must divide p-1, and for
// d = 6 the sweep keeps to p == 1 (mod 12), the domain of the order-6 closed
// forms. Per-prime failures are recorded in the summary, never fatal.
RangeSweepReport sweep_prime_range(uint64_t p_min, uint64_t p_max, uint32_t d,
                                   const SweepOptions& opt);

// order-6 nonexistence check: any hit is a counterexample witness in
// hit_rows, reported rather than thrown
RangeSweepReport verify_nonexistence(uint64_t p_max, const SweepOptions& opt);

struct CanonicalPairReport {
  uint64_t p = 0;
  Variant variant = Variant::C;
  AdsReport ads;
  // closed-form value per (w1, class of w2^{-1}) plus the (1,0) entry,
  // alongside the directly observed value
  struct ClosedValue {
    std::string entry;
    Rational closed;
    uint64_t observed = 0;
  };
  std::vector<ClosedValue> closed_values;  // empty when closed forms unavailable
};

// classifies the canonical pair I={0,1,2}, J={0,4,5} and lays the published
// d_C value distribution next to the observed spectrum
CanonicalPairReport classify_canonical_pair(const CyclotomyContext& ctx, Variant v);

}  // namespace cyclo6
