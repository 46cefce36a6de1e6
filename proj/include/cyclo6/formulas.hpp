#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyclo6/field_core.hpp"
#include "cyclo6/numeric.hpp"

namespace cyclo6 {

// the ten irreducible order-6 cyclotomic numbers; every (h,k) reduces to one
struct IrreducibleId {
  uint8_t h = 0;
  uint8_t k = 0;
  friend bool operator==(const IrreducibleId&, const IrreducibleId&) = default;
};

inline constexpr std::array<IrreducibleId, 10> kIrreducible6 = {
    {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {2, 4}}};

IrreducibleId reduce_pair(uint32_t h, uint32_t k);
uint32_t irreducible_index(IrreducibleId id);

// value = (cp*p + cA*A + cB*B + c1) / den, kept normalized (gcd 1, den > 0)
struct AffineForm {
  int64_t cp = 0;
  int64_t cA = 0;
  int64_t cB = 0;
  int64_t c1 = 0;
  int64_t den = 1;

  static AffineForm make(int64_t cp, int64_t cA, int64_t cB, int64_t c1, int64_t den);
  Rational eval(uint64_t p, int64_t A, int64_t B) const;
  std::string str() const;
  friend bool operator==(const AffineForm&, const AffineForm&) = default;
  friend AffineForm operator+(const AffineForm& a, const AffineForm& b);
};

// 36*(h,k)_6 as an affine form in <p, A, B, 1>, column picked by m mod 3
AffineForm order6_formula(IrreducibleId id, uint32_t m_mod3);

// reduces (h,k), evaluates the order-6 formula and divides by 36; throws a
// "convention mismatch" error when the value is negative or not divisible
uint64_t cyclotomic_number_formula(const CyclotomyContext& ctx, uint32_t h, uint32_t k);

// distance functions of the canonical index pair I={0,1,2}, J={0,4,5}
enum class DistKind { dI, dJ, dIJ };
const char* dist_kind_name(DistKind k);

// Published closed forms, transcribed verbatim (any misprint included --
// verify_formulas is what detects those). h is the class of w^{-1}.
AffineForm dist_form_published(DistKind kind, uint32_t m_mod3, uint32_t h);
Rational dist_form_value(const CyclotomyContext& ctx, DistKind kind, uint32_t h);

// published closed forms for d_C over GF(2) x Z_p, canonical pair; h is the
// class of w2^{-1}; rows with w2 == 0 are handled by dc_form_value
AffineForm dc_form_published(uint32_t m_mod3, uint32_t w1, uint32_t h);
// h == nullopt means w2 == 0: (w1=1) -> (p-1)/3, (w1=0) -> |D_I|+|D_J| = p-1
Rational dc_form_value(const CyclotomyContext& ctx, uint32_t w1, std::optional<uint32_t> h);

// Re-derivation of the closed forms by expanding the distance function into
// cyclotomic numbers, reducing each via the reduction table and summing the
// order-6 formula coefficients. Independent of the published tables.
AffineForm dist_form_derived(DistKind kind, uint32_t m_mod3, uint32_t h);
AffineForm dc_form_derived(uint32_t m_mod3, uint32_t w1, uint32_t h);

struct FormulaCheck {
  std::string entry;         // stable id: "cn(2,5)", "dI[D5]", "dC[w1=0][D2]", ...
  Rational formula_value;    // published closed form at this context
  int64_t oracle_value = 0;  // direct enumeration
  bool match = false;
  std::optional<AffineForm> published_form;  // symbolic form behind formula_value
};

struct DiscrepancyReport {
  uint64_t p = 0;
  uint64_t alpha = 0;
  int64_t A = 0;
  int64_t B = 0;
  uint32_t m_mod3 = 0;
  std::vector<FormulaCheck> checks;  // fixed order: cn pairs, dI, dJ, dIJ, dC
  size_t mismatches() const;
};

// compares every closed form against direct enumeration; mismatches are
// data, not errors
DiscrepancyReport verify_formulas(const CyclotomyContext& ctx);

// exact affine-form recovery from (p, A, B) -> value samples; returns the
// unique form fitting every sample, or nothing
std::optional<AffineForm> fit_affine_form(std::span<const std::array<int64_t, 3>> pab,
                                          std::span<const Rational> values);

struct EntryStatus {
  std::string entry;
  uint32_t m_mod3 = 0;
  size_t contexts = 0;
  size_t mismatches = 0;
  std::optional<AffineForm> published;
  std::optional<AffineForm> corrected;  // fitted from oracle values when the entry always mismatches
  bool persistent() const { return mismatches == 0 || mismatches == contexts; }
};

struct ErrataReport {
  uint64_t p_max = 0;
  size_t contexts = 0;
  std::array<size_t, 3> per_class{};  // contexts per m mod 3 residue
  size_t min_contexts = 0;            // threshold for calling a correction proven
  std::vector<EntryStatus> entries;   // grouped by (entry id, m class)
  std::vector<const EntryStatus*> flagged() const;
};

ErrataReport aggregate_checks(std::span<const DiscrepancyReport> reports, size_t min_contexts);

// verify_formulas across all p == 1 (mod 12) up to p_max, aggregated
ErrataReport derive_errata(uint64_t p_max, size_t min_contexts = 25, bool parallel = true);

}  // namespace cyclo6
