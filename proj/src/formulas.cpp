#include "cyclo6/formulas.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cyclo6/distance.hpp"

namespace cyclo6 {

namespace {

// reduction table: entry (h,k) names the irreducible pair, as an index into
// kIrreducible6
constexpr uint8_t kReduce[6][6] = {
    {0, 1, 2, 3, 4, 5},
    {1, 5, 6, 7, 8, 6},
    {2, 6, 4, 8, 9, 7},
    {3, 7, 8, 3, 7, 8},
    {4, 8, 9, 7, 2, 6},
    {5, 6, 7, 8, 6, 1},
};

struct Quad {
  int64_t cp, cA, cB, c1;
};

// 36*(h,k)_6 by irreducible index and m mod 3 column
constexpr Quad kOrder6[3][10] = {
    // m == 0 (mod 3)
    {{1, -20, 0, -17},
     {1, 4, 18, -5},
     {1, 4, 6, -5},
     {1, 4, 0, -5},
     {1, 4, -6, -5},
     {1, 4, -18, -5},
     {1, -2, 0, 1},
     {1, -2, 0, 1},
     {1, -2, 0, 1},
     {1, -2, 0, 1}},
    // m == 1 (mod 3)
    {{1, -8, 6, -17},
     {1, 4, 12, -5},
     {1, 4, -6, -5},
     {1, 4, -6, -5},
     {1, -8, 0, -5},
     {1, 4, -6, -5},
     {1, -2, -6, 1},
     {1, -2, -6, 1},
     {1, -2, 12, 1},
     {1, 10, 6, 1}},
    // m == 2 (mod 3)
    {{1, -8, -6, -17},
     {1, 4, 6, -5},
     {1, -8, 0, -5},
     {1, 4, 6, -5},
     {1, 4, 6, -5},
     {1, 4, -12, -5},
     {1, -2, 6, 1},
     {1, -2, -12, 1},
     {1, -2, 6, 1},
     {1, 10, -6, 1}},
};

// published closed forms for d_I, d_J, d_IJ (canonical pair), denominator 12,
// indexed [m mod 3][h]
constexpr Quad kDistI[3][6] = {
    {{3, 0, 8, -15}, {3, 0, -8, -3}, {3, 0, 0, -3}, {3, 0, 8, -3}, {3, 0, -8, -15}, {3, 0, 0, -15}},
    {{3, 0, 0, -15}, {3, -4, -4, -3}, {3, 4, 4, -3}, {3, 0, 0, -3}, {3, -4, -4, -15}, {3, -4, -4, 15}},
    {{3, -4, 4, -15}, {3, 0, 0, -3}, {3, 4, -4, -3}, {3, -4, 4, -3}, {3, 0, 0, -15}, {3, 4, -4, -15}},
};

constexpr Quad kDistJ[3][6] = {
    {{3, 0, -8, -15}, {3, 0, 0, -15}, {3, 0, 8, -15}, {3, 0, -8, -3}, {3, 0, 0, -3}, {3, 0, 8, -3}},
    {{3, -4, -4, -15}, {3, 4, 4, -15}, {3, 0, 0, -15}, {3, -4, -4, -3}, {3, 4, 4, -3}, {3, 0, 0, -3}},
    {{3, 0, 0, -15}, {3, 4, -4, -15}, {3, -4, 4, -15}, {3, 0, 0, -3}, {3, 4, -4, -3}, {3, -4, 4, -3}},
};

constexpr Quad kDistIJ[3][6] = {
    {{3, -4, 0, -11}, {3, 2, 2, -5}, {3, 2, -2, -5}, {3, -4, 0, 1}, {3, 2, 2, -5}, {3, 2, -2, -5}},
    {{3, 0, 4, -11}, {3, 2, -6, -5}, {3, -2, 2, -5}, {3, 0, 4, 1}, {3, 2, -6, -5}, {3, -2, 2, -5}},
    {{3, 0, -4, -11}, {3, -2, -2, -5}, {3, 2, 6, -5}, {3, 0, -4, 1}, {3, -2, -2, -5}, {3, 2, 6, -5}},
};

// published closed forms for d_C, denominator 6, indexed [m mod 3][w1][h]
constexpr Quad kDistC[3][2][6] = {
    {{{3, 0, 0, -15}, {3, 0, -4, -9}, {3, 0, 4, -9}, {3, 0, 0, -3}, {3, 0, -4, -9}, {3, 0, 4, -9}},
     {{3, -4, 0, -11}, {3, 2, 2, -5}, {3, 2, -2, -5}, {3, -4, 0, 1}, {3, 2, 2, -5}, {3, 2, -2, -5}}},
    {{{3, -2, -2, -15}, {3, 0, 0, -9}, {3, 2, 2, -9}, {3, -2, -2, -3}, {3, 0, 0, -9}, {3, 2, 2, -9}},
     {{3, 0, 4, -11}, {3, 2, -6, -5}, {3, -2, 2, -5}, {3, 0, 4, 1}, {3, 2, -6, -5}, {3, -2, 2, -5}}},
    {{{3, -2, 2, -15}, {3, 2, -2, -9}, {3, 0, 0, -9}, {3, -2, 2, -3}, {3, 2, -2, -9}, {3, 0, 0, -9}},
     {{3, 0, -4, -11}, {3, -2, -2, -5}, {3, 2, 6, -5}, {3, 0, -4, 1}, {3, -2, -2, -5}, {3, 2, 6, -5}}},
};

constexpr uint32_t kCanonicalI[3] = {0, 1, 2};
constexpr uint32_t kCanonicalJ[3] = {0, 4, 5};

void require_sextic(const CyclotomyContext& ctx) {
  if (ctx.d != 6 || !ctx.sextic_forms) {
    throw std::invalid_argument("order-6 closed forms unavailable: need d=6 with f even");
  }
}

void check_h(uint32_t h) {
  if (h >= 6) throw std::invalid_argument("class index out of range");
}

// representative w in Z_p* whose inverse lies in class h
uint64_t class_rep_inverse_in(const CyclotomyContext& ctx, uint32_t h) {
  return pow_mod(ctx.alpha, (6 - h) % 6, ctx.p);
}

AffineForm sum_pairs(std::span<const uint32_t> s1, std::span<const uint32_t> s2, uint32_t m_mod3,
                     uint32_t h) {
  int64_t cp = 0, cA = 0, cB = 0, c1 = 0;
  for (uint32_t a : s1) {
    for (uint32_t b : s2) {
      const Quad& q = kOrder6[m_mod3][kReduce[(a + h) % 6][(b + h) % 6]];
      cp += q.cp;
      cA += q.cA;
      cB += q.cB;
      c1 += q.c1;
    }
  }
  return AffineForm::make(cp, cA, cB, c1, 36);
}

}  // namespace

IrreducibleId reduce_pair(uint32_t h, uint32_t k) {
  if (h >= 6 || k >= 6) throw std::invalid_argument("class index out of range");
  return kIrreducible6[kReduce[h][k]];
}

uint32_t irreducible_index(IrreducibleId id) {
  for (uint32_t i = 0; i < kIrreducible6.size(); ++i) {
    if (kIrreducible6[i] == id) return i;
  }
  throw std::invalid_argument("not an irreducible pair");
}

AffineForm AffineForm::make(int64_t cp, int64_t cA, int64_t cB, int64_t c1, int64_t den) {
  if (den == 0) throw std::invalid_argument("affine form with zero denominator");
  if (den < 0) {
    cp = -cp;
    cA = -cA;
    cB = -cB;
    c1 = -c1;
    den = -den;
  }
  int64_t g = den;
  for (int64_t v : {cp, cA, cB, c1}) g = std::gcd(g, v < 0 ? -v : v);
  if (g > 1) {
    cp /= g;
    cA /= g;
    cB /= g;
    c1 /= g;
    den /= g;
  }
  return AffineForm{cp, cA, cB, c1, den};
}

Rational AffineForm::eval(uint64_t p, int64_t A, int64_t B) const {
  const long long numer = cp * static_cast<long long>(p) + cA * A + cB * B + c1;
  return Rational(numer, den);
}

std::string AffineForm::str() const {
  std::string s = "(";
  auto term = [&s](int64_t c, const char* name) {
    if (c == 0) return;
    if (!s.ends_with("(")) s += (c > 0) ? "+" : "-";
    else if (c < 0) s += "-";
    const int64_t a = c < 0 ? -c : c;
    if (a != 1 || name[0] == '\0') s += std::to_string(a);
    s += name;
  };
  term(cp, "p");
  term(cA, "A");
  term(cB, "B");
  term(c1, "");
  if (s.ends_with("(")) s += "0";
  s += ")";
  if (den != 1) s += "/" + std::to_string(den);
  return s;
}

AffineForm operator+(const AffineForm& a, const AffineForm& b) {
  const int64_t den = std::lcm(a.den, b.den);
  const int64_t ma = den / a.den;
  const int64_t mb = den / b.den;
  return AffineForm::make(a.cp * ma + b.cp * mb, a.cA * ma + b.cA * mb, a.cB * ma + b.cB * mb,
                          a.c1 * ma + b.c1 * mb, den);
}

AffineForm order6_formula(IrreducibleId id, uint32_t m_mod3) {
  if (m_mod3 >= 3) throw std::invalid_argument("m mod 3 out of range");
  const Quad& q = kOrder6[m_mod3][irreducible_index(id)];
  return AffineForm::make(q.cp, q.cA, q.cB, q.c1, 36);
}

uint64_t cyclotomic_number_formula(const CyclotomyContext& ctx, uint32_t h, uint32_t k) {
  require_sextic(ctx);
  const Rational v = order6_formula(reduce_pair(h, k), ctx.m_mod3).eval(ctx.p, ctx.A, ctx.B);
  if (!v.is_integer() || v.num < 0) {
    throw std::runtime_error("convention mismatch: (" + std::to_string(h) + "," +
                             std::to_string(k) + ")_6 formula evaluates to non-count " + v.str());
  }
  return static_cast<uint64_t>(v.num);
}

const char* dist_kind_name(DistKind k) {
  switch (k) {
    case DistKind::dI: return "dI";
    case DistKind::dJ: return "dJ";
    case DistKind::dIJ: return "dIJ";
  }
  return "?";
}

AffineForm dist_form_published(DistKind kind, uint32_t m_mod3, uint32_t h) {
  if (m_mod3 >= 3) throw std::invalid_argument("m mod 3 out of range");
  check_h(h);
  const Quad* row = nullptr;
  switch (kind) {
    case DistKind::dI: row = kDistI[m_mod3]; break;
    case DistKind::dJ: row = kDistJ[m_mod3]; break;
    case DistKind::dIJ: row = kDistIJ[m_mod3]; break;
  }
  const Quad& q = row[h];
  return AffineForm::make(q.cp, q.cA, q.cB, q.c1, 12);
}

Rational dist_form_value(const CyclotomyContext& ctx, DistKind kind, uint32_t h) {
  require_sextic(ctx);
  return dist_form_published(kind, ctx.m_mod3, h).eval(ctx.p, ctx.A, ctx.B);
}

AffineForm dc_form_published(uint32_t m_mod3, uint32_t w1, uint32_t h) {
  if (m_mod3 >= 3) throw std::invalid_argument("m mod 3 out of range");
  if (w1 > 1) throw std::invalid_argument("w1 must be 0 or 1");
  check_h(h);
  const Quad& q = kDistC[m_mod3][w1][h];
  return AffineForm::make(q.cp, q.cA, q.cB, q.c1, 6);
}

Rational dc_form_value(const CyclotomyContext& ctx, uint32_t w1, std::optional<uint32_t> h) {
  require_sextic(ctx);
  if (!h.has_value()) {
    if (w1 == 1) return Rational(static_cast<long long>(ctx.p) - 1, 3);
    return Rational(static_cast<long long>(ctx.p) - 1);  // |D_I| + |D_J| = 6f
  }
  return dc_form_published(ctx.m_mod3, w1, *h).eval(ctx.p, ctx.A, ctx.B);
}

AffineForm dist_form_derived(DistKind kind, uint32_t m_mod3, uint32_t h) {
  if (m_mod3 >= 3) throw std::invalid_argument("m mod 3 out of range");
  check_h(h);
  switch (kind) {
    case DistKind::dI: return sum_pairs(kCanonicalI, kCanonicalI, m_mod3, h);
    case DistKind::dJ: return sum_pairs(kCanonicalJ, kCanonicalJ, m_mod3, h);
    case DistKind::dIJ: return sum_pairs(kCanonicalI, kCanonicalJ, m_mod3, h);
  }
  throw std::invalid_argument("bad kind");
}

AffineForm dc_form_derived(uint32_t m_mod3, uint32_t w1, uint32_t h) {
  if (w1 > 1) throw std::invalid_argument("w1 must be 0 or 1");
  if (w1 == 0) {
    return dist_form_derived(DistKind::dI, m_mod3, h) + dist_form_derived(DistKind::dJ, m_mod3, h);
  }
  return sum_pairs(kCanonicalI, kCanonicalJ, m_mod3, h) +
         sum_pairs(kCanonicalJ, kCanonicalI, m_mod3, h);
}

Calibration calibrate_signs(const CyclotomyContext& ctx) {
  if (ctx.d != 6) throw std::invalid_argument("sign calibration requires d = 6");
  if (ctx.f % 2 != 0) throw std::invalid_argument("order-6 formulas unavailable: f odd");
  const QuadDecomposition q = decompose_quadratic_form(ctx.p);
  const uint32_t m3 = static_cast<uint32_t>(ctx.log2_alpha % 3);
  const int64_t oracle01 = static_cast<int64_t>(cyclotomic_number_bruteforce(ctx, 0, 1));
  const AffineForm f01 = order6_formula({0, 1}, m3);

  std::vector<Calibration> hits;
  for (int sa : {1, -1}) {
    for (int sb : {1, -1}) {
      const Rational v = f01.eval(ctx.p, sa * q.A, sb * q.B);
      if (v.is_integer() && v.num >= 0 && v.num == oracle01) {
        hits.push_back({sa * q.A, sb * q.B, m3});
      }
    }
  }
  if (hits.empty()) {
    throw std::logic_error("sign calibration failed for p = " + std::to_string(ctx.p) +
                           ": no sign choice matches the brute-force (0,1)_6");
  }
  if (hits.size() > 1) {
    throw std::logic_error("sign calibration ambiguous for p = " + std::to_string(ctx.p));
  }

  const Calibration cal = hits.front();
  for (const IrreducibleId id : kIrreducible6) {
    const Rational v = order6_formula(id, m3).eval(ctx.p, cal.A, cal.B);
    const int64_t oracle = static_cast<int64_t>(cyclotomic_number_bruteforce(ctx, id.h, id.k));
    if (!v.is_integer() || v.num != oracle) {
      throw std::logic_error("sign calibration inconsistent for p = " + std::to_string(ctx.p) +
                             " at (" + std::to_string(id.h) + "," + std::to_string(id.k) + ")_6");
    }
  }
  return cal;
}

size_t DiscrepancyReport::mismatches() const {
  size_t n = 0;
  for (const auto& c : checks) {
    if (!c.match) ++n;
  }
  return n;
}

DiscrepancyReport verify_formulas(const CyclotomyContext& ctx) {
  require_sextic(ctx);
  DiscrepancyReport rep;
  rep.p = ctx.p;
  rep.alpha = ctx.alpha;
  rep.A = ctx.A;
  rep.B = ctx.B;
  rep.m_mod3 = ctx.m_mod3;

  auto add = [&rep](std::string entry, Rational formula, int64_t oracle, AffineForm form) {
    FormulaCheck c;
    c.entry = std::move(entry);
    c.formula_value = formula;
    c.oracle_value = oracle;
    c.match = formula.is_integer() && formula.num == oracle;
    c.published_form = form;
    rep.checks.push_back(std::move(c));
  };

  for (uint32_t h = 0; h < 6; ++h) {
    for (uint32_t k = 0; k < 6; ++k) {
      const AffineForm form = order6_formula(reduce_pair(h, k), ctx.m_mod3);
      const int64_t oracle = static_cast<int64_t>(cyclotomic_number_bruteforce(ctx, h, k));
      add("cn(" + std::to_string(h) + "," + std::to_string(k) + ")",
          form.eval(ctx.p, ctx.A, ctx.B), oracle, form);
    }
  }

  const IndexSet I = IndexSet::of({0, 1, 2}, 6);
  const IndexSet J = IndexSet::of({0, 4, 5}, 6);
  const struct {
    DistKind kind;
    const char* name;
  } kinds[] = {{DistKind::dI, "dI"}, {DistKind::dJ, "dJ"}, {DistKind::dIJ, "dIJ"}};
  for (const auto& [kind, name] : kinds) {
    for (uint32_t h = 0; h < 6; ++h) {
      const uint64_t w = class_rep_inverse_in(ctx, h);
      const uint64_t oracle = kind == DistKind::dI    ? dist_union(ctx, I, w)
                              : kind == DistKind::dJ ? dist_union(ctx, J, w)
                                                     : dist_union_pair(ctx, I, J, w);
      add(std::string(name) + "[D" + std::to_string(h) + "]", dist_form_value(ctx, kind, h),
          static_cast<int64_t>(oracle), dist_form_published(kind, ctx.m_mod3, h));
    }
  }

  const SupportSet c_support = build_dhm_support(ctx, I, J, Variant::C);
  for (uint32_t w1 = 0; w1 <= 1; ++w1) {
    for (uint32_t h = 0; h < 6; ++h) {
      const uint64_t w2 = class_rep_inverse_in(ctx, h);
      add("dC[w1=" + std::to_string(w1) + "][D" + std::to_string(h) + "]",
          dc_form_value(ctx, w1, h), static_cast<int64_t>(difference_function(c_support, w1, w2)),
          dc_form_published(ctx.m_mod3, w1, h));
    }
  }
  add("dC[w1=1,w2=0]", dc_form_value(ctx, 1, std::nullopt),
      static_cast<int64_t>(difference_function(c_support, 1, 0)),
      AffineForm::make(2, 0, 0, -2, 6));

  return rep;
}

std::optional<AffineForm> fit_affine_form(std::span<const std::array<int64_t, 3>> pab,
                                          std::span<const Rational> values) {
  if (pab.size() != values.size() || pab.size() < 4) return std::nullopt;
  const size_t rows = pab.size();
  // augmented matrix [p A B 1 | v], reduced by Gaussian elimination
  std::vector<std::array<Rational, 5>> m(rows);
  for (size_t i = 0; i < rows; ++i) {
    m[i] = {Rational(pab[i][0]), Rational(pab[i][1]), Rational(pab[i][2]), Rational(1), values[i]};
  }
  size_t rank = 0;
  for (size_t col = 0; col < 4 && rank < rows; ++col) {
    size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == Rational(0)) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    const Rational inv = Rational(1) / m[rank][col];
    for (auto& x : m[rank]) x = x * inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == Rational(0)) continue;
      const Rational factor = m[r][col];
      for (size_t c = 0; c < 5; ++c) m[r][c] = m[r][c] - factor * m[rank][c];
    }
    ++rank;
  }
  if (rank < 4) return std::nullopt;  // underdetermined
  for (size_t r = rank; r < rows; ++r) {
    if (!(m[r][4] == Rational(0))) return std::nullopt;  // inconsistent
  }
  // solution column 4 of the four pivot rows, in column order p, A, B, 1
  std::array<Rational, 4> sol{};
  for (size_t r = 0; r < 4; ++r) {
    size_t col = 0;
    while (col < 4 && m[r][col] == Rational(0)) ++col;
    if (col == 4) return std::nullopt;
    sol[col] = m[r][4];
  }
  long long den = 1;
  for (const auto& s : sol) den = std::lcm(den, s.den);
  return AffineForm::make(sol[0].num * (den / sol[0].den), sol[1].num * (den / sol[1].den),
                          sol[2].num * (den / sol[2].den), sol[3].num * (den / sol[3].den), den);
}

std::vector<const EntryStatus*> ErrataReport::flagged() const {
  std::vector<const EntryStatus*> out;
  for (const auto& e : entries) {
    if (e.mismatches > 0) out.push_back(&e);
  }
  return out;
}

ErrataReport aggregate_checks(std::span<const DiscrepancyReport> reports, size_t min_contexts) {
  ErrataReport out;
  out.min_contexts = min_contexts;
  out.contexts = reports.size();

  std::vector<const DiscrepancyReport*> sorted;
  sorted.reserve(reports.size());
  for (const auto& r : reports) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(),
            [](const DiscrepancyReport* a, const DiscrepancyReport* b) { return a->p < b->p; });

  std::map<std::pair<uint32_t, size_t>, EntryStatus> agg;  // (m class, check position)
  std::map<std::pair<uint32_t, size_t>, std::vector<std::array<int64_t, 3>>> points;
  std::map<std::pair<uint32_t, size_t>, std::vector<Rational>> oracles;

  for (const DiscrepancyReport* rep : sorted) {
    out.p_max = std::max(out.p_max, rep->p);
    out.per_class[rep->m_mod3]++;
    for (size_t i = 0; i < rep->checks.size(); ++i) {
      const FormulaCheck& c = rep->checks[i];
      const auto key = std::make_pair(rep->m_mod3, i);
      EntryStatus& st = agg[key];
      if (st.contexts == 0) {
        st.entry = c.entry;
        st.m_mod3 = rep->m_mod3;
        st.published = c.published_form;
      }
      st.contexts++;
      if (!c.match) st.mismatches++;
      points[key].push_back({static_cast<int64_t>(rep->p), rep->A, rep->B});
      oracles[key].push_back(Rational(c.oracle_value));
    }
  }

  for (auto& [key, st] : agg) {
    if (st.mismatches == st.contexts && st.mismatches > 0) {
      st.corrected = fit_affine_form(points[key], oracles[key]);
    }
    out.entries.push_back(std::move(st));
  }
  return out;
}

ErrataReport derive_errata(uint64_t p_max, size_t min_contexts, bool parallel) {
  const std::vector<uint64_t> primes = primes_in_class(p_max, 12, 1);
  std::vector<DiscrepancyReport> reports(primes.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long i = 0; i < static_cast<long>(primes.size()); ++i) {
    reports[i] = verify_formulas(build_context(primes[i], 6));
  }
  ErrataReport out = aggregate_checks(reports, min_contexts);
  out.p_max = p_max;
  return out;
}

}  // namespace cyclo6
