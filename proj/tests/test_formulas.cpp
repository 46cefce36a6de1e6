#include <doctest.h>

#include <set>
#include <stdexcept>

#include "cyclo6/distance.hpp"
#include "cyclo6/formulas.hpp"
#include "cyclo6/numeric.hpp"

using namespace cyclo6;

TEST_SUITE_BEGIN("formulas");

TEST_CASE("pair reduction table") {
  CHECK_EQ(reduce_pair(2, 5), IrreducibleId{1, 3});
  CHECK_EQ(reduce_pair(0, 0), IrreducibleId{0, 0});
  CHECK_EQ(reduce_pair(5, 1), IrreducibleId{1, 2});
  for (uint32_t k = 0; k < 6; ++k) {
    CHECK_EQ(reduce_pair(0, k), (IrreducibleId{0, static_cast<uint8_t>(k)}));
  }

  // the table is symmetric and lands in the ten irreducibles
  std::set<uint32_t> seen;
  for (uint32_t h = 0; h < 6; ++h) {
    for (uint32_t k = 0; k < 6; ++k) {
      CHECK_EQ(reduce_pair(h, k), reduce_pair(k, h));
      seen.insert(irreducible_index(reduce_pair(h, k)));
    }
  }
  CHECK_EQ(seen.size(), 10);
  CHECK_THROWS_AS(reduce_pair(6, 0), std::invalid_argument);

  // an irreducible pair reduces to itself
  for (const IrreducibleId id : kIrreducible6) CHECK_EQ(reduce_pair(id.h, id.k), id);
}

TEST_CASE("closed-form cyclotomic numbers at p=13") {
  const CyclotomyContext ctx = build_context(13, 6);
  // 36*(0,1) = p-5+4A+12B = 36
  CHECK_EQ(order6_formula({0, 1}, 1).eval(13, 1, 2), Rational(1));
  CHECK_EQ(cyclotomic_number_formula(ctx, 0, 1), 1);
  // 36*(2,4) = p+1+10A+6B = 36
  CHECK_EQ(cyclotomic_number_formula(ctx, 2, 4), 1);
  // 36*(0,0) = p-17-8A+6B = 0
  CHECK_EQ(cyclotomic_number_formula(ctx, 0, 0), 0);

  // the sign candidates the calibration must reject
  const AffineForm f01 = order6_formula({0, 1}, 1);
  CHECK_EQ(f01.eval(13, 1, -2), Rational(-12, 36));  // negative numerator
  CHECK_EQ(f01.eval(13, -1, 2), Rational(28, 36));   // not divisible by 36
  CHECK_FALSE(f01.eval(13, -1, 2).is_integer());

  const CyclotomyContext odd = build_context(19, 6);
  CHECK_THROWS_AS(cyclotomic_number_formula(odd, 0, 1), std::invalid_argument);
}

TEST_CASE("formula equals oracle for every pair") {
  for (uint64_t p : {13ull, 37ull, 61ull, 73ull, 97ull}) {
    const CyclotomyContext ctx = build_context(p, 6);
    for (uint32_t h = 0; h < 6; ++h) {
      for (uint32_t k = 0; k < 6; ++k) {
        CHECK_EQ(cyclotomic_number_formula(ctx, h, k), cyclotomic_number_bruteforce(ctx, h, k));
      }
    }
  }
}

TEST_CASE("published distance forms at p=13") {
  const CyclotomyContext ctx = build_context(13, 6);
  CHECK_EQ(dist_form_value(ctx, DistKind::dI, 0), Rational(2));
  // the misprinted D_5 entry of the m=1 case is non-integral here
  CHECK_EQ(dist_form_value(ctx, DistKind::dI, 5), Rational(7, 2));
  CHECK_EQ(dist_form_value(ctx, DistKind::dIJ, 0), Rational(3));
  CHECK_EQ(dc_form_value(ctx, 1, std::nullopt), Rational(4));   // (p-1)/3
  CHECK_EQ(dc_form_value(ctx, 0, 0), Rational(3));              // (3p-2A-2B-15)/6
  CHECK_EQ(dc_form_value(ctx, 0, std::nullopt), Rational(12));  // |D_I|+|D_J|
}

TEST_CASE("expansion identity: distance equals cyclotomic-number block sum") {
  const IndexSet I = IndexSet::of({0, 1, 2}, 6);
  for (uint64_t p : {13ull, 37ull}) {
    const CyclotomyContext ctx = build_context(p, 6);
    for (uint32_t h = 0; h < 6; ++h) {
      uint64_t block = 0;
      for (uint32_t i : I.members()) {
        for (uint32_t j : I.members()) {
          block += cyclotomic_number_bruteforce(ctx, (i + h) % 6, (j + h) % 6);
        }
      }
      const uint64_t w = pow_mod(ctx.alpha, (6 - h) % 6, p);  // w^{-1} in D_h
      CHECK_EQ(block, dist_union(ctx, I, w));
      // reduction-table route gives the same value
      CHECK_EQ(dist_form_derived(DistKind::dI, ctx.m_mod3, h).eval(p, ctx.A, ctx.B),
               Rational(static_cast<long long>(block)));
    }
  }
}

TEST_CASE("published forms match the re-derived forms except one entry") {
  size_t mismatched = 0;
  for (uint32_t m = 0; m < 3; ++m) {
    for (uint32_t h = 0; h < 6; ++h) {
      for (DistKind kind : {DistKind::dI, DistKind::dJ, DistKind::dIJ}) {
        const bool equal = dist_form_published(kind, m, h) == dist_form_derived(kind, m, h);
        if (!equal) {
          ++mismatched;
          CHECK_EQ(kind, DistKind::dI);
          CHECK_EQ(m, 1);
          CHECK_EQ(h, 5);
        }
      }
      for (uint32_t w1 = 0; w1 <= 1; ++w1) {
        CHECK_EQ(dc_form_published(m, w1, h), dc_form_derived(m, w1, h));
      }
    }
  }
  CHECK_EQ(mismatched, 1);
  // the corrected entry: p/4 + (A+B)/3 - 5/4
  CHECK_EQ(dist_form_derived(DistKind::dI, 1, 5), AffineForm::make(3, 4, 4, -15, 12));
  CHECK_EQ(dist_form_published(DistKind::dI, 1, 5), AffineForm::make(3, -4, -4, 15, 12));
}

TEST_CASE("verify_formulas at p=13") {
  const CyclotomyContext ctx = build_context(13, 6);
  const DiscrepancyReport rep = verify_formulas(ctx);
  CHECK_EQ(rep.checks.size(), 36 + 18 + 13);
  CHECK_EQ(rep.mismatches(), 1);

  size_t cn_matches = 0;
  for (const FormulaCheck& c : rep.checks) {
    if (c.entry.starts_with("cn(")) {
      CHECK(c.match);
      ++cn_matches;
    }
    if (c.entry == "dI[D5]") {
      CHECK_FALSE(c.match);
      CHECK_EQ(c.formula_value, Rational(7, 2));
      CHECK_EQ(c.oracle_value, 3);
    }
    if (c.entry == "dC[w1=1,w2=0]") {
      CHECK(c.match);
      CHECK_EQ(c.oracle_value, 4);
    }
  }
  CHECK_EQ(cn_matches, 36);
}

TEST_CASE("errata aggregation flags exactly the misprinted entry") {
  const ErrataReport errata = derive_errata(600, 4);
  CHECK_EQ(errata.contexts, primes_in_class(600, 12, 1).size());

  size_t flagged = 0;
  for (const EntryStatus& e : errata.entries) {
    CHECK(e.persistent());
    if (e.mismatches > 0) {
      ++flagged;
      CHECK_EQ(e.entry, "dI[D5]");
      CHECK_EQ(e.m_mod3, 1);
      CHECK_EQ(e.mismatches, e.contexts);
      REQUIRE(e.corrected.has_value());
      CHECK_EQ(*e.corrected, AffineForm::make(3, 4, 4, -15, 12));
      CHECK_EQ(*e.published, AffineForm::make(3, -4, -4, 15, 12));
    }
  }
  CHECK_EQ(flagged, 1);
  CHECK_EQ(errata.flagged().size(), 1);
}

TEST_SUITE_END();
