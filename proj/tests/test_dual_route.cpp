#include <doctest.h>

#include <vector>

#include "cyclo6/ads_search.hpp"
#include "cyclo6/numeric.hpp"

using namespace cyclo6;

namespace {

// Difference tables of the cyclotomic classes, built by literal pair
// enumeration over the materialized class lists. Shares nothing with the
// x -> x+1 pass behind the production cyclotomic matrix.
struct ClassDiffTables {
  uint64_t p = 0;
  uint32_t d = 0;
  std::vector<std::vector<uint32_t>> pair;        // [i*d+j][w], w in 0..p-1
  std::vector<std::vector<uint8_t>> in_class;     // [i][x]

  static ClassDiffTables build(const CyclotomyContext& ctx) {
    ClassDiffTables t;
    t.p = ctx.p;
    t.d = ctx.d;
    t.pair.assign(static_cast<size_t>(ctx.d) * ctx.d, std::vector<uint32_t>(ctx.p, 0));
    t.in_class.assign(ctx.d, std::vector<uint8_t>(ctx.p, 0));
    std::vector<std::vector<uint64_t>> members(ctx.d);
    for (uint32_t i = 0; i < ctx.d; ++i) {
      members[i] = ctx.class_members(i);
      for (uint64_t x : members[i]) t.in_class[i][x] = 1;
    }
    for (uint32_t i = 0; i < ctx.d; ++i) {
      for (uint32_t j = 0; j < ctx.d; ++j) {
        auto& row = t.pair[i * ctx.d + j];
        for (uint64_t x : members[i]) {
          for (uint64_t y : members[j]) {
            row[(y + ctx.p - x) % ctx.p]++;
          }
        }
      }
    }
    return t;
  }

  DistanceSpectrum row_spectrum(IndexSet I, IndexSet J, Variant variant) const {
    const auto im = I.members();
    const auto jm = J.members();
    std::vector<uint8_t> inI(p, 0), inJ(p, 0);
    for (uint32_t i : im) {
      for (uint64_t x = 1; x < p; ++x) inI[x] |= in_class[i][x];
    }
    for (uint32_t j : jm) {
      for (uint64_t x = 1; x < p; ++x) inJ[x] |= in_class[j][x];
    }

    DistanceSpectrum spec;
    spec.total = 2 * p - 1;
    for (uint64_t w = 1; w < p; ++w) {
      uint64_t v = 0;
      for (uint32_t a : im) {
        for (uint32_t b : im) v += pair[a * d + b][w];
      }
      for (uint32_t a : jm) {
        for (uint32_t b : jm) v += pair[a * d + b][w];
      }
      if (variant == Variant::Cprime) v += inI[w] + inI[p - w];
      spec.histogram[static_cast<int64_t>(v)]++;
    }
    for (uint64_t w = 0; w < p; ++w) {
      uint64_t v = 0;
      for (uint32_t a : im) {
        for (uint32_t b : jm) v += pair[a * d + b][w] + pair[b * d + a][w];
      }
      if (variant == Variant::Cprime && w != 0) v += inJ[w] + inJ[p - w];
      spec.histogram[static_cast<int64_t>(v)]++;
    }
    return spec;
  }
};

void compare_all_rows(uint64_t p) {
  const CyclotomyContext ctx = build_context(p, 6);
  const ClassDiffTables tables = ClassDiffTables::build(ctx);
  SweepOptions opt;  // all k, both variants, all pairs
  const SearchReport rep = sweep_dhm(ctx, opt);
  REQUIRE_EQ(rep.rows.size(), 7688);
  size_t bad = 0;
  for (const SearchRow& row : rep.rows) {
    if (!(tables.row_spectrum(row.I, row.J, row.variant) == row.spectrum)) ++bad;
  }
  INFO("p = ", p);
  CHECK_EQ(bad, 0);
}

}  // namespace

TEST_SUITE_BEGIN("dual_route");

TEST_CASE("class-difference tables agree with set-level distances") {
  for (uint64_t p : {13ull, 37ull, 61ull}) {
    const CyclotomyContext ctx = build_context(p, 6);
    const ClassDiffTables tables = ClassDiffTables::build(ctx);
    const IndexSet I = IndexSet::of({0, 1, 2}, 6);
    const IndexSet J = IndexSet::of({0, 4, 5}, 6);
    for (uint64_t w = 1; w < p; ++w) {
      uint64_t dIJ = 0;
      for (uint32_t a : I.members()) {
        for (uint32_t b : J.members()) dIJ += tables.pair[a * 6 + b][w];
      }
      CHECK_EQ(dIJ, dist_union_pair(ctx, I, J, w));
    }
  }
}

TEST_CASE("pair-distance symmetry holds for every ordered pair and shift up to 500") {
  for (uint64_t p : primes_in_class(500, 12, 1)) {
    const CyclotomyContext ctx = build_context(p, 6);
    const ClassDiffTables tables = ClassDiffTables::build(ctx);
    size_t asymmetric = 0;
    for (uint32_t ib = 1; ib < 63; ++ib) {
      for (uint32_t jb = 1; jb < 63; ++jb) {
        const auto im = IndexSet::from_bits(ib, 6).members();
        const auto jm = IndexSet::from_bits(jb, 6).members();
        for (uint64_t w = 1; w < p; ++w) {
          uint64_t ab = 0, ba = 0;
          for (uint32_t a : im) {
            for (uint32_t b : jm) {
              ab += tables.pair[a * 6 + b][w];
              ba += tables.pair[b * 6 + a][w];
            }
          }
          if (ab != ba) ++asymmetric;
        }
      }
    }
    INFO("p = ", p);
    CHECK_EQ(asymmetric, 0);
  }
}

TEST_CASE("fast sweep spectra equal naive difference tables, p <= 500") {
  for (uint64_t p : primes_in_class(500, 12, 1)) compare_all_rows(p);
}

TEST_CASE("fast sweep spectra equal naive difference tables, larger primes") {
  compare_all_rows(1009);
  compare_all_rows(2017);
}

TEST_CASE("sampled literal cross-check at mid-size primes") {
  for (uint64_t p : {229ull, 457ull, 1009ull}) {
    const CyclotomyContext ctx = build_context(p, 6);
    SweepOptions opt;
    opt.naive_check = NaiveCheck::sample(0.05, 7);
    CHECK_NOTHROW(sweep_dhm(ctx, opt));
  }
}

TEST_CASE("full literal cross-check at small primes") {
  for (uint64_t p : {61ull, 73ull, 97ull}) {
    const CyclotomyContext ctx = build_context(p, 6);
    SweepOptions opt;
    opt.naive_check = NaiveCheck::full();
    CHECK_NOTHROW(sweep_dhm(ctx, opt));
  }
}

TEST_SUITE_END();
