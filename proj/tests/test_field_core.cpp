#include <doctest.h>

#include <stdexcept>

#include <algorithm>

#include "cyclo6/field_core.hpp"
#include "cyclo6/numeric.hpp"

using namespace cyclo6;

namespace {

// independent order oracle: repeated multiplication, no pow_mod
uint64_t mult_order(uint64_t g, uint64_t p) {
  uint64_t x = g % p;
  uint64_t ord = 1;
  while (x != 1) {
    x = static_cast<uint64_t>((static_cast<unsigned __int128>(x) * g) % p);
    ++ord;
  }
  return ord;
}

}  // namespace

TEST_SUITE_BEGIN("field_core");

TEST_CASE("smallest primitive root") {
  CHECK_EQ(find_primitive_root(13), 2);
  CHECK_EQ(find_primitive_root(7), 3);
  CHECK_EQ(find_primitive_root(3), 2);

  for (uint64_t p : {3ull, 7ull, 13ull, 41ull, 109ull, 409ull}) {
    const uint64_t g = find_primitive_root(p);
    CHECK_EQ(mult_order(g, p), p - 1);
    for (uint64_t smaller = 2; smaller < g; ++smaller) {
      CHECK(mult_order(smaller, p) < p - 1);
    }
  }

  CHECK_THROWS_AS(find_primitive_root(4), std::invalid_argument);
  CHECK_THROWS_AS(find_primitive_root(9), std::invalid_argument);
  CHECK_THROWS_AS(find_primitive_root(2), std::invalid_argument);
}

TEST_CASE("context for p=13, d=6") {
  const CyclotomyContext ctx = build_context(13, 6);
  CHECK_EQ(ctx.f, 2);
  CHECK_EQ(ctx.alpha, 2);
  CHECK_EQ(ctx.class_members(0), std::vector<uint64_t>{1, 12});
  CHECK_EQ(ctx.class_members(1), std::vector<uint64_t>{2, 11});
  CHECK_EQ(ctx.class_members(2), std::vector<uint64_t>{4, 9});
  CHECK_EQ(ctx.class_members(3), std::vector<uint64_t>{5, 8});
  CHECK_EQ(ctx.class_members(4), std::vector<uint64_t>{3, 10});
  CHECK_EQ(ctx.class_members(5), std::vector<uint64_t>{6, 7});
  CHECK_EQ(ctx.class_of[0], -1);

  CHECK(ctx.sextic_forms);
  CHECK_EQ(ctx.A, 1);
  CHECK_EQ(ctx.B, 2);
  CHECK_EQ(ctx.m_mod3, 1);  // 2 = alpha^1
  CHECK_EQ(ctx.log2_alpha, 1);
}

TEST_CASE("context validation") {
  CHECK_THROWS_WITH_AS(build_context(11, 6), "6 does not divide 10", std::invalid_argument);
  CHECK_THROWS_AS(build_context(12, 6), std::invalid_argument);
  CHECK_THROWS_AS(build_context(1, 6), std::invalid_argument);

  // d = 12 divides 13-1, so f = 1 is a valid (if tiny) context
  const CyclotomyContext ctx = build_context(13, 12);
  CHECK_EQ(ctx.f, 1);
  CHECK_FALSE(ctx.sextic_forms);
  for (uint32_t i = 0; i < 12; ++i) CHECK_EQ(ctx.class_members(i).size(), 1);

  // d = 6 with f odd: context built, closed-form layer absent
  const CyclotomyContext odd = build_context(19, 6);
  CHECK_EQ(odd.f, 3);
  CHECK_FALSE(odd.sextic_forms);
}

TEST_CASE("class table invariants") {
  for (uint64_t p : primes_in_class(500, 12, 1)) {
    const CyclotomyContext ctx = build_context(p, 6);

    // partition into classes of size f
    std::vector<uint64_t> sizes(6, 0);
    for (uint64_t x = 1; x < p; ++x) {
      REQUIRE(ctx.class_of[x] >= 0);
      REQUIRE(ctx.class_of[x] < 6);
      sizes[ctx.class_of[x]]++;
    }
    for (uint64_t s : sizes) CHECK_EQ(s, ctx.f);

    // class_of[alpha^(kd+i)] == i
    uint64_t x = 1;
    for (uint64_t j = 0; j < p - 1; ++j) {
      CHECK_EQ(ctx.class_of[x], static_cast<int32_t>(j % 6));
      x = mul_mod(x, ctx.alpha, p);
    }

    // multiplicativity on random nonzero pairs
    Rng rng(p);
    for (int i = 0; i < 1000; ++i) {
      const uint64_t a = 1 + rng.below(p - 1);
      const uint64_t b = 1 + rng.below(p - 1);
      CHECK_EQ(ctx.class_of[mul_mod(a, b, p)], (ctx.class_of[a] + ctx.class_of[b]) % 6);
    }

    // -1 lies in D_0 when f is even
    CHECK_EQ(ctx.class_of[p - 1], 0);
    CHECK_EQ(ctx.A * ctx.A + 3 * ctx.B * ctx.B, static_cast<int64_t>(p));
  }
}

TEST_CASE("brute-force cyclotomic numbers at p=13") {
  const CyclotomyContext ctx = build_context(13, 6);
  CHECK_EQ(cyclotomic_number_bruteforce(ctx, 0, 1), 1);
  CHECK_EQ(cyclotomic_number_bruteforce(ctx, 0, 0), 0);
  CHECK_EQ(cyclotomic_number_bruteforce(ctx, 2, 4), 1);
  CHECK_THROWS_AS(cyclotomic_number_bruteforce(ctx, 6, 0), std::invalid_argument);
}

TEST_CASE("one-pass matrix equals brute force") {
  for (uint64_t p : {13ull, 37ull, 61ull, 109ull}) {
    const CyclotomyContext ctx = build_context(p, 6);
    for (uint32_t m = 0; m < 6; ++m) {
      for (uint32_t n = 0; n < 6; ++n) {
        CHECK_EQ(ctx.cyclo_num(m, n), cyclotomic_number_bruteforce(ctx, m, n));
      }
    }
  }
  const CyclotomyContext q = build_context(13, 4);  // f odd, d=4
  for (uint32_t m = 0; m < 4; ++m) {
    for (uint32_t n = 0; n < 4; ++n) {
      CHECK_EQ(q.cyclo_num(m, n), cyclotomic_number_bruteforce(q, m, n));
    }
  }
}

TEST_CASE("cyclotomic number mass and row sums") {
  for (uint64_t p : primes_in_class(500, 12, 1)) {
    const CyclotomyContext ctx = build_context(p, 6);
    uint64_t mass = 0;
    for (uint32_t m = 0; m < 6; ++m) {
      uint64_t row = 0;
      for (uint32_t n = 0; n < 6; ++n) row += ctx.cyclo_num(m, n);
      CHECK_EQ(row, m == 0 ? ctx.f - 1 : ctx.f);
      mass += row;
    }
    CHECK_EQ(mass, p - 2);
  }
}

TEST_CASE("quadratic form decomposition") {
  CHECK_EQ(decompose_quadratic_form(13).A, 1);
  CHECK_EQ(decompose_quadratic_form(13).B, 2);
  CHECK_EQ(decompose_quadratic_form(37).A, 5);
  CHECK_EQ(decompose_quadratic_form(37).B, 2);
  CHECK_EQ(decompose_quadratic_form(7).A, 2);
  CHECK_EQ(decompose_quadratic_form(7).B, 1);
  CHECK_THROWS_AS(decompose_quadratic_form(11), std::invalid_argument);

  for (uint64_t p : primes_in_class(2000, 3, 1)) {
    const QuadDecomposition q = decompose_quadratic_form(p);
    CHECK(q.A > 0);
    CHECK(q.B > 0);
    CHECK_EQ(q.A * q.A + 3 * q.B * q.B, static_cast<int64_t>(p));
  }
}

TEST_CASE("sign calibration settles on the brute-force convention") {
  const CyclotomyContext ctx = build_context(13, 6);
  const Calibration cal = calibrate_signs(ctx);
  CHECK_EQ(cal.A, 1);
  CHECK_EQ(cal.B, 2);
  CHECK_EQ(cal.m_mod3, 1);

  // every context up to 500 calibrates without ambiguity
  for (uint64_t p : primes_in_class(500, 12, 1)) {
    CHECK_NOTHROW(calibrate_signs(build_context(p, 6)));
  }
  CHECK_THROWS_AS(calibrate_signs(build_context(19, 6)), std::invalid_argument);  // f odd
}

TEST_SUITE_END();
