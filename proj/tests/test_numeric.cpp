#include <doctest.h>

#include "cyclo6/formulas.hpp"
#include "cyclo6/numeric.hpp"

using namespace cyclo6;

TEST_SUITE_BEGIN("numeric");

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(13));
  CHECK(is_prime(9973));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(561));   // Carmichael
  CHECK_FALSE(is_prime(6601));  // Carmichael
  CHECK_FALSE(is_prime(10000));
}

TEST_CASE("prime sieve agrees with Miller-Rabin") {
  const auto primes = primes_up_to(2000);
  size_t idx = 0;
  for (uint64_t n = 2; n <= 2000; ++n) {
    const bool in_sieve = idx < primes.size() && primes[idx] == n;
    CHECK_EQ(is_prime(n), in_sieve);
    if (in_sieve) ++idx;
  }
  CHECK_EQ(primes_in_class(2000, 12, 1).size(), 70);
  CHECK_EQ(primes_in_class(10000, 12, 1).size(), 300);
}

TEST_CASE("mod arithmetic") {
  CHECK_EQ(pow_mod(2, 12, 13), 1);
  CHECK_EQ(pow_mod(2, 6, 13), 12);
  CHECK_EQ(mul_mod(0xFFFFFFFFFFFFull, 0xFFFFFFFFFFFFull, 1000000007ull),
           (static_cast<unsigned __int128>(0xFFFFFFFFFFFFull) * 0xFFFFFFFFFFFFull) % 1000000007ull);
  CHECK_EQ(prime_factors(12), std::vector<uint64_t>{2, 3});
  CHECK_EQ(prime_factors(97), std::vector<uint64_t>{97});
}

TEST_CASE("rational arithmetic") {
  CHECK_EQ(Rational(6, 4), Rational(3, 2));
  CHECK_EQ(Rational(-6, -4), Rational(3, 2));
  CHECK_EQ(Rational(6, -4).num, -3);
  CHECK(Rational(8, 4).is_integer());
  CHECK_EQ(Rational(8, 4).num, 2);
  CHECK_EQ((Rational(1, 4) + Rational(1, 12)).str(), "1/3");
  CHECK_EQ((Rational(13, 4) - Rational(5, 4)).str(), "2");
  CHECK_EQ((Rational(3, 2) * Rational(4, 9)).str(), "2/3");
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("deterministic sampling") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK_EQ(a.next(), b.next());
  Rng c(7);
  const auto s = c.sample(10, 4);
  CHECK_EQ(s.size(), 4);
  for (size_t i = 1; i < s.size(); ++i) CHECK(s[i - 1] < s[i]);
  CHECK(s.back() < 10);
  Rng d(7);
  CHECK_EQ(d.sample(10, 4), s);
}

TEST_CASE("affine form recovery") {
  // value = (3p + 4A + 4B - 15) / 12 at synthetic (p, A, B) points
  const AffineForm truth = AffineForm::make(3, 4, 4, -15, 12);
  std::vector<std::array<int64_t, 3>> pts = {
      {13, 1, 2}, {37, 5, 2}, {61, 7, 2}, {73, 5, 4}, {97, 7, 4}, {109, 1, 6}};
  std::vector<Rational> vals;
  for (const auto& [p, A, B] : pts) vals.push_back(truth.eval(p, A, B));
  const auto fit = fit_affine_form(pts, vals);
  REQUIRE(fit.has_value());
  CHECK_EQ(*fit, truth);

  // inconsistent data has no affine form
  vals[3] = vals[3] + Rational(1);
  CHECK_FALSE(fit_affine_form(pts, vals).has_value());

  // underdetermined: too few points
  std::vector<std::array<int64_t, 3>> few(pts.begin(), pts.begin() + 3);
  std::vector<Rational> fewv(vals.begin(), vals.begin() + 3);
  CHECK_FALSE(fit_affine_form(few, fewv).has_value());
}

TEST_CASE("affine form rendering") {
  CHECK_EQ(AffineForm::make(3, 0, 0, -15, 12).str(), "(p-5)/4");
  CHECK_EQ(AffineForm::make(1, 4, 12, -5, 36).str(), "(p+4A+12B-5)/36");
  CHECK_EQ(AffineForm::make(2, 0, 0, -2, 6).str(), "(p-1)/3");
}

TEST_SUITE_END();
