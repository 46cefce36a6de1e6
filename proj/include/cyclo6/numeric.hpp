#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace cyclo6 {

inline uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m) {
  uint64_t r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

// deterministic Miller-Rabin, valid for all 64-bit inputs
bool is_prime(uint64_t n);

std::vector<uint64_t> primes_up_to(uint64_t limit);

// primes p <= limit with p % mod == res
std::vector<uint64_t> primes_in_class(uint64_t limit, uint64_t mod, uint64_t res);

// distinct prime factors, trial division
std::vector<uint64_t> prime_factors(uint64_t n);

// Exact rational on int64, normalized (gcd 1, den > 0). Values in this
// project stay tiny; no overflow guard beyond the normalization.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}  // NOLINT: implicit by design
  Rational(long long n, long long d);

  bool is_integer() const { return den == 1; }
  long long floor_div() const;
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
};

// mt19937_64 output is standard-fixed; bounded draws avoid
// std::uniform_int_distribution, whose mapping is implementation-defined
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}
  uint64_t next() { return gen_(); }
  uint64_t below(uint64_t n) { return gen_() % n; }
  // k distinct values from [0, n), ascending
  std::vector<uint32_t> sample(uint32_t n, uint32_t k);

 private:
  std::mt19937_64 gen_;
};

}  // namespace cyclo6
