#include "cyclo6/field_core.hpp"

#include <stdexcept>
#include <string>

#include "cyclo6/numeric.hpp"

namespace cyclo6 {

std::vector<uint64_t> CyclotomyContext::class_members(uint32_t i) const {
  if (i >= d) throw std::invalid_argument("class index out of range");
  std::vector<uint64_t> out;
  out.reserve(f);
  for (uint64_t x = 1; x < p; ++x) {
    if (class_of[x] == static_cast<int32_t>(i)) out.push_back(x);
  }
  return out;
}

uint64_t find_primitive_root(uint64_t p) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("p must be an odd prime");
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  const auto factors = prime_factors(p - 1);
  for (uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (uint64_t q : factors) {
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root found");  // unreachable for prime p
}

CyclotomyContext build_context(uint64_t p, uint32_t d) {
  if (d < 2) throw std::invalid_argument("order d must be at least 2");
  if (p < 3 || p % 2 == 0 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
  if ((p - 1) % d != 0) {
    throw std::invalid_argument(std::to_string(d) + " does not divide " + std::to_string(p - 1));
  }

  CyclotomyContext ctx;
  ctx.p = p;
  ctx.d = d;
  ctx.f = (p - 1) / d;
  ctx.alpha = find_primitive_root(p);

  ctx.class_of.assign(p, -1);
  uint64_t x = 1;
  for (uint64_t j = 0; j < p - 1; ++j) {
    ctx.class_of[x] = static_cast<int32_t>(j % d);
    if (x == 2) ctx.log2_alpha = j;
    x = mul_mod(x, ctx.alpha, p);
  }

  ctx.cyclo.assign(static_cast<size_t>(d) * d, 0);
  for (uint64_t y = 1; y + 1 < p; ++y) {
    ctx.cyclo[static_cast<size_t>(ctx.class_of[y]) * d + ctx.class_of[y + 1]]++;
  }

  if (d == 6) {
    ctx.m_mod3 = static_cast<uint32_t>(ctx.log2_alpha % 3);
    if (ctx.f % 2 == 0) {
      const Calibration cal = calibrate_signs(ctx);
      ctx.A = cal.A;
      ctx.B = cal.B;
      ctx.m_mod3 = cal.m_mod3;
      ctx.sextic_forms = true;
    }
  }
  return ctx;
}

uint64_t cyclotomic_number_bruteforce(const CyclotomyContext& ctx, uint32_t m, uint32_t n) {
  if (m >= ctx.d || n >= ctx.d) throw std::invalid_argument("class index out of range");
  uint64_t count = 0;
  for (uint64_t x : ctx.class_members(m)) {
    if (x + 1 == ctx.p) continue;
    if (ctx.class_of[x + 1] == static_cast<int32_t>(n)) ++count;
  }
  return count;
}

QuadDecomposition decompose_quadratic_form(uint64_t p) {
  if (p % 3 != 1) {
    throw std::invalid_argument("p = A^2 + 3B^2 requires p == 1 (mod 3), got p = " +
                                std::to_string(p));
  }
  for (uint64_t b = 1; 3 * b * b < p; ++b) {
    const uint64_t rest = p - 3 * b * b;
    uint64_t a = 0;
    while ((a + 1) * (a + 1) <= rest) ++a;
    if (a * a == rest && a > 0) {
      return {static_cast<int64_t>(a), static_cast<int64_t>(b)};
    }
  }
  throw std::invalid_argument("no representation p = A^2 + 3B^2 for p = " + std::to_string(p));
}

}  // namespace cyclo6
