#pragma once

#include <cstdint>
#include <vector>

namespace cyclo6 {

// Cyclotomy of order d over GF(p): classes D_i = { alpha^(kd+i) : 0 <= k < f }
// with p = d*f + 1 and alpha the smallest positive primitive root. Immutable
// after construction; safe to share across threads.
struct CyclotomyContext {
  uint64_t p = 0;
  uint32_t d = 0;
  uint64_t f = 0;
  uint64_t alpha = 0;
  std::vector<int32_t> class_of;  // length p; class_of[0] = -1
  uint64_t log2_alpha = 0;        // m with alpha^m == 2 (mod p)
  std::vector<uint64_t> cyclo;    // d*d matrix of (m,n)_d, filled in one pass

  // order-6 closed-form layer; populated when d == 6 and f is even
  bool sextic_forms = false;
  int64_t A = 0;
  int64_t B = 0;
  uint32_t m_mod3 = 0;  // meaningful whenever d == 6

  int32_t cls(uint64_t x) const { return class_of[x]; }
  uint64_t cyclo_num(uint32_t m, uint32_t n) const { return cyclo[m * d + n]; }
  uint32_t class_of_minus1() const { return static_cast<uint32_t>(class_of[p - 1]); }
  std::vector<uint64_t> class_members(uint32_t i) const;
};

// smallest g in [2, p-1] of multiplicative order p-1; rejects even or composite p
uint64_t find_primitive_root(uint64_t p);

// fully populated context; throws if p is not an odd prime or d does not
// divide p-1. For d == 6 with f even the (A, B, m_mod3) layer is calibrated.
CyclotomyContext build_context(uint64_t p, uint32_t d);

// |{ x in D_m : x+1 != 0 and x+1 in D_n }| by direct enumeration over D_m.
// Ground-truth oracle for everything downstream.
uint64_t cyclotomic_number_bruteforce(const CyclotomyContext& ctx, uint32_t m, uint32_t n);

// p = A^2 + 3B^2 with A, B > 0; requires p == 1 (mod 3)
struct QuadDecomposition {
  int64_t A = 0;
  int64_t B = 0;
};
QuadDecomposition decompose_quadratic_form(uint64_t p);

// Resolves the signs of (A, B) so the order-6 formula for (0,1)_6 under the
// context's m mod 3 reproduces the brute-force count, then checks that all
// ten irreducible formulas agree. Requires d == 6 and f even.
struct Calibration {
  int64_t A = 0;
  int64_t B = 0;
  uint32_t m_mod3 = 0;
};
Calibration calibrate_signs(const CyclotomyContext& ctx);

}  // namespace cyclo6
