#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cyclo6/field_core.hpp"

namespace cyclo6 {

// subset of {0, ..., d-1} selecting a union of cyclotomic classes
struct IndexSet {
  uint32_t bits = 0;
  uint32_t d = 6;

  static IndexSet from_bits(uint32_t bits, uint32_t d);
  static IndexSet of(std::initializer_list<uint32_t> xs, uint32_t d);
  static IndexSet parse(const std::string& csv, uint32_t d);  // "0,1,2"

  uint32_t k() const { return static_cast<uint32_t>(__builtin_popcount(bits)); }
  bool contains(uint32_t i) const { return (bits >> i) & 1u; }
  std::vector<uint32_t> members() const;
  std::string str() const;  // "{0,1,2}"
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;
};

enum class Variant { C, Cprime };
const char* variant_name(Variant v);

// CRT bijection between Z_2 x Z_p and Z_2p (p odd)
uint64_t crt_index(uint64_t p, uint32_t w1, uint64_t w2);
std::pair<uint32_t, uint64_t> crt_split(uint64_t p, uint64_t t);

// A subset of a finite abelian group. Elements are positions in Z_n with
// modular addition; a support over GF(2) x Z_p is carried through the CRT
// bijection, which is a group isomorphism onto Z_2p.
struct SupportSet {
  enum class Flavor { Cyclic, Product };
  Flavor flavor = Flavor::Cyclic;
  uint64_t n = 0;
  uint64_t p = 0;  // Product only
  bool origin_included = false;
  std::vector<uint32_t> members;  // sorted, distinct
  std::vector<uint8_t> mask;      // size n

  size_t k() const { return members.size(); }
  bool contains(uint64_t t) const { return mask[t] != 0; }

  static SupportSet cyclic(uint64_t n, std::vector<uint32_t> members);
  static SupportSet product(uint64_t p, std::vector<uint32_t> crt_members, bool origin);
};

struct DistanceSpectrum {
  std::map<int64_t, uint64_t> histogram;  // distance value -> count, ascending
  uint64_t total = 0;                     // number of nonzero shifts, = n-1
  uint64_t weighted_sum() const;          // sum of value*count; equals k^2 - k
  friend bool operator==(const DistanceSpectrum&, const DistanceSpectrum&) = default;
};

// d_D(e) = |(D+e) ∩ D| for a nonzero shift e
uint64_t difference_function(const SupportSet& s, uint64_t shift);
uint64_t difference_function(const SupportSet& s, uint32_t w1, uint64_t w2);  // Product only

DistanceSpectrum spectrum(const SupportSet& s);         // parallel over shifts
DistanceSpectrum spectrum_serial(const SupportSet& s);  // reference implementation

// D_I as a sorted element list
std::vector<uint64_t> class_union(const CyclotomyContext& ctx, IndexSet I);

// C = {0} x D_I  ∪  {1} x D_J, optionally with (0,0) adjoined
SupportSet build_dhm_support(const CyclotomyContext& ctx, IndexSet I, IndexSet J, Variant v);

// direct set computations over Z_p
uint64_t dist_union(const CyclotomyContext& ctx, IndexSet I, uint64_t w);  // |(D_I+w) ∩ D_I|
uint64_t dist_union_pair(const CyclotomyContext& ctx, IndexSet I, IndexSet J,
                         uint64_t w);  // |(D_I+w) ∩ D_J|

// d_C(w1,w2) via the case split into d_I, d_J, d_IJ set computations;
// (0,0) returns |D_I| + |D_J|
uint64_t dc_by_parts(const CyclotomyContext& ctx, IndexSet I, IndexSet J, uint32_t w1,
                     uint64_t w2);

// d_{C'} - d_C: |D_I ∩ {w2,-w2}| when w1 = 0 and w2 != 0, the J analogue when
// w1 = 1 and w2 != 0, otherwise 0
uint64_t dc_origin_correction(const CyclotomyContext& ctx, IndexSet I, IndexSet J, uint32_t w1,
                              uint64_t w2);

}  // namespace cyclo6
