#include "cyclo6/distance.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclo6 {

IndexSet IndexSet::from_bits(uint32_t bits, uint32_t d) {
  if (d < 2 || d > 31) throw std::invalid_argument("index set order out of range");
  if (bits >= (1u << d)) throw std::invalid_argument("index set bits out of range");
  return IndexSet{bits, d};
}

IndexSet IndexSet::of(std::initializer_list<uint32_t> xs, uint32_t d) {
  uint32_t bits = 0;
  for (uint32_t x : xs) {
    if (x >= d) throw std::invalid_argument("index out of range");
    bits |= 1u << x;
  }
  return from_bits(bits, d);
}

IndexSet IndexSet::parse(const std::string& csv, uint32_t d) {
  uint32_t bits = 0;
  size_t pos = 0;
  while (pos < csv.size()) {
    size_t next = csv.find(',', pos);
    if (next == std::string::npos) next = csv.size();
    const std::string tok = csv.substr(pos, next - pos);
    if (tok.empty()) throw std::invalid_argument("bad index set: '" + csv + "'");
    const unsigned long v = std::stoul(tok);
    if (v >= d) throw std::invalid_argument("index " + tok + " out of range for d=" + std::to_string(d));
    bits |= 1u << v;
    pos = next + 1;
  }
  return from_bits(bits, d);
}

std::vector<uint32_t> IndexSet::members() const {
  std::vector<uint32_t> out;
  for (uint32_t i = 0; i < d; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::string IndexSet::str() const {
  std::string s = "{";
  bool first = true;
  for (uint32_t i : members()) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

const char* variant_name(Variant v) { return v == Variant::C ? "C" : "C'"; }

uint64_t crt_index(uint64_t p, uint32_t w1, uint64_t w2) {
  if (w1 > 1 || w2 >= p) throw std::invalid_argument("element outside Z_2 x Z_p");
  // t = w2 or w2 + p, whichever has the right parity (p odd)
  return ((w2 & 1) == w1) ? w2 : w2 + p;
}

std::pair<uint32_t, uint64_t> crt_split(uint64_t p, uint64_t t) {
  return {static_cast<uint32_t>(t & 1), t % p};
}

SupportSet SupportSet::cyclic(uint64_t n, std::vector<uint32_t> members) {
  if (n < 2) throw std::invalid_argument("group order must be at least 2");
  SupportSet s;
  s.flavor = Flavor::Cyclic;
  s.n = n;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!members.empty() && members.back() >= n) {
    throw std::invalid_argument("support element outside Z_n");
  }
  s.members = std::move(members);
  s.mask.assign(n, 0);
  for (uint32_t m : s.members) s.mask[m] = 1;
  return s;
}

SupportSet SupportSet::product(uint64_t p, std::vector<uint32_t> crt_members, bool origin) {
  SupportSet s = cyclic(2 * p, std::move(crt_members));
  s.flavor = Flavor::Product;
  s.p = p;
  s.origin_included = origin;
  return s;
}

uint64_t DistanceSpectrum::weighted_sum() const {
  uint64_t acc = 0;
  for (const auto& [v, c] : histogram) acc += static_cast<uint64_t>(v) * c;
  return acc;
}

uint64_t difference_function(const SupportSet& s, uint64_t shift) {
  if (shift == 0 || shift >= s.n) throw std::invalid_argument("shift must be a nonzero element");
  uint64_t count = 0;
  for (uint32_t x : s.members) {
    uint64_t y = x + shift;
    if (y >= s.n) y -= s.n;
    count += s.mask[y];
  }
  return count;
}

uint64_t difference_function(const SupportSet& s, uint32_t w1, uint64_t w2) {
  if (s.flavor != SupportSet::Flavor::Product) {
    throw std::invalid_argument("component shift requires a product-group support");
  }
  return difference_function(s, crt_index(s.p, w1, w2));
}

namespace {

std::vector<uint64_t> shift_values(const SupportSet& s, bool parallel) {
  std::vector<uint64_t> vals(s.n - 1, 0);
  const int64_t n = static_cast<int64_t>(s.n);
#pragma omp parallel for schedule(static) if (parallel)
  for (int64_t e = 1; e < n; ++e) {
    uint64_t count = 0;
    for (uint32_t x : s.members) {
      uint64_t y = x + static_cast<uint64_t>(e);
      if (y >= s.n) y -= s.n;
      count += s.mask[y];
    }
    vals[e - 1] = count;
  }
  return vals;
}

DistanceSpectrum fold(const SupportSet& s, const std::vector<uint64_t>& vals) {
  DistanceSpectrum out;
  out.total = s.n - 1;
  for (uint64_t v : vals) out.histogram[static_cast<int64_t>(v)]++;
  return out;
}

}  // namespace

DistanceSpectrum spectrum(const SupportSet& s) { return fold(s, shift_values(s, true)); }

DistanceSpectrum spectrum_serial(const SupportSet& s) { return fold(s, shift_values(s, false)); }

std::vector<uint64_t> class_union(const CyclotomyContext& ctx, IndexSet I) {
  if (I.d != ctx.d) throw std::invalid_argument("index set order does not match context");
  std::vector<uint64_t> out;
  out.reserve(I.k() * ctx.f);
  for (uint64_t x = 1; x < ctx.p; ++x) {
    if (I.contains(static_cast<uint32_t>(ctx.class_of[x]))) out.push_back(x);
  }
  return out;
}

SupportSet build_dhm_support(const CyclotomyContext& ctx, IndexSet I, IndexSet J, Variant v) {
  if (I.bits == 0 || J.bits == 0) throw std::invalid_argument("index sets must be nonempty");
  const uint32_t full = (1u << ctx.d) - 1;
  if (I.bits == full || J.bits == full) {
    throw std::invalid_argument("index sets must be proper subsets");
  }
  std::vector<uint32_t> members;
  members.reserve((I.k() + J.k()) * ctx.f + 1);
  for (uint64_t x : class_union(ctx, I)) {
    members.push_back(static_cast<uint32_t>(crt_index(ctx.p, 0, x)));
  }
  for (uint64_t x : class_union(ctx, J)) {
    members.push_back(static_cast<uint32_t>(crt_index(ctx.p, 1, x)));
  }
  if (v == Variant::Cprime) members.push_back(0);  // (0,0) maps to t = 0
  return SupportSet::product(ctx.p, std::move(members), v == Variant::Cprime);
}

namespace {

std::vector<uint8_t> union_mask(const CyclotomyContext& ctx, IndexSet I) {
  std::vector<uint8_t> mask(ctx.p, 0);
  for (uint64_t x = 1; x < ctx.p; ++x) {
    if (I.contains(static_cast<uint32_t>(ctx.class_of[x]))) mask[x] = 1;
  }
  return mask;
}

uint64_t dist_masked(const CyclotomyContext& ctx, const std::vector<uint8_t>& from,
                     const std::vector<uint8_t>& into, uint64_t w) {
  uint64_t count = 0;
  for (uint64_t x = 1; x < ctx.p; ++x) {
    if (!from[x]) continue;
    uint64_t y = x + w;
    if (y >= ctx.p) y -= ctx.p;
    count += into[y];
  }
  return count;
}

}  // namespace

uint64_t dist_union(const CyclotomyContext& ctx, IndexSet I, uint64_t w) {
  if (w == 0 || w >= ctx.p) throw std::invalid_argument("w must be a nonzero residue");
  const auto mask = union_mask(ctx, I);
  return dist_masked(ctx, mask, mask, w);
}

uint64_t dist_union_pair(const CyclotomyContext& ctx, IndexSet I, IndexSet J, uint64_t w) {
  if (w == 0 || w >= ctx.p) throw std::invalid_argument("w must be a nonzero residue");
  return dist_masked(ctx, union_mask(ctx, I), union_mask(ctx, J), w);
}

uint64_t dc_by_parts(const CyclotomyContext& ctx, IndexSet I, IndexSet J, uint32_t w1,
                     uint64_t w2) {
  if (w1 > 1 || w2 >= ctx.p) throw std::invalid_argument("shift outside Z_2 x Z_p");
  if (w1 == 0 && w2 == 0) return (I.k() + J.k()) * ctx.f;  // |D_I| + |D_J|
  if (w1 == 0) return dist_union(ctx, I, w2) + dist_union(ctx, J, w2);
  if (w2 == 0) {
    return 2 * (IndexSet{I.bits & J.bits, ctx.d}.k()) * ctx.f;  // 2|D_I ∩ D_J|
  }
  return dist_union_pair(ctx, I, J, w2) + dist_union_pair(ctx, J, I, w2);
}

uint64_t dc_origin_correction(const CyclotomyContext& ctx, IndexSet I, IndexSet J, uint32_t w1,
                              uint64_t w2) {
  if (w1 > 1 || w2 >= ctx.p) throw std::invalid_argument("shift outside Z_2 x Z_p");
  if (w2 == 0) return 0;
  const IndexSet& S = (w1 == 0) ? I : J;
  uint64_t count = 0;
  if (S.contains(static_cast<uint32_t>(ctx.class_of[w2]))) ++count;
  if (S.contains(static_cast<uint32_t>(ctx.class_of[ctx.p - w2]))) ++count;
  return count;
}

}  // namespace cyclo6
