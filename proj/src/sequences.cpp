#include "cyclo6/sequences.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclo6 {

BipolarSequence support_to_sequence(const SupportSet& d) {
  BipolarSequence seq;
  seq.s.assign(d.n, 1);
  for (uint32_t t : d.members) seq.s[t] = -1;
  return seq;
}

std::vector<int64_t> AcfProfile::levels() const {
  std::vector<int64_t> out = offpeak;
  out.push_back(peak);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

AcfProfile acf_impl(const BipolarSequence& seq, bool parallel) {
  const int64_t n = static_cast<int64_t>(seq.period());
  if (n < 2) throw std::invalid_argument("period must be at least 2");
  AcfProfile acf;
  acf.peak = n;
  acf.offpeak.assign(n - 1, 0);
#pragma omp parallel for schedule(static) if (parallel)
  for (int64_t tau = 1; tau < n; ++tau) {
    int64_t acc = 0;
    for (int64_t t = 0; t < n; ++t) {
      int64_t u = t + tau;
      if (u >= n) u -= n;
      acc += static_cast<int64_t>(seq.s[t]) * seq.s[u];
    }
    acf.offpeak[tau - 1] = acc;
  }
  return acf;
}

}  // namespace

AcfProfile periodic_autocorrelation(const BipolarSequence& s) { return acf_impl(s, true); }

AcfProfile periodic_autocorrelation_serial(const BipolarSequence& s) { return acf_impl(s, false); }

LevelSummary classify_levels(const AcfProfile& acf) {
  LevelSummary sum;
  sum.values = acf.levels();
  sum.count = sum.values.size();
  std::vector<int64_t> off = acf.offpeak;
  std::sort(off.begin(), off.end());
  off.erase(std::unique(off.begin(), off.end()), off.end());
  sum.three_level = sum.count == 3 && off.size() == 2 && off[1] - off[0] == 4 &&
                    off[0] != acf.peak && off[1] != acf.peak;
  return sum;
}

std::string to_csv_row(const BipolarSequence& s) {
  std::string out;
  for (size_t i = 0; i < s.s.size(); ++i) {
    if (i) out += ",";
    out += (s.s[i] < 0) ? "-1" : "1";
  }
  return out;
}

std::string to_bitstring(const BipolarSequence& s) {
  std::string out(s.s.size(), '0');
  for (size_t i = 0; i < s.s.size(); ++i) {
    if (s.s[i] < 0) out[i] = '1';
  }
  return out;
}

}  // namespace cyclo6
