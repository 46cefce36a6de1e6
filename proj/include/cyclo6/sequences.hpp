#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclo6/distance.hpp"

namespace cyclo6 {

struct BipolarSequence {
  std::vector<int8_t> s;  // entries are +1 or -1
  size_t period() const { return s.size(); }
};

// characteristic sequence of the support: s_t = -1 iff t is in the support
// (product supports are already carried in CRT coordinates)
BipolarSequence support_to_sequence(const SupportSet& d);

struct AcfProfile {
  int64_t peak = 0;              // value at shift 0, equals the period
  std::vector<int64_t> offpeak;  // shifts 1..n-1
  std::vector<int64_t> levels() const;  // distinct values incl. peak, ascending
};

// A(tau) = sum_t s_t * s_{t+tau mod n}
AcfProfile periodic_autocorrelation(const BipolarSequence& s);         // parallel over shifts
AcfProfile periodic_autocorrelation_serial(const BipolarSequence& s);  // reference

struct LevelSummary {
  size_t count = 0;
  std::vector<int64_t> values;  // ascending
  // exactly three distinct values: the peak plus two off-peak values that
  // differ by 4 (the signature of an almost-difference-set support)
  bool three_level = false;
};
LevelSummary classify_levels(const AcfProfile& acf);

std::string to_csv_row(const BipolarSequence& s);    // "1,-1,..."
std::string to_bitstring(const BipolarSequence& s);  // '1' where the entry is -1

}  // namespace cyclo6
