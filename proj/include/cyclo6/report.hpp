#pragma once

#include <string>

#include <json.hpp>

#include "cyclo6/ads_search.hpp"
#include "cyclo6/formulas.hpp"
#include "cyclo6/sequences.hpp"

namespace cyclo6 {

using nlohmann::json;

// every report shares this envelope: {"meta": ..., "kind": ..., "body": ...};
// nlohmann keeps object keys sorted, so dumps are byte-deterministic
json make_envelope(const std::string& kind, json meta, json body);
json context_meta(const CyclotomyContext& ctx);

json spectrum_json(const DistanceSpectrum& spec);
json to_json(const AdsReport& rep);
json classes_body(const CyclotomyContext& ctx);
json cyclo_numbers_body(const CyclotomyContext& ctx, const std::string& mode);
json to_json(const DiscrepancyReport& rep);
json to_json(const ErrataReport& rep);
json row_json(const SearchRow& row);
json to_json(const SearchReport& rep, bool include_rows);
json to_json(const RangeSweepReport& rep);
json to_json(const CanonicalPairReport& rep);
json acf_body(const SupportSet& support, const BipolarSequence& seq, const AcfProfile& acf);

// fixed column orders for the CSV surfaces
std::string search_rows_csv(const SearchReport& rep);
std::string acf_csv(const AcfProfile& acf);
std::string cyclo_numbers_csv(const CyclotomyContext& ctx, const std::string& mode);

}  // namespace cyclo6
