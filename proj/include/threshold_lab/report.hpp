#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "threshold_lab/census.hpp"
#include "threshold_lab/connected_reduction.hpp"
#include "threshold_lab/graph.hpp"
#include "threshold_lab/leading.hpp"
#include "threshold_lab/numbers.hpp"
#include "threshold_lab/sampling.hpp"
#include "threshold_lab/thresholds.hpp"
#include "threshold_lab/verify.hpp"

namespace tlab {

// Reports keep insertion order so serialized output is stable byte-for-byte.
using json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "threshold-lab";
inline constexpr const char* kToolVersion = "0.1.0";

json to_json(const Graph& g);
json to_json(const Prob& p);
json to_json(const Rational& q);       // {"num","den"} as decimal strings
json to_json(const ThresholdResult& t);
json to_json(const SparseCheck& s);
json to_json(const Census& c);
json to_json(const PcEstimate& pc);
json to_json(const LeadingDecomposition& d);
json to_json(const std::vector<RatioRow>& rows);
json to_json(const VerifyReport& rep);
json to_json(const ConnReductionReport& rep);

// {"tool","version","command","input_hash","params","result"}
json report_envelope(const std::string& command, const std::string& input_hash,
                     const json& params, const json& result);

// FNV-1a, used to fingerprint inputs for reports and cache keys.
std::uint64_t fnv1a64(std::string_view s);
std::string hex64(std::uint64_t x);

}  // namespace tlab
