#pragma once

#include <json.hpp>

#include "hypsum/oracle.hpp"
#include "hypsum/prover.hpp"

namespace hypsum {

// TheoremSpec schema:
// {
//   "name": "kummer",
//   "parameters": ["a", "b"],
//   "upper": ["a", "b"],
//   "lower": ["1+a-b"],
//   "z": "-1",
//   "rhs_gammas": [{"sign": 1, "arg": "1+a/2"}, ...],
//   "conditions": ["Re(b) < 1"]
// }
nlohmann::json theorem_to_json(const TheoremSpec& spec);
TheoremSpec theorem_from_json(const nlohmann::json& j);

// Certificate file (cmd verify): the theorem fields plus
//   "shift": {"param": "a", "step": 2},
//   "certificate": "-(b-1)*k/((1+a+2*n-b+k)*(a+2*n))"
struct VerifyInput {
    TheoremSpec spec;
    std::optional<std::pair<std::string, int>> shift;
    RationalFunction certificate;
};
VerifyInput verify_input_from_json(const nlohmann::json& j);

nlohmann::json transcript_to_json(const ProofTranscript& t);
ProofTranscript transcript_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const NumericReport& r);

} // namespace hypsum
