#pragma once

#include <json.hpp>

#include "permcover/closed_forms.hpp"
#include "permcover/exposure.hpp"
#include "permcover/group_codes.hpp"
#include "permcover/radius_solver.hpp"
#include "permcover/witnesses.hpp"

/// JSON forms of the library's value types. Permutations are one-line strings
/// "[2,3,1]"; readers also accept an array of integers or cycle notation.
/// Malformed input raises ValidationError.
namespace permcover::json_io {

using json = nlohmann::ordered_json;

json to_json(const Permutation &f);
Permutation permutation_from_json(const json &j, int degree = 0);

/// {"kind":"cyclic","n":7}, {"kind":"dihedral","n":12},
/// {"kind":"product","parts":[5,3]},
/// {"kind":"relabeled","base":{...},"pi":"[...]"},
/// {"kind":"explicit","n":4,"elements":["[...]", ...]}.
json to_json(const CodeDescriptor &d);
CodeDescriptor descriptor_from_json(const json &j);

/// Like the descriptor form; explicit codes carry their elements.
json to_json(const GroupCode &code);
GroupCode code_from_json(const json &j);
/// Parses text as JSON first, then falls back to the short forms
/// "G_7", "D_12", "G_{5,3}".
GroupCode code_from_text(const std::string &text);

json to_json(const PartialPlacement &placement);
PartialPlacement placement_from_json(const json &j, int degree);

json to_json(const BoundsInterval &b);
json to_json(const ClampedBound &b);

json to_json(const RadiusResult &r);
RadiusResult radius_result_from_json(const json &j);

json to_json(const WitnessBundle &w);
WitnessBundle witness_from_json(const json &j);

json to_json(const ExposureExplanation &e);
json to_json(const RelabelExtrema &e);
json to_json(const LminReductionReport &r);

} // namespace permcover::json_io
