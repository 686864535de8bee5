#pragma once

// Dataset files and report serialization.
//
// A dataset is a JSON document
//
//   {
//     "dimension": 4,                      // real dimension 2n
//     "fixed_points": [
//       {"id": "P0", "weights": [1, 3], "moment": "0"},
//       ...
//     ],
//     "synthetic_moments": true            // optional
//   }
//
// `moment` is optional and is either a JSON integer or a string "p" / "p/q";
// it is always written back as a string so that no value goes through a
// floating point representation.

#include "hamloc/betti_chern.hpp"
#include "hamloc/fixed_point.hpp"
#include "hamloc/rigidity.hpp"
#include "hamloc/skeleton.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>

namespace hamloc {

using Json = nlohmann::ordered_json;

/// Malformed dataset text (syntax, types, shape, zero weights).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

FixedPointData parse_dataset(const std::string& text);
FixedPointData load_dataset(const std::string& path);
/// Two-space indented JSON followed by a newline.
std::string serialize_dataset(const FixedPointData& data);
void save_dataset(const FixedPointData& data, const std::string& path);

Json to_json(const ValidationReport& r);
Json to_json(const MorseProfile& p);
Json to_json(const FixedPointData& data, const ToricSkeleton& s);
Json to_json(const SkeletonAnalysis& a);
Json to_json(const CIntegerBreakdown& c);
Json to_json(const BoundReport& r);
Json to_json(const RigidityCertificate& c, const FixedPointData& data);

} // namespace hamloc
