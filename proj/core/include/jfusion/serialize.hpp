#pragma once

// JSON forms of the library's values and reports.
//
//   IndexVector      [1,0,2]
//   polynomial       ["num/den", ...] from the constant term upward
//   partition file   {"k":1,"d":2,"cells":[[[0,0]],[[1,0]],[[0,1],[1,1]]]}
//   classification   {"verdict":"hamming","e":2,"blocks":[[1,2],[3,4]], ...}
//
// Block coordinates are 1-based on the wire. Reports carry no timings, so
// they are byte-identical across runs and worker counts.

#include <string>

#include <nlohmann/json.hpp>

#include "jfusion/enumerate.hpp"
#include "jfusion/explicit_scheme.hpp"
#include "jfusion/fusion.hpp"
#include "jfusion/lemmas.hpp"
#include "jfusion/schemes.hpp"

namespace jfusion {

using json = nlohmann::json;

json to_json(const IndexVector& a);
IndexVector index_vector_from_json(const json& j);

json to_json(const RationalPolynomial& p);
RationalPolynomial polynomial_from_json(const json& j);

json to_json(const FusionPartition& s);
/// Parses the partition file format; throws std::invalid_argument on schema errors.
FusionPartition partition_from_json(const json& j);
FusionPartition read_partition_file(const std::string& path);

json to_json(const BlockStructure& b);
json to_json(const Classification& c);
json to_json(const FusionWitness& w);
json to_json(const FusionVerdict& v);
json to_json(const KeyPropReport& r);
json to_json(const MinimalCellReport& r);
json to_json(const EnumerationReport& r);
json to_json(const TheoremReport& r);
json to_json(const SmallMReport& r);
json to_json(const CrossValidationReport& r);
json to_json(const LemmaSuiteReport& r);

}  // namespace jfusion
