#pragma once

#include <string>

#include <json.hpp>

#include "chebytower/coeffs.hpp"
#include "chebytower/invariants.hpp"
#include "chebytower/polyseq.hpp"
#include "chebytower/trees.hpp"
#include "chebytower/verify.hpp"

namespace chebytower {

// All machine formats carry numbers as decimal strings (no exponent
// notation); rationals as "p/q" with the "/q" omitted when q = 1.
using Json = nlohmann::ordered_json;

Json poly_to_json(int n, const EvenPoly& p);
std::string poly_to_csv(const EvenPoly& p, bool header = false);

/// Human layout, terms in decreasing degree: "x^4 - 4x^2 + 2".
std::string poly_to_text(const EvenPoly& p);

Json coeffs_to_json(const CoeffVector& row);
std::string coeffs_to_csv(const CoeffVector& row, bool header = false);

Json table_to_json(const InvariantTable& table);
InvariantTable table_from_json(const Json& j);
std::string table_to_text(const InvariantTable& table);

Json tree_to_json(const TreePtr& t);
Json grouped_to_json(const std::map<WeightMonomial, Int>& groups);

}  // namespace chebytower
