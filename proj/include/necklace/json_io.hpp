#pragma once

#include <json.hpp>

#include "necklace/ncform.hpp"
#include "necklace/path.hpp"
#include "necklace/rep.hpp"
#include "necklace/root_theory.hpp"

namespace necklace {

// {"vertices": ["1", ...], "edges": [{"name": "a", "from": "1", "to": "2"}]}
Quiver quiver_from_json(const nlohmann::json& j);
nlohmann::json quiver_to_json(const Quiver& q);
nlohmann::json doubled_to_json(const DoubledQuiver& q);

// Accepts a path to a quiver JSON file or a builtin spec: "jordan",
// "loops-<n>", "a<n>", "star-<arms>", "kronecker-<edges>".
Quiver load_quiver(const std::string& arg);

// "i:2,j:3" or a JSON object mapping vertex names to integers.
DimVector parse_dims(const std::string& text, const Quiver& q);
DimVector dims_from_json(const nlohmann::json& j, const Quiver& q);
nlohmann::json dims_to_json(const Quiver& q, const DimVector& d);

// matrices as arrays of rows of exact rational strings
nlohmann::json matrix_to_json(const DenseMat& m);
DenseMat matrix_from_json(const nlohmann::json& j);
nlohmann::json rep_point_to_json(const RepPoint& rho);
RepPoint rep_point_from_json(const nlohmann::json& j, const QuiverPtr& q);

// forms as arrays of [coeff, p0, p1, ...] in the path expression grammar
nlohmann::json form_to_json(const NCForm& w);
NCForm form_from_json(const nlohmann::json& j, const QuiverPtr& q);

}  // namespace necklace
