#pragma once

// JSON forms of the library's values.

#include <json.hpp>

#include "wittforge/filtration.hpp"
#include "wittforge/universal.hpp"
#include "wittforge/witt.hpp"

namespace wittforge {

using Json = nlohmann::ordered_json;

/// {"op": ..., "index_set": [...], "variables": [...], "polynomials": {"n": [[{"x1": 1}, "c"], ...]}}
Json universal_to_json(const UniversalFamily& fam);
UniversalFamily universal_from_json(const Json& j, const IndexSet& e, UniversalOp op, IndexSet::Index k);

/// {"ring": "<descriptor>", "index_set": [1, 2, ...], "coords": {"1": "<elem>", ...}}
Json witt_to_json(const WittVector& a);
WittVector witt_from_json(const Json& j);
/// {"1": "<elem>", ...} for a list aligned with E.
Json coords_json(const IndexSet& e, const std::vector<Element>& values);
Json index_set_json(const IndexSet& e);
/// Rationals as strings, one array per row.
Json matrix_json(const linalg::Matrix& m);
/// {"pieces": {"<deg>": {"rank": r, "relations": []}}, "t_maps": {"<deg>": [[...]]}, "generators": {...}}
Json rees_to_json(const ReesModule& g);
/// {"ambient_dim": m, "lo": lo, "zero_above": bool, "fil": {"<i>": {"dim": d, "basis": [[...]]}}}
Json filtered_to_json(const FilteredModule& m);

}  // namespace wittforge
