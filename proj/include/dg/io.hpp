// JSON and DOT serialisation, poset spec parsing.
#pragma once

#include "dg/catalog.hpp"
#include "dg/doppel.hpp"
#include "dg/ktheory.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace dg {

using json = nlohmann::json;

// Catalog names (gr:k,n ...), root posets (rootA:n ...), chain:n,
// antichain:n, dual:<spec>, or a path to a JSON poset file.
Poset load_poset(const std::string& spec);

json poset_json(const Poset& P);
Poset poset_from_json(const json& j);  // {"size": n, "covers": [[a,b],...]}

// Nodes are elements, edges a -> b for b covering a.
std::string export_dot(const Poset& P, const std::vector<std::pair<std::string, Set>>& highlights = {});
std::string export_dot(const Triple& t);  // gray fill: w, thick border: v \ u

// Shapes in an ambient: a partition "4,3,2,1" where the ambient has a
// Ferrers drawing, otherwise a heap word "s1s3s4" / "1,3,4".
Set parse_shape(const Minuscule& M, const std::string& text);
json shape_json(const Minuscule& M, const Set& s);
json expansion_json(const Minuscule& M, const KExpansion& E);

// Plane partitions on X: {"values": [...]} indexed by element, a flat array,
// or, for a rectangle, a matrix whose (i,j) entry sits i steps down-left and
// j steps down-right of the top element (missing entries are 0).
std::vector<int> pp_from_json(const Poset& X, const json& j);
json report_json(const VerifyReport& r);

}  // namespace dg
