#pragma once

#include <json.hpp>

#include "limlab/falsify.hpp"

namespace limlab {

using Json = nlohmann::json;  // alphabetically ordered keys: canonical dumps

Json to_json(const SparseMatrix& m);
SparseMatrix sparse_matrix_from_json(const Json& j);

Json to_json(const FinitePoset& p);
FinitePoset poset_from_json(const Json& j);

Json to_json(const WindowedSet& s);
WindowedSet windowed_set_from_json(const Json& j);

Json to_json(const Tower& t);
Tower tower_from_json(const Json& j);

Json to_json(const IdealBasisA& b);
IdealBasisA ideal_basis_from_json(const Json& j);

Json to_json(const SystemSpec& s);
std::shared_ptr<const SystemSpec> system_from_json(const Json& j);

Json to_json(const Cochain& c);
Cochain cochain_from_json(const Json& j, std::shared_ptr<const SystemSpec> system);

Json to_json(const GroupInvariants& g);
Json to_json(const LimitResult& r);

Json to_json(const CoherentFamily& f);
CoherentFamily family_from_json(const Json& j);

Json to_json(const TreeOrders& o);
TreeOrders tree_orders_from_json(const Json& j);

Json to_json(const FalsificationReport& r);

// Canonical text: sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const Json& j);

}  // namespace limlab
