#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "qhom/cocycle.hpp"
#include "qhom/groups.hpp"
#include "qhom/homology.hpp"
#include "qhom/quandle.hpp"

namespace qhom {

using Group = std::variant<FinAbGroup, FiniteGroup>;

// "abelian:3,9", "cyclic:27", "heisenberg3", "g4_27".
Group parse_group_spec(const std::string& spec);
// {"type":"abelian","moduli":[...]} or {"type":"table","n":..,"mult":[[..]],"labels":[..]}
Group group_from_json(const nlohmann::json& j);

// "takasaki:3,3", "dihedral:5", "core:<group spec>", "trivial:n",
// "extension:p[,plain|halved]", a JSON quandle object, or a path to a JSON file.
FiniteQuandle parse_quandle_spec(const std::string& spec);
FiniteQuandle quandle_from_json(const nlohmann::json& j);
nlohmann::json quandle_to_json(const FiniteQuandle& q);

// "generator:p[,plain|halved]", "zero:m", or a JSON cocycle object / file
// {"quandle":<spec or object>,"modulus":m,"values":[[..]]}. The base quandle
// of generator cocycles is T(Z_p + Z_p).
TwoCocycle parse_cocycle_spec(const std::string& spec, const FiniteQuandle* base = nullptr);
TwoCocycle cocycle_from_json(const nlohmann::json& j);
nlohmann::json cocycle_to_json(const TwoCocycle& phi, const std::string& quandle_spec = "");

nlohmann::json homology_to_json(const HomologyGroup& h);
HomologyGroup homology_from_json(const nlohmann::json& j);
nlohmann::json chain_to_json(const Chain& c);
Chain chain_from_json(const nlohmann::json& j);

// Closest known constructor name for an unknown one.
std::string suggest_name(const std::string& name);

}  // namespace qhom
