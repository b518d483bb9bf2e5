#pragma once

#include "plesken/algebra.hpp"
#include "plesken/functor.hpp"
#include "plesken/plesken_algebra.hpp"

#include <json.hpp>

namespace plesken {

using Json = nlohmann::json;

/// {"re": "p/q", "im": "p/q"}
Json scalar_to_json(const Scalar &k);
Scalar scalar_from_json(const Json &j);

/// {"group": "<spec>", "terms": [{"elem": "<label>", "re": "p/q", "im": "p/q"}]}
Json element_to_json(const AlgebraElement &x);
/// Resolves labels against the given group; throws ParseError.
AlgebraElement element_from_json(const Json &j, const GroupPtr &group);
/// Builds the group named by the "group" field first.
AlgebraElement element_from_json(const Json &j);

/// {"group", "dim", "basis": [labels], "sc": [{"k","l","m","re","im"}]}
Json structure_constants_to_json(const StructureConstants &sc);

Json hom_to_json(const GroupHom &f);
Json law_report_to_json(const SubgroupCategory &c, const LawReport &r);
Json fullness_to_json(const SubgroupCategory &c, const FullnessReport &r);
Json witnesses_to_json(const SubgroupCategory &c, const std::vector<FaithfulnessWitness> &w);
Json objects_to_json(const SubgroupCategory &c);

} // namespace plesken
