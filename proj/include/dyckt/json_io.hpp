#pragma once

#include <string>

#include <json.hpp>

#include "dyckt/garnir.hpp"
#include "dyckt/permmod.hpp"
#include "dyckt/tiling.hpp"

namespace dyckt {

using nlohmann::json;

json to_json(const Partition& p);
Partition partition_from_json(const json& j);

// {"outer":[...],"inner":[...],"tiles":[[[a,b],...],...]}
json to_json(const Tiling& t);
Tiling tiling_from_json(const json& j);

json to_json(const IntMatrix& m);
json to_json(const PolyMatrix& m);
std::string to_csv(const IntMatrix& m);
std::string to_csv(const PolyMatrix& m);

// {"pi":[...],"node":[a,b],"e":e,"kappa":k,"terms":[{"coeff":c,"lambda":[...],
//  "tableau":[[...],...],"psi_word":[...]}]}
json garnir_to_json(const Partition& pi, Node node, int e, int kappa,
                    const std::vector<GarnirTerm>& terms);
json classical_to_json(const Partition& pi, Node node, int e, int kappa,
                       const std::vector<ClassicalTerm>& terms,
                       const PsiWord& row_word);

json to_json(const Report& r);

}  // namespace dyckt
