#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "treeplane/category.hpp"
#include "treeplane/clopen.hpp"
#include "treeplane/dense_open.hpp"
#include "treeplane/finite_tree.hpp"
#include "treeplane/genericity.hpp"
#include "treeplane/measure.hpp"
#include "treeplane/oracle.hpp"

namespace treeplane {

using Json = nlohmann::json;

// Nodes are plain arrays of naturals; trees carry their alphabet and a
// length-lex sorted, prefix-closed node list (validated on load).
Json node_to_json(const Node& n);
Node node_from_json(const Json& j, Alphabet a = Alphabet::omega);

Json tree_to_json(const FiniteTree& t);
FiniteTree tree_from_json(const Json& j);

Json box_to_json(const Box& b);
Box box_from_json(const Json& j);

// {"builtin": "miller_U" | "silver_U" | "up_miller_G", "params": {...}}
struct OracleDescriptor {
  std::string builtin;
  std::size_t up_miller_n = 0;
};
OracleDescriptor oracle_descriptor_from_json(const Json& j);
// Planar oracles only; rejects up_miller_G.
OpenDenseOracle dense_oracle_from_json(const Json& j);
DenseSequence dense_sequence_from_json(const Json& j);

// {"family": ..., "params": {...}}
TreeOracle tree_oracle_from_json(const Json& j);

Json clopen_to_json(const ClopenSet& s);
ClopenSet clopen_from_json(const Json& j);

Json plane_to_json(const ClopenPlane& p);
ClopenPlane plane_from_json(const Json& j);

// {"stages": [...]} or {"builtin": "band_complement", "count": n}
std::vector<ClopenPlane> stages_from_json(const Json& j);

Json inscription_to_json(const InscriptionResult& r);
InscriptionResult inscription_from_json(const Json& j);

Json plane_inscription_to_json(const PlaneInscription& r);
PlaneInscription plane_inscription_from_json(const Json& j);

Json silver_inscription_to_json(const SilverInscription& r);
SilverInscription silver_inscription_from_json(const Json& j);

Json fsigma_to_json(const FSigmaStage& s);

Json avoidance_to_json(const AvoidanceWitness& w);
Json up_miller_to_json(const UpMillerWitness& w);
Json small_set_to_json(const SmallSetWitness& w);

Json chain_log_to_json(const ChainLog& log);

std::vector<DenseSetRefiner> schedule_from_json(const Json& j);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace treeplane
