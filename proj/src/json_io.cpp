#include "treeplane/json_io.hpp"

#include <fstream>

#include "treeplane/error.hpp"

namespace treeplane {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw Error(Errc::schema_error, what);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t size_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    bad(std::string("field '") + key + "' must be a natural");
  return v.get<std::size_t>();
}

DyadicRational rational_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) bad(std::string("field '") + key + "' must be a rational string");
  return DyadicRational::parse(v.get<std::string>());
}

Json rational_to_json(const DyadicRational& r) { return r.to_string(); }

}  // namespace

Json node_to_json(const Node& n) {
  Json j = Json::array();
  for (Letter a : n.letters()) j.push_back(a);
  return j;
}

Node node_from_json(const Json& j, Alphabet a) {
  if (!j.is_array()) bad("node must be an array of naturals");
  std::vector<Letter> v;
  for (const Json& e : j) {
    if (!e.is_number_integer() || e.get<long long>() < 0)
      bad("node entries must be naturals");
    v.push_back(e.get<Letter>());
  }
  Node n(std::move(v));
  if (!n.fits(a)) bad("node " + n.to_string() + " does not fit the alphabet");
  return n;
}

Json tree_to_json(const FiniteTree& t) {
  Json nodes = Json::array();
  t.for_each_node([&](const Node& n) { nodes.push_back(node_to_json(n)); });
  return Json{{"alphabet", to_string(t.alphabet())}, {"nodes", nodes}};
}

FiniteTree tree_from_json(const Json& j) {
  Alphabet a = alphabet_from_string(field(j, "alphabet").get<std::string>());
  const Json& nodes = field(j, "nodes");
  if (!nodes.is_array()) bad("nodes must be an array");
  std::vector<Node> list;
  for (const Json& e : nodes) list.push_back(node_from_json(e, a));
  return FiniteTree::from_nodes(a, list);
}

Json box_to_json(const Box& b) {
  return Json{{"left", node_to_json(b.left)}, {"right", node_to_json(b.right)}};
}

Box box_from_json(const Json& j) {
  return Box{node_from_json(field(j, "left")), node_from_json(field(j, "right"))};
}

OracleDescriptor oracle_descriptor_from_json(const Json& j) {
  OracleDescriptor d;
  d.builtin = field(j, "builtin").get<std::string>();
  if (d.builtin != "miller_U" && d.builtin != "silver_U" &&
      d.builtin != "up_miller_G")
    bad("unknown builtin oracle '" + d.builtin + "'");
  if (d.builtin == "up_miller_G")
    d.up_miller_n = size_field(field(j, "params"), "n");
  return d;
}

OpenDenseOracle dense_oracle_from_json(const Json& j) {
  OracleDescriptor d = oracle_descriptor_from_json(j);
  if (d.builtin == "miller_U") return make_miller_u_oracle();
  if (d.builtin == "silver_U") return make_silver_u_oracle();
  bad("oracle '" + d.builtin + "' is one-dimensional, not a planar oracle");
}

DenseSequence dense_sequence_from_json(const Json& j) {
  return constant_sequence(dense_oracle_from_json(j));
}

TreeOracle tree_oracle_from_json(const Json& j) {
  std::string family = field(j, "family").get<std::string>();
  Json params = j.contains("params") ? j.at("params") : Json::object();
  if (family == "full") {
    Alphabet a = alphabet_from_string(
        params.contains("alphabet") ? params.at("alphabet").get<std::string>()
                                    : "omega");
    return full_tree(a);
  }
  if (family == "chain_then_full") {
    Node stem;
    if (params.contains("stem")) stem = node_from_json(params.at("stem"));
    return chain_then_full(stem, Alphabet::omega);
  }
  if (family == "level_split") {
    std::vector<std::size_t> levels;
    for (const Json& e : field(params, "levels")) levels.push_back(e.get<std::size_t>());
    std::optional<std::size_t> period;
    if (params.contains("period")) period = params.at("period").get<std::size_t>();
    return level_split_tree(std::move(levels), period, Alphabet::omega);
  }
  if (family == "seeded_miller")
    return seeded_miller_oracle(size_field(params, "seed"));
  if (family == "seeded_silver")
    return seeded_silver_oracle(size_field(params, "seed"));
  if (family == "finite_tree")
    return oracle_from_tree(tree_from_json(field(params, "tree")));
  bad("unknown tree oracle family '" + family + "'");
}

Json clopen_to_json(const ClopenSet& s) {
  Json gens = Json::array();
  for (const Node& g : s.generators()) gens.push_back(node_to_json(g));
  return Json{{"generators", gens}};
}

ClopenSet clopen_from_json(const Json& j) {
  std::vector<Node> gens;
  for (const Json& e : field(j, "generators"))
    gens.push_back(node_from_json(e, Alphabet::binary));
  return ClopenSet::from_generators(gens, /*validate_antichain=*/true);
}

Json plane_to_json(const ClopenPlane& p) {
  Json boxes = Json::array();
  for (const auto& [l, r] : p.boxes())
    boxes.push_back(box_to_json(Box{l, r}));
  return Json{{"boxes", boxes}};
}

ClopenPlane plane_from_json(const Json& j) {
  std::vector<std::pair<Node, Node>> boxes;
  for (const Json& e : field(j, "boxes")) {
    Box b = box_from_json(e);
    if (!b.left.fits(Alphabet::binary) || !b.right.fits(Alphabet::binary))
      bad("plane boxes must be binary");
    boxes.emplace_back(b.left, b.right);
  }
  return ClopenPlane::from_boxes(boxes);
}

std::vector<ClopenPlane> stages_from_json(const Json& j) {
  if (j.contains("builtin")) {
    if (j.at("builtin").get<std::string>() != "band_complement")
      bad("unknown stage builtin");
    return band_complement_stages(size_field(j, "count"));
  }
  std::vector<ClopenPlane> out;
  for (const Json& e : field(j, "stages")) out.push_back(plane_from_json(e));
  return out;
}

Json inscription_to_json(const InscriptionResult& r) {
  Json labels = Json::array();
  for (const auto& [w, lab] : r.labels)
    labels.push_back(Json{{"index", node_to_json(w)}, {"node", node_to_json(lab)}});
  Json log = Json::array();
  for (const CertifiedPair& c : r.witness_log)
    log.push_back(Json{{"generation", c.generation},
                       {"first", node_to_json(c.first_index)},
                       {"second", node_to_json(c.second_index)},
                       {"box", box_to_json(c.box)}});
  return Json{{"levels", r.levels},
              {"labels", labels},
              {"miller_approx", tree_to_json(r.miller_approx)},
              {"uniform_approx", tree_to_json(r.uniform_approx)},
              {"witness_log", log}};
}

InscriptionResult inscription_from_json(const Json& j) {
  InscriptionResult r;
  r.levels = size_field(j, "levels");
  for (const Json& e : field(j, "labels"))
    r.labels[node_from_json(field(e, "index"))] = node_from_json(field(e, "node"));
  r.miller_approx = tree_from_json(field(j, "miller_approx"));
  r.uniform_approx = tree_from_json(field(j, "uniform_approx"));
  for (const Json& e : field(j, "witness_log"))
    r.witness_log.push_back(CertifiedPair{size_field(e, "generation"),
                                          node_from_json(field(e, "first")),
                                          node_from_json(field(e, "second")),
                                          box_from_json(field(e, "box"))});
  return r;
}

namespace {

Json labels_to_json(const std::map<Node, Node, LengthLexLess>& labels) {
  Json out = Json::array();
  for (const auto& [w, lab] : labels)
    out.push_back(Json{{"index", node_to_json(w)}, {"node", node_to_json(lab)}});
  return out;
}

void labels_from_json(const Json& j,
                      std::map<Node, Node, LengthLexLess>& labels) {
  for (const Json& e : j)
    labels[node_from_json(field(e, "index"))] =
        node_from_json(field(e, "node"), Alphabet::binary);
}

}  // namespace

Json plane_inscription_to_json(const PlaneInscription& r) {
  Json steps = Json::array();
  for (const PlaneStep& s : r.steps)
    steps.push_back(Json{{"step", s.step},
                         {"depth", s.chosen_depth},
                         {"chosen_box", box_to_json(Box{s.box_left, s.box_right})},
                         {"box_mass", rational_to_json(s.box_mass)},
                         {"threshold", rational_to_json(s.box_threshold)},
                         {"stage", s.stage_index},
                         {"stage_mass_min", rational_to_json(s.stage_mass_min)},
                         {"stage_threshold", rational_to_json(s.stage_threshold)},
                         {"certified_mass", rational_to_json(s.b_mass)},
                         {"bound", rational_to_json(s.b_bound)}});
  return Json{{"levels", r.levels},
              {"base_stage", r.base_stage},
              {"base_mass", rational_to_json(r.base_mass)},
              {"base_bound", rational_to_json(r.base_bound)},
              {"labels", labels_to_json(r.labels)},
              {"steps", steps},
              {"tree", tree_to_json(r.tree)}};
}

PlaneInscription plane_inscription_from_json(const Json& j) {
  PlaneInscription r;
  r.levels = size_field(j, "levels");
  r.base_stage = size_field(j, "base_stage");
  r.base_mass = rational_field(j, "base_mass");
  r.base_bound = rational_field(j, "base_bound");
  labels_from_json(field(j, "labels"), r.labels);
  for (const Json& e : field(j, "steps")) {
    PlaneStep s;
    s.step = size_field(e, "step");
    s.chosen_depth = size_field(e, "depth");
    Box b = box_from_json(field(e, "chosen_box"));
    s.box_left = b.left;
    s.box_right = b.right;
    s.box_mass = rational_field(e, "box_mass");
    s.box_threshold = rational_field(e, "threshold");
    s.stage_index = size_field(e, "stage");
    s.stage_mass_min = rational_field(e, "stage_mass_min");
    s.stage_threshold = rational_field(e, "stage_threshold");
    s.b_mass = rational_field(e, "certified_mass");
    s.b_bound = rational_field(e, "bound");
    r.steps.push_back(std::move(s));
  }
  r.tree = tree_from_json(field(j, "tree"));
  return r;
}

Json silver_inscription_to_json(const SilverInscription& r) {
  Json steps = Json::array();
  for (const SilverStep& s : r.steps)
    steps.push_back(
        Json{{"step", s.step},
             {"chosen_block", node_to_json(s.block)},
             {"block_mass_min", rational_to_json(s.block_mass_min)},
             {"threshold", rational_to_json(s.block_threshold)},
             {"half_split_min", rational_to_json(s.half_split_min)},
             {"half_split_threshold", rational_to_json(s.half_split_threshold)},
             {"certified_mass", rational_to_json(s.b_mass)},
             {"bound", rational_to_json(s.b_bound)}});
  return Json{{"levels", r.levels},
              {"seed", node_to_json(r.seed_cylinder)},
              {"seed_mass", rational_to_json(r.seed_mass)},
              {"seed_threshold", rational_to_json(r.seed_threshold)},
              {"base_mass", rational_to_json(r.base_mass)},
              {"base_bound", rational_to_json(r.base_bound)},
              {"labels", labels_to_json(r.labels)},
              {"steps", steps},
              {"tree", tree_to_json(r.tree)}};
}

SilverInscription silver_inscription_from_json(const Json& j) {
  SilverInscription r;
  r.levels = size_field(j, "levels");
  r.seed_cylinder = node_from_json(field(j, "seed"), Alphabet::binary);
  r.seed_mass = rational_field(j, "seed_mass");
  r.seed_threshold = rational_field(j, "seed_threshold");
  r.base_mass = rational_field(j, "base_mass");
  r.base_bound = rational_field(j, "base_bound");
  labels_from_json(field(j, "labels"), r.labels);
  for (const Json& e : field(j, "steps")) {
    SilverStep s;
    s.step = size_field(e, "step");
    s.block = node_from_json(field(e, "chosen_block"), Alphabet::binary);
    s.block_mass_min = rational_field(e, "block_mass_min");
    s.block_threshold = rational_field(e, "threshold");
    s.half_split_min = rational_field(e, "half_split_min");
    s.half_split_threshold = rational_field(e, "half_split_threshold");
    s.b_mass = rational_field(e, "certified_mass");
    s.b_bound = rational_field(e, "bound");
    r.steps.push_back(std::move(s));
  }
  r.tree = tree_from_json(field(j, "tree"));
  return r;
}

Json fsigma_to_json(const FSigmaStage& s) {
  Json cutoffs = Json::array();
  for (Letter c : s.cutoffs) cutoffs.push_back(c);
  return Json{{"cutoffs", cutoffs},
              {"certified_bound", rational_to_json(s.certified_bound)},
              {"tree", tree_to_json(s.tree)}};
}

Json avoidance_to_json(const AvoidanceWitness& w) {
  return Json{{"x", node_to_json(w.x_prefix)},
              {"y", node_to_json(w.y_prefix)},
              {"x_blocks", w.x_blocks},
              {"y_blocks", w.y_blocks},
              {"generator_bound", w.checked_generator_bound},
              {"generators_examined", w.generators_examined}};
}

Json up_miller_to_json(const UpMillerWitness& w) {
  return Json{{"x", node_to_json(w.x_prefix)},
              {"split_levels", w.split_levels},
              {"generator_bound", w.checked_generator_bound},
              {"generators_examined", w.generators_examined}};
}

Json small_set_to_json(const SmallSetWitness& w) {
  return Json{{"x", node_to_json(w.x_prefix)},
              {"y", node_to_json(w.y_prefix)},
              {"difference_level", w.difference_level},
              {"hit_intervals", w.hit_intervals},
              {"pattern_sum", rational_to_json(w.pattern_sum)},
              {"bound_sum", rational_to_json(w.bound_sum)}};
}

Json chain_log_to_json(const ChainLog& log) {
  Json steps = Json::array();
  for (const ChainStep& s : log.steps)
    steps.push_back(Json{{"label", s.label}, {"tree", tree_to_json(s.tree)}});
  return Json{{"start", tree_to_json(log.start)}, {"steps", steps}};
}

std::vector<DenseSetRefiner> schedule_from_json(const Json& j) {
  if (!j.is_array()) bad("schedule must be an array");
  std::vector<DenseSetRefiner> out;
  for (const Json& e : j) {
    std::string kind = field(e, "kind").get<std::string>();
    Json params = e.contains("params") ? e.at("params") : Json::object();
    if (kind == "perfect") {
      if (params.contains("all_tips") && params.at("all_tips").get<bool>())
        out.push_back(perfect_everywhere_refiner());
      else
        out.push_back(perfect_refiner(node_from_json(field(params, "node"))));
    } else if (kind == "slalom") {
      out.push_back(slalom_refiner(node_from_json(field(params, "word"))));
    } else if (kind == "box_separation") {
      out.push_back(box_separation_refiner(
          size_field(params, "n"),
          dense_oracle_from_json(field(params, "oracle"))));
    } else {
      bad("unknown schedule kind '" + kind + "'");
    }
  }
  return out;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    bad("cannot parse " + path + ": " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) bad("cannot open " + path + " for writing");
  out << j.dump(2) << '\n';
}

}  // namespace treeplane
