#include "treeplane/measure.hpp"

#include <algorithm>
#include <deque>

#include "treeplane/error.hpp"

namespace treeplane {

MeasuredTreeOracle geometric_measured_oracle() {
  MeasuredTreeOracle m;
  m.tree = full_tree(Alphabet::omega);
  m.tree.advertised_kind = std::nullopt;
  m.node_mass = [](const Node& n) {
    DyadicRational mass(1);
    for (Letter a : n.letters())
      mass = mass * DyadicRational::power_of_two(-static_cast<int>(a) - 1);
    return mass;
  };
  return m;
}

FSigmaStage build_f_sigma_avoiding_miller(const MeasuredTreeOracle& mu,
                                          std::size_t n, std::size_t depth,
                                          std::size_t fuel) {
  FSigmaStage out;
  out.tree = FiniteTree(Alphabet::omega);
  out.tree.insert_branch(Node{});
  out.certified_bound = DyadicRational(1);

  std::vector<Node> level{Node{}};
  for (std::size_t k = 1; k <= depth; ++k) {
    DyadicRational eps =
        DyadicRational::power_of_two(-static_cast<int>(k + n));
    // minimal letter bound retaining mass fraction > 1 - eps below every node
    std::vector<DyadicRational> need;
    need.reserve(level.size());
    for (const Node& s : level)
      need.push_back((DyadicRational(1) - eps) * mu.node_mass(s));
    std::vector<DyadicRational> acc(level.size(), DyadicRational(0));
    std::size_t satisfied_at = fuel;
    for (std::size_t m = 0; m < fuel; ++m) {
      bool all = true;
      for (std::size_t i = 0; i < level.size(); ++i) {
        acc[i] = acc[i] +
                 mu.node_mass(level[i].child(static_cast<Letter>(m)));
        if (!(acc[i] > need[i])) all = false;
      }
      if (all) {
        satisfied_at = m;
        break;
      }
    }
    if (satisfied_at == fuel)
      throw Error(Errc::fuel_exhausted,
                  "cutoff search at level " + std::to_string(k));
    Letter cutoff = static_cast<Letter>(satisfied_at);
    out.cutoffs.push_back(cutoff);
    out.certified_bound = out.certified_bound * (DyadicRational(1) - eps);

    std::vector<Node> next;
    for (const Node& s : level)
      for (Letter a = 0; a <= cutoff; ++a) {
        Node c = s.child(a);
        out.tree.insert_branch(c);
        next.push_back(c);
      }
    level = std::move(next);
  }
  return out;
}

// ---------------------------------------------------------------------------

DyadicRational plane_epsilon(std::size_t n) {
  return DyadicRational::power_of_two(-static_cast<int>(2 * n + 3));
}

namespace {

Node xor_words(const Node& a, const Node& b) {
  std::size_t len = std::max(a.size(), b.size());
  std::vector<Letter> v(len);
  for (std::size_t i = 0; i < len; ++i)
    v[i] = (a.at_or_zero(i) ^ b.at_or_zero(i)) & 1;
  return Node(std::move(v));
}

std::vector<Node> binary_words(std::size_t len) {
  std::vector<Node> out;
  out.reserve(std::size_t{1} << len);
  for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
    std::vector<Letter> v(len);
    for (std::size_t i = 0; i < len; ++i)
      v[i] = (bits >> (len - 1 - i)) & 1;
    out.emplace_back(std::move(v));
  }
  return out;
}

struct DenseBoxHit {
  std::size_t depth;
  Node left, right;
  DyadicRational mass;
  DyadicRational threshold;
};

// First box (by side length, then lexicographically on left ⌢ right) with
// distinct sides whose exact mass inside b clears (1-eps)/2^(2N).
std::optional<DenseBoxHit> first_dense_box(const ClopenPlane& b,
                                           const DyadicRational& eps,
                                           std::size_t max_depth) {
  for (std::size_t n = 1; n <= max_depth; ++n) {
    DyadicRational threshold = (DyadicRational(1) - eps) *
                               DyadicRational::power_of_two(-2 * static_cast<int>(n));
    for (const Node& l : binary_words(n)) {
      for (const Node& r : binary_words(n)) {
        if (l == r) continue;
        DyadicRational mass = b.intersect(ClopenPlane::box(l, r)).measure();
        if (mass > threshold)
          return DenseBoxHit{n, l, r, mass, threshold};
      }
    }
  }
  return std::nullopt;
}

// B_n from the current labels: the intersection over ordered label pairs of
// the translated symmetrized stage pieces, the stage chosen by the meet
// length of the index words.
ClopenPlane running_intersection(
    const std::map<Node, Node, LengthLexLess>& labels, std::size_t gen,
    const std::vector<ClopenPlane>& stages,
    const std::vector<std::size_t>& stage_of_meet) {
  ClopenPlane acc = ClopenPlane::full_space();
  for (const auto& [ws, ts] : labels) {
    if (ws.size() != gen) continue;
    for (const auto& [we, te] : labels) {
      if (we.size() != gen) continue;
      std::size_t meet = ws.meet(we).size();
      const ClopenPlane& stage = stages.at(stage_of_meet.at(meet));
      ClopenPlane piece =
          ClopenPlane::box(ts, te).intersect(stage).translate(ts, te);
      acc = acc.intersect(symmetrize(piece));
    }
  }
  return acc;
}

}  // namespace

PlaneInscription inscribe_measure(const std::vector<ClopenPlane>& stages,
                                  std::size_t levels) {
  PlaneInscription run;
  run.levels = levels;

  // ascending-stage sanity
  for (std::size_t i = 0; i + 1 < stages.size(); ++i)
    if (!stages[i].intersect(stages[i + 1]).operator==(stages[i]))
      throw Error(Errc::schema_error, "stages are not ascending");

  DyadicRational eps0 = plane_epsilon(0);
  std::size_t k0 = stages.size();
  for (std::size_t k = 0; k < stages.size(); ++k)
    if (stages[k].measure() > DyadicRational(1) - eps0) {
      k0 = k;
      break;
    }
  if (k0 == stages.size())
    throw Error(Errc::stage_deficit_too_large,
                "no stage has measure above 1 - eps_0");
  run.base_stage = k0;
  std::vector<std::size_t> stage_of_meet{k0};

  ClopenPlane b = symmetrize(stages[k0]);
  run.base_mass = b.measure();
  run.base_bound = DyadicRational(1) - DyadicRational(2) * eps0;
  if (!(run.base_mass > run.base_bound))
    throw Error(Errc::stage_deficit_too_large,
                "symmetrized base stage misses its bound");

  run.labels[Node{}] = Node{};

  for (std::size_t step = 1; step <= levels; ++step) {
    DyadicRational eps = plane_epsilon(step);
    auto hit = first_dense_box(b, eps, b.depth() / 2 + 2);
    if (!hit)
      throw Error(Errc::density_search_exhausted,
                  "no dense box at step " + std::to_string(step));

    PlaneStep rec;
    rec.step = step;
    rec.chosen_depth = hit->depth;
    rec.box_left = hit->left;
    rec.box_right = hit->right;
    rec.box_mass = hit->mass;
    rec.box_threshold = hit->threshold;

    // extend labels: left side under letter 0, right side under letter 1,
    // each translated by the parent's zero-padded label
    std::map<Node, Node, LengthLexLess> next_labels = run.labels;
    for (const auto& [w, t] : run.labels) {
      if (w.size() != step - 1) continue;
      next_labels[w.child(0)] = xor_words(hit->left, t.pad_zeros(hit->depth));
      next_labels[w.child(1)] = xor_words(hit->right, t.pad_zeros(hit->depth));
    }
    run.labels = std::move(next_labels);

    // stage selection: every ordered pair of fresh labels must keep mass
    // above the threshold at the new stage
    DyadicRational stage_threshold =
        (DyadicRational(1) - eps) *
        DyadicRational::power_of_two(-2 * static_cast<int>(hit->depth));
    std::size_t prev_k = stage_of_meet.back();
    std::size_t chosen = stages.size();
    DyadicRational chosen_min;
    for (std::size_t k = prev_k + 1; k < stages.size(); ++k) {
      bool all = true;
      DyadicRational least;
      bool first = true;
      for (const auto& [ws, ts] : run.labels) {
        if (ws.size() != step) continue;
        for (const auto& [we, te] : run.labels) {
          if (we.size() != step) continue;
          DyadicRational m =
              stages[k].intersect(ClopenPlane::box(ts, te)).measure();
          if (first || m < least) least = m;
          first = false;
          if (!(m > stage_threshold)) {
            all = false;
            break;
          }
        }
        if (!all) break;
      }
      if (all) {
        chosen = k;
        chosen_min = least;
        break;
      }
    }
    if (chosen == stages.size())
      throw Error(Errc::stage_deficit_too_large,
                  "no stage meets the pair threshold at step " +
                      std::to_string(step));
    stage_of_meet.push_back(chosen);
    rec.stage_index = chosen;
    rec.stage_mass_min = chosen_min;
    rec.stage_threshold = stage_threshold;

    b = running_intersection(run.labels, step, stages, stage_of_meet);
    rec.b_mass = b.measure();
    rec.b_bound = (DyadicRational(1) -
                   DyadicRational::power_of_two(2 * static_cast<int>(step)) *
                       eps) *
                  DyadicRational::power_of_two(-2 * static_cast<int>(hit->depth));
    if (!(rec.b_mass > rec.b_bound))
      throw Error(Errc::stage_deficit_too_large,
                  "running intersection misses its bound at step " +
                      std::to_string(step));
    run.steps.push_back(std::move(rec));
  }

  for (const auto& [w, t] : run.labels) run.tree.insert_branch(t);
  return run;
}

std::vector<std::string> replay_plane_inscription(
    const PlaneInscription& run, const std::vector<ClopenPlane>& stages) {
  std::vector<std::string> failures;
  auto fail = [&](const std::string& m) { failures.push_back(m); };

  DyadicRational eps0 = plane_epsilon(0);
  if (run.base_stage >= stages.size()) {
    fail("base stage index out of range");
    return failures;
  }
  if (!(stages[run.base_stage].measure() > DyadicRational(1) - eps0))
    fail("base stage misses 1 - eps_0");
  ClopenPlane b = symmetrize(stages[run.base_stage]);
  if (!(b.measure() == run.base_mass)) fail("base mass mismatch");
  if (!(run.base_mass > run.base_bound)) fail("base bound fails");

  std::vector<std::size_t> stage_of_meet{run.base_stage};
  std::map<Node, Node, LengthLexLess> labels;
  labels[Node{}] = Node{};

  for (const PlaneStep& rec : run.steps) {
    DyadicRational eps = plane_epsilon(rec.step);
    DyadicRational mass =
        b.intersect(ClopenPlane::box(rec.box_left, rec.box_right)).measure();
    if (!(mass == rec.box_mass)) fail("recorded box mass mismatch");
    if (!(mass > rec.box_threshold))
      fail("box threshold fails at step " + std::to_string(rec.step));
    if (rec.box_left == rec.box_right) fail("box sides equal");

    std::map<Node, Node, LengthLexLess> next = labels;
    for (const auto& [w, t] : labels) {
      if (w.size() != rec.step - 1) continue;
      next[w.child(0)] = xor_words(rec.box_left, t.pad_zeros(rec.chosen_depth));
      next[w.child(1)] = xor_words(rec.box_right, t.pad_zeros(rec.chosen_depth));
    }
    labels = std::move(next);
    for (const auto& [w, t] : labels) {
      auto it = run.labels.find(w);
      if (it == run.labels.end() || !(it->second == t)) {
        fail("label mismatch at " + w.to_string());
        return failures;
      }
    }
    if (rec.step == run.steps.size() && labels.size() != run.labels.size())
      fail("artifact carries labels the steps do not produce");

    if (rec.stage_index >= stages.size()) {
      fail("stage index out of range");
      return failures;
    }
    for (const auto& [ws, ts] : labels) {
      if (ws.size() != rec.step) continue;
      for (const auto& [we, te] : labels) {
        if (we.size() != rec.step) continue;
        DyadicRational m = stages[rec.stage_index]
                               .intersect(ClopenPlane::box(ts, te))
                               .measure();
        if (!(m > rec.stage_threshold))
          fail("stage pair threshold fails at step " +
               std::to_string(rec.step));
      }
    }
    stage_of_meet.push_back(rec.stage_index);

    b = running_intersection(labels, rec.step, stages, stage_of_meet);
    if (!(b.measure() == rec.b_mass))
      fail("running intersection mass mismatch at step " +
           std::to_string(rec.step));
    if (!(rec.b_mass > rec.b_bound))
      fail("running intersection bound fails at step " +
           std::to_string(rec.step));
  }

  FiniteTree t(Alphabet::binary);
  for (const auto& [w, lab] : run.labels) t.insert_branch(lab);
  if (!(t == run.tree)) fail("tree is not the closure of the labels");
  return failures;
}

std::vector<ClopenPlane> band_complement_stages(std::size_t count) {
  std::vector<ClopenPlane> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k)
    out.push_back(diagonal_band(2 * k + 4).complement());
  return out;
}

// ---------------------------------------------------------------------------

DyadicRational silver_epsilon(std::size_t n) {
  return DyadicRational::power_of_two(-static_cast<int>(n + 3));
}

namespace {

// Labels and translations from the seed cylinder and blocks: the label of a
// pattern word s is seed ⌢ s(0) ⌢ block_1 ⌢ s(1) ⌢ ...; its translation
// differs from the all-zero pattern's label exactly at the split positions.
Node silver_label(const Node& seed, const std::vector<Node>& blocks,
                  const Node& pattern) {
  Node out = seed;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    out = out.child(pattern[i]);
    if (i + 1 < pattern.size()) out = out.concat(blocks.at(i));
  }
  return out;
}

ClopenSet silver_intersection(const ClopenSet& f, const Node& seed,
                              const std::vector<Node>& blocks,
                              std::size_t gen) {
  Node zero_label = silver_label(seed, blocks, Node(std::vector<Letter>(gen, 0)));
  ClopenSet acc = ClopenSet::full_space();
  for (const Node& s : binary_words(gen)) {
    Node label = silver_label(seed, blocks, s);
    Node shift = xor_words(label, zero_label);
    acc = acc.intersect(
        ClopenSet::cylinder(label).intersect(f).translate(shift));
  }
  return acc;
}

}  // namespace

SilverInscription silver_in_closed(const ClopenSet& f, std::size_t levels) {
  if (f.is_empty() || !(f.measure() > DyadicRational(0)))
    throw Error(Errc::stage_deficit_too_large, "input set has measure zero");

  SilverInscription run;
  run.levels = levels;

  DyadicRational eps0 = silver_epsilon(0);
  std::optional<Node> seed;
  for (std::size_t len = 0; len <= f.depth() + 1 && !seed; ++len) {
    for (const Node& s : binary_words(len)) {
      DyadicRational mass = f.measure_within(s);
      DyadicRational threshold =
          (DyadicRational(1) - eps0) *
          DyadicRational::power_of_two(-static_cast<int>(len));
      if (mass > threshold) {
        seed = s;
        run.seed_mass = mass;
        run.seed_threshold = threshold;
        break;
      }
    }
  }
  if (!seed)
    throw Error(Errc::density_search_exhausted, "no nearly full cylinder");
  run.seed_cylinder = *seed;

  std::vector<Node> blocks;
  run.labels[Node{0}] = seed->child(0);
  run.labels[Node{1}] = seed->child(1);

  ClopenSet b = silver_intersection(f, *seed, blocks, 1);
  run.base_mass = b.measure();
  run.base_bound =
      (DyadicRational(1) - DyadicRational::power_of_two(2) * eps0) *
      DyadicRational::power_of_two(-static_cast<int>(seed->size() + 1));
  if (!(run.base_mass > run.base_bound))
    throw Error(Errc::stage_deficit_too_large, "base intersection too small");

  for (std::size_t step = 1; step <= levels; ++step) {
    DyadicRational eps = silver_epsilon(step);
    std::size_t gen = step;  // patterns of length `gen` currently labeled
    std::vector<Node> patterns = binary_words(gen);

    // common block search through the translated intersection
    std::optional<Node> block;
    SilverStep rec;
    std::size_t block_cap = b.depth() + 2;
    for (std::size_t len = 0; len <= block_cap && !block; ++len) {
      for (const Node& candidate : binary_words(len)) {
        bool all = true;
        DyadicRational least;
        bool first = true;
        for (const Node& s : patterns) {
          Node base = silver_label(*seed, blocks, s).concat(candidate);
          DyadicRational mass = f.measure_within(base);
          DyadicRational threshold =
              (DyadicRational(1) - eps) *
              DyadicRational::power_of_two(-static_cast<int>(base.size()));
          if (first || mass < least) least = mass;
          first = false;
          if (!(mass > threshold)) {
            all = false;
            break;
          }
        }
        if (all) {
          block = candidate;
          rec.block_mass_min = least;
          Node zero_base = silver_label(*seed, blocks,
                                        Node(std::vector<Letter>(gen, 0)))
                               .concat(candidate);
          rec.block_threshold =
              (DyadicRational(1) - eps) *
              DyadicRational::power_of_two(-static_cast<int>(zero_base.size()));
          break;
        }
      }
    }
    if (!block)
      throw Error(Errc::density_search_exhausted,
                  "no common block at step " + std::to_string(step));
    rec.step = step;
    rec.block = *block;
    blocks.push_back(*block);

    // split letters after the block; certify the half-split bound
    bool first = true;
    DyadicRational least;
    for (const Node& s : patterns) {
      Node base = silver_label(*seed, blocks, s).concat(*block);
      for (Letter i : {Letter{0}, Letter{1}}) {
        DyadicRational mass = f.measure_within(base.child(i));
        if (first || mass < least) least = mass;
        first = false;
      }
    }
    rec.half_split_min = least;
    {
      Node zero_base = silver_label(*seed, blocks,
                                    Node(std::vector<Letter>(gen, 0)))
                           .concat(*block);
      rec.half_split_threshold =
          (DyadicRational::power_of_two(-1) - eps) *
          DyadicRational::power_of_two(-static_cast<int>(zero_base.size()));
    }
    if (rec.half_split_min < rec.half_split_threshold)
      throw Error(Errc::stage_deficit_too_large,
                  "half-split bound fails at step " + std::to_string(step));

    for (const Node& s : patterns)
      for (Letter i : {Letter{0}, Letter{1}})
        run.labels[s.child(i)] =
            silver_label(*seed, blocks, s.child(i));

    b = silver_intersection(f, *seed, blocks, gen + 1);
    rec.b_mass = b.measure();
    {
      Node zero_label = silver_label(
          *seed, blocks, Node(std::vector<Letter>(gen + 1, 0)));
      rec.b_bound =
          (DyadicRational(1) -
           DyadicRational::power_of_two(static_cast<int>(step) + 3) * eps) *
          DyadicRational::power_of_two(-static_cast<int>(zero_label.size()));
    }
    if (!(rec.b_mass > rec.b_bound))
      throw Error(Errc::stage_deficit_too_large,
                  "intersection bound fails at step " + std::to_string(step));
    run.steps.push_back(std::move(rec));
  }

  for (const auto& [s, label] : run.labels) run.tree.insert_branch(label);
  return run;
}

std::vector<std::string> replay_silver_inscription(const SilverInscription& run,
                                                   const ClopenSet& f) {
  std::vector<std::string> failures;
  auto fail = [&](const std::string& m) { failures.push_back(m); };

  if (!(f.measure_within(run.seed_cylinder) == run.seed_mass))
    fail("seed mass mismatch");
  if (!(run.seed_mass > run.seed_threshold)) fail("seed threshold fails");

  std::vector<Node> blocks;
  for (const SilverStep& rec : run.steps) blocks.push_back(rec.block);

  // labels must be the seed/block pattern, one per pattern word
  for (const auto& [s, label] : run.labels) {
    if (s.size() == 0 || s.size() > run.steps.size() + 1 ||
        !s.fits(Alphabet::binary)) {
      fail("stray pattern word " + s.to_string());
      continue;
    }
    Node expect = silver_label(run.seed_cylinder, blocks, s);
    if (!(expect == label)) fail("label mismatch at pattern " + s.to_string());
  }
  {
    std::size_t expected_count = 0;
    for (std::size_t len = 1; len <= run.steps.size() + 1; ++len)
      expected_count += std::size_t{1} << len;
    if (run.labels.size() != expected_count)
      fail("artifact label count does not match the steps");
  }

  ClopenSet b = silver_intersection(f, run.seed_cylinder, blocks, 1);
  if (!(b.measure() == run.base_mass)) fail("base mass mismatch");
  if (!(run.base_mass > run.base_bound)) fail("base bound fails");

  for (const SilverStep& rec : run.steps) {
    std::vector<Node> prefix_blocks(blocks.begin(),
                                    blocks.begin() + rec.step);
    DyadicRational eps = silver_epsilon(rec.step);
    DyadicRational least;
    DyadicRational split_least;
    bool first = true;
    for (const Node& s : binary_words(rec.step)) {
      Node base = silver_label(run.seed_cylinder, prefix_blocks, s)
                      .concat(rec.block);
      DyadicRational mass = f.measure_within(base);
      DyadicRational threshold =
          (DyadicRational(1) - eps) *
          DyadicRational::power_of_two(-static_cast<int>(base.size()));
      if (!(mass > threshold))
        fail("block threshold fails at step " + std::to_string(rec.step));
      for (Letter i : {Letter{0}, Letter{1}}) {
        DyadicRational half = f.measure_within(base.child(i));
        if (first || half < split_least) split_least = half;
      }
      if (first || mass < least) least = mass;
      first = false;
    }
    if (!(least == rec.block_mass_min)) fail("block mass record mismatch");
    if (split_least < rec.half_split_threshold)
      fail("half-split bound fails at step " + std::to_string(rec.step));

    ClopenSet bn = silver_intersection(f, run.seed_cylinder, blocks,
                                       rec.step + 1);
    if (!(bn.measure() == rec.b_mass))
      fail("intersection mass mismatch at step " + std::to_string(rec.step));
    if (!(rec.b_mass > rec.b_bound))
      fail("intersection bound fails at step " + std::to_string(rec.step));
  }

  FiniteTree t(Alphabet::binary);
  for (const auto& [s, label] : run.labels) t.insert_branch(label);
  if (!(t == run.tree)) fail("tree is not the closure of the labels");
  return failures;
}

// ---------------------------------------------------------------------------

SmallSetSpec SmallSetSpec::default_spec(std::size_t count) {
  SmallSetSpec s;
  for (std::size_t n = 0; n < count; ++n) s.lengths.push_back(n + 1);
  return s;
}

std::size_t SmallSetSpec::start_of(std::size_t n) const {
  std::size_t p = 0;
  for (std::size_t i = 0; i < n; ++i) p += lengths.at(i);
  return p;
}

std::size_t SmallSetSpec::end_of(std::size_t n) const {
  return start_of(n) + lengths.at(n);
}

SmallSetWitness small_set_witness(const SmallSetSpec& spec,
                                  const TreeOracle& s, std::size_t depth,
                                  std::size_t fuel) {
  for (std::size_t n = 0; n < spec.lengths.size(); ++n)
    if (spec.lengths[n] < n)
      throw Error(Errc::schema_error,
                  "interval " + std::to_string(n) + " shorter than its index");
  if (s.advertised_kind && *s.advertised_kind != TreeKind::silver)
    throw Error(Errc::not_silver,
                "oracle advertises " + to_string(*s.advertised_kind));

  std::size_t covered = 0;
  while (covered < spec.lengths.size() && spec.end_of(covered) <= depth)
    ++covered;
  if (covered < 3)
    throw Error(Errc::depth_too_shallow,
                "depth covers only " + std::to_string(covered) + " intervals");

  // walk the level-determined tree, diverging at the first splitting level
  Node x, y, probe;
  std::optional<std::size_t> diff_level;
  for (std::size_t lv = 0; lv < depth; ++lv) {
    auto letters = s.children(probe, fuel);
    if (letters.empty())
      throw Error(Errc::not_silver, "tree dies at level " + std::to_string(lv));
    if (!diff_level && letters.size() >= 2 &&
        lv + 1 < spec.start_of(covered - 1)) {
      diff_level = lv;
      x = x.child(letters.front());
      y = y.child(letters[1]);
    } else {
      x = x.child(letters.front());
      y = y.child(letters.front());
    }
    probe = probe.child(letters.front());
  }
  if (!diff_level)
    throw Error(Errc::depth_too_shallow,
                "no splitting level before the last covered interval");

  SmallSetWitness w;
  w.x_prefix = x;
  w.y_prefix = y;
  w.difference_level = *diff_level;
  w.pattern_sum = DyadicRational(0);
  w.bound_sum = DyadicRational(0);
  for (std::size_t n = 0; n < covered; ++n) {
    bool hit = true;
    for (std::size_t i = spec.start_of(n); i < spec.end_of(n); ++i)
      hit = hit && x[i] == y[i];
    if (hit) w.hit_intervals.push_back(n);
    w.pattern_sum =
        w.pattern_sum +
        DyadicRational::power_of_two(-static_cast<int>(spec.lengths[n]));
    w.bound_sum =
        w.bound_sum + DyadicRational::power_of_two(-static_cast<int>(n));
  }
  return w;
}

}  // namespace treeplane
