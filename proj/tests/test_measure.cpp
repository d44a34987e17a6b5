#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <type_traits>

#include "support/generators.hpp"
#include "treeplane/error.hpp"
#include "treeplane/measure.hpp"

using namespace treeplane;
using namespace treeplane::testing;

// measure-valued results are exact rationals, structurally
static_assert(std::is_same_v<decltype(std::declval<const ClopenSet&>().measure()),
                             DyadicRational>);
static_assert(
    std::is_same_v<decltype(std::declval<const ClopenPlane&>().measure()),
                   DyadicRational>);
static_assert(
    std::is_same_v<decltype(std::declval<const ClopenSet&>().measure_within(
                       std::declval<const Node&>())),
                   DyadicRational>);
static_assert(!std::is_constructible_v<DyadicRational, double>);
static_assert(!std::is_constructible_v<DyadicRational, float>);

namespace {

Node xorw(const Node& a, const Node& b) {
  std::size_t n = std::max(a.size(), b.size());
  std::vector<Letter> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = (a.at_or_zero(i) ^ b.at_or_zero(i)) & 1;
  return Node(std::move(v));
}

}  // namespace

TEST_CASE("dyadic arithmetic is exact and canonical") {
  DyadicRational half = DyadicRational::power_of_two(-1);
  DyadicRational q = DyadicRational::scaled(6, 3);  // 6/8 = 3/4
  CHECK(q.numerator() == 3);
  CHECK(q.exponent() == 2);
  CHECK(half + half == DyadicRational(1));
  CHECK(q - half == DyadicRational::scaled(1, 2));
  CHECK(q * q == DyadicRational::scaled(9, 4));
  CHECK(DyadicRational(0) < half);
  CHECK(q.to_string() == "3/2^2");
  CHECK(DyadicRational::parse("3/2^2") == q);
  CHECK(DyadicRational::parse("-5/2^3") == -DyadicRational::scaled(5, 3));
  CHECK_THROWS_AS(DyadicRational::parse("nonsense"), Error);
}

TEST_CASE("rational serialization round-trips") {
  Lcg rng(5);
  for (std::size_t rep = 0; rep < 200; ++rep) {
    DyadicRational r = DyadicRational::scaled(
        BigInt(static_cast<long long>(rng.next_below(1 << 20)) - (1 << 19)),
        static_cast<std::uint32_t>(rng.next_below(40)));
    CHECK(DyadicRational::parse(r.to_string()) == r);
  }
}

TEST_CASE("clopen set algebra") {
  ClopenSet a = ClopenSet::cylinder(Node{0});
  CHECK(a.measure() == DyadicRational::power_of_two(-1));
  CHECK(a.complement() == ClopenSet::cylinder(Node{1}));
  CHECK(a.unite(a.complement()) == ClopenSet::full_space());
  CHECK(a.intersect(a.complement()).is_empty());
  CHECK(a.contains_cylinder(Node{0, 1}));
  CHECK(!a.contains_cylinder(Node{1, 0}));
}

TEST_CASE("canonicalization is idempotent and measure preserving") {
  Lcg rng(9);
  for (std::size_t rep = 0; rep < 100; ++rep) {
    ClopenSet s = random_clopen_at_least(rng, 4, DyadicRational::scaled(1, 2));
    auto gens = s.generators();
    ClopenSet rebuilt = ClopenSet::from_generators(gens);
    CHECK(rebuilt == s);
    CHECK(rebuilt.measure() == s.measure());
    CHECK(rebuilt.generators() == gens);
    // generators form an antichain
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j)
        CHECK(incomparable(gens[i], gens[j]));
  }
  CHECK_THROWS_AS(ClopenSet::from_generators({Node{0}, Node{0, 1}}), Error);
}

TEST_CASE("symmetrize fixed points and annihilation") {
  ClopenPlane full = ClopenPlane::full_space();
  CHECK(symmetrize(full) == full);
  ClopenPlane off = ClopenPlane::box(Node{0}, Node{1});
  CHECK(symmetrize(off).is_empty());
}

TEST_CASE("symmetrize measure bound, brute-forced over the 64-cell grid") {
  Lcg rng(13);
  for (std::size_t rep = 0; rep < 60; ++rep) {
    // random union of depth-3 x depth-3 cells
    bool cells[8][8] = {};
    std::vector<std::pair<Node, Node>> boxes;
    for (std::size_t k = 0; k < 1 + rng.next_below(20); ++k) {
      std::size_t i = rng.next_below(8), j = rng.next_below(8);
      cells[i][j] = true;
      auto bits = [](std::size_t v) {
        return Node{static_cast<Letter>((v >> 2) & 1),
                    static_cast<Letter>((v >> 1) & 1),
                    static_cast<Letter>(v & 1)};
      };
      boxes.emplace_back(bits(i), bits(j));
    }
    ClopenPlane a = ClopenPlane::from_boxes(boxes);
    ClopenPlane sym = symmetrize(a);
    std::size_t count = 0, sym_count = 0;
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) {
        count += cells[i][j];
        sym_count += cells[i][j] && cells[j][i];
      }
    CHECK(a.measure() == DyadicRational::scaled(count, 6));
    CHECK(sym.measure() == DyadicRational::scaled(sym_count, 6));
    // inclusion-exclusion bound
    CHECK(sym.measure() >=
          DyadicRational(2) * a.measure() - DyadicRational(1));
  }
}

TEST_CASE("symmetrize is idempotent and commutes with twin translations") {
  Lcg rng(21);
  for (std::size_t rep = 0; rep < 40; ++rep) {
    ClopenPlane a = random_clopen_plane(rng, 3, 1 + rng.next_below(6));
    ClopenPlane s = symmetrize(a);
    CHECK(symmetrize(s) == s);
    Node t = random_binary_node(rng, 3);
    CHECK(symmetrize(a.translate(t, t)) == symmetrize(a).translate(t, t));
  }
}

TEST_CASE("group translation basics") {
  Lcg rng(25);
  for (std::size_t rep = 0; rep < 100; ++rep) {
    ClopenSet s = random_clopen_at_least(rng, 4, DyadicRational::scaled(1, 3));
    Node t = random_binary_node(rng, 1 + rng.next_below(4));
    CHECK(s.translate(Node{}) == s);
    CHECK(s.translate(t).translate(t) == s);
    CHECK(s.translate(t).measure() == s.measure());
  }
  ClopenPlane p = ClopenPlane::box(Node{0, 1}, Node{1});
  Node t{1, 1};
  CHECK(p.translate(Node{}, Node{}) == p);
  CHECK(p.translate(t, t).translate(t, t) == p);
  CHECK(p.translate(t, Node{}).measure() == p.measure());
}

TEST_CASE("finitely branching tree of nearly full mass, geometric masses") {
  MeasuredTreeOracle mu = geometric_measured_oracle();
  CHECK(mu.node_mass(Node{}) == DyadicRational(1));
  // sigma-additivity from below on a sample node
  DyadicRational acc(0);
  for (Letter a = 0; a < 20; ++a)
    acc = acc + mu.node_mass(Node{3}.child(a));
  CHECK(acc < mu.node_mass(Node{3}));
  CHECK(mu.node_mass(Node{3}) - acc ==
        mu.node_mass(Node{3}) * DyadicRational::power_of_two(-20));

  FSigmaStage s = build_f_sigma_avoiding_miller(mu, 1, 2);
  // partial sums of 1/2^(i+1) pass 1 - 1/2^(k+n) exactly at letter k+n
  CHECK(s.cutoffs == std::vector<Letter>{2, 3});
  CHECK(s.certified_bound ==
        (DyadicRational(1) - DyadicRational::power_of_two(-2)) *
            (DyadicRational(1) - DyadicRational::power_of_two(-3)));
  CHECK(s.certified_bound == DyadicRational::scaled(21, 5));

  // independent brute-force minimization of the cutoff condition
  for (std::size_t n : {1, 2}) {
    FSigmaStage stage = build_f_sigma_avoiding_miller(mu, n, 4);
    std::vector<Node> level{Node{}};
    for (std::size_t k = 1; k <= 4; ++k) {
      DyadicRational eps = DyadicRational::power_of_two(-static_cast<int>(k + n));
      Letter m = 0;
      while (true) {
        bool all = true;
        for (const Node& node : level) {
          DyadicRational sum(0);
          for (Letter i = 0; i <= m; ++i)
            sum = sum + mu.node_mass(node.child(i));
          if (!(sum > (DyadicRational(1) - eps) * mu.node_mass(node)))
            all = false;
        }
        if (all) break;
        ++m;
      }
      CHECK(stage.cutoffs[k - 1] == m);
      std::vector<Node> next;
      for (const Node& node : level)
        for (Letter i = 0; i <= m; ++i) next.push_back(node.child(i));
      level = std::move(next);
    }
    // every level is finitely branching with the recorded cutoff
    TreeWalk walk(stage.tree);
    for (std::size_t lv = 0; lv < 4; ++lv)
      for (auto id : walk.level_ids(lv))
        CHECK(walk.child_count(id) == stage.cutoffs[lv] + 1);
  }
}

TEST_CASE("plane inscription on the band-complement stages") {
  std::vector<ClopenPlane> stages = band_complement_stages(8);
  for (std::size_t k = 0; k + 1 < stages.size(); ++k) {
    CHECK(stages[k].intersect(stages[k + 1]) == stages[k]);
    CHECK(stages[k].measure() ==
          DyadicRational(1) - DyadicRational::power_of_two(
                                  -static_cast<int>(2 * k + 4)));
  }
  for (std::size_t levels : {1, 2}) {
    PlaneInscription run = inscribe_measure(stages, levels);
    CHECK(run.steps.size() == levels);
    CHECK(run.base_mass > run.base_bound);
    for (const PlaneStep& s : run.steps) {
      CHECK(s.box_mass > s.box_threshold);
      CHECK(s.b_mass > s.b_bound);
      CHECK(s.b_mass > DyadicRational(0));
      CHECK(s.box_left != s.box_right);
    }
    CHECK(check_kind(run.tree, TreeKind::uniformly_perfect, run.tree.height())
              .consistent);
    // labels of equal pattern length share a length and siblings differ
    for (const auto& [w, t] : run.labels) {
      for (const auto& [w2, t2] : run.labels)
        if (w.size() == w2.size()) CHECK(t.size() == t2.size());
      if (!w.empty()) {
        CHECK(run.labels.at(w.parent()).is_prefix_of(t));
        Node sib = w.parent().child(1 - w[w.size() - 1]);
        CHECK(!(run.labels.at(sib) == t));
      }
    }
    CHECK(replay_plane_inscription(run, stages).empty());
  }
}

TEST_CASE("plane inscription replay rejects tampering") {
  std::vector<ClopenPlane> stages = band_complement_stages(8);
  PlaneInscription run = inscribe_measure(stages, 1);
  PlaneInscription bad = run;
  bad.steps[0].b_mass = bad.steps[0].b_mass + DyadicRational::power_of_two(-30);
  CHECK(!replay_plane_inscription(bad, stages).empty());
  PlaneInscription bad2 = run;
  bad2.labels[Node{0}] = xorw(bad2.labels[Node{0}], Node{1});
  CHECK(!replay_plane_inscription(bad2, stages).empty());
}

TEST_CASE("plane inscription needs enough stage mass") {
  std::vector<ClopenPlane> thin{
      ClopenPlane::box(Node{0}, Node{0})};  // measure 1/4
  CHECK_THROWS_AS(inscribe_measure(thin, 1), Error);
}

TEST_CASE("silver tree inside the half space") {
  ClopenSet half = ClopenSet::cylinder(Node{0});
  SilverInscription run = silver_in_closed(half, 2);
  CHECK(run.seed_cylinder == Node{0});
  CHECK(run.seed_mass > run.seed_threshold);
  CHECK(run.base_mass > run.base_bound);
  for (const SilverStep& s : run.steps) {
    CHECK(s.block_mass_min > s.block_threshold);
    CHECK(s.half_split_min >= s.half_split_threshold);
    CHECK(s.b_mass > s.b_bound);
    CHECK(s.b_mass > DyadicRational(0));
  }
  CHECK(check_kind(run.tree, TreeKind::silver, run.tree.height()).consistent);
  // the whole tree stays inside the half space
  for (const Node& tip : run.tree.tips()) CHECK(tip[0] == 0);
  CHECK(replay_silver_inscription(run, half).empty());
}

TEST_CASE("silver label family is translation coherent") {
  ClopenSet half = ClopenSet::cylinder(Node{0});
  SilverInscription run = silver_in_closed(half, 2);
  Node zero3 = Node{0, 0, 0};
  for (const auto& [s, label] : run.labels) {
    if (s.size() != 3) continue;
    Node t_s = xorw(label, run.labels.at(zero3));
    for (const auto& [s2, label2] : run.labels) {
      if (s2.size() != 3) continue;
      Node t_s2 = xorw(label2, run.labels.at(zero3));
      CHECK(xorw(xorw(label, t_s2), t_s) == label2);
    }
  }
}

TEST_CASE("silver tree inside random clopen sets") {
  Lcg rng(33);
  for (std::size_t rep = 0; rep < 5; ++rep) {
    ClopenSet f =
        random_clopen_at_least(rng, 4, DyadicRational::scaled(3, 2));
    SilverInscription run = silver_in_closed(f, 2);
    CHECK(check_kind(run.tree, TreeKind::silver, run.tree.height()).consistent);
    CHECK(replay_silver_inscription(run, f).empty());
    for (const SilverStep& s : run.steps) CHECK(s.b_mass > DyadicRational(0));
  }
}

TEST_CASE("silver inscription replay rejects tampering") {
  ClopenSet half = ClopenSet::cylinder(Node{0});
  SilverInscription run = silver_in_closed(half, 1);
  SilverInscription bad = run;
  bad.steps[0].b_mass = bad.steps[0].b_mass + DyadicRational::power_of_two(-20);
  CHECK(!replay_silver_inscription(bad, half).empty());
}

TEST_CASE("silver inscription rejects null input") {
  CHECK_THROWS_AS(silver_in_closed(ClopenSet::empty_set(), 1), Error);
}

TEST_CASE("small set witness on the full binary tree") {
  SmallSetSpec spec = SmallSetSpec::default_spec(6);
  SmallSetWitness w = small_set_witness(spec, full_tree(Alphabet::binary), 10);
  CHECK(w.x_prefix != w.y_prefix);
  CHECK(w.difference_level == 0);
  CHECK(w.x_prefix[0] != w.y_prefix[0]);
  for (std::size_t i = 1; i < 10; ++i) CHECK(w.x_prefix[i] == w.y_prefix[i]);
  // depth 10 covers intervals of lengths 1,2,3,4; every one past the first
  // is a hit
  CHECK(w.hit_intervals == std::vector<std::size_t>{1, 2, 3});
  // exact partial sums: sum 2^-(n+1) <= sum 2^-n over covered indices
  CHECK(w.pattern_sum ==
        DyadicRational::scaled(1, 1) + DyadicRational::scaled(1, 2) +
            DyadicRational::scaled(1, 3) + DyadicRational::scaled(1, 4));
  CHECK(w.pattern_sum <= w.bound_sum);
}

TEST_CASE("small set witness needs depth for three intervals") {
  SmallSetSpec spec = SmallSetSpec::default_spec(6);
  try {
    small_set_witness(spec, full_tree(Alphabet::binary), 4);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::depth_too_shallow);
  }
}

TEST_CASE("small set witness on seeded silver oracles") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    SmallSetSpec spec = SmallSetSpec::default_spec(8);
    SmallSetWitness w = small_set_witness(spec, seeded_silver_oracle(seed), 15);
    CHECK(w.x_prefix != w.y_prefix);
    CHECK(w.pattern_sum <= w.bound_sum);
    for (std::size_t n : w.hit_intervals)
      for (std::size_t i = spec.start_of(n); i < spec.end_of(n); ++i)
        CHECK(w.x_prefix[i] == w.y_prefix[i]);
  }
}

TEST_CASE("replays reject smuggled labels") {
  std::vector<ClopenPlane> stages = band_complement_stages(8);
  PlaneInscription run = inscribe_measure(stages, 1);
  PlaneInscription extra = run;
  Node bogus = extra.labels.at(Node{0});
  extra.labels[Node{0, 1}] = bogus.concat(Node{1});
  extra.tree.insert_branch(extra.labels[Node{0, 1}]);
  CHECK(!replay_plane_inscription(extra, stages).empty());

  ClopenSet half = ClopenSet::cylinder(Node{0});
  SilverInscription sil = silver_in_closed(half, 1);
  SilverInscription sextra = sil;
  sextra.labels[Node{0, 0, 0}] = sextra.labels.at(Node{0, 0}).concat(Node{0});
  sextra.tree.insert_branch(sextra.labels[Node{0, 0, 0}]);
  CHECK(!replay_silver_inscription(sextra, half).empty());
}
