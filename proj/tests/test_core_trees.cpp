#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "support/generators.hpp"
#include "support/kind_oracle.hpp"
#include "treeplane/error.hpp"
#include "treeplane/finite_tree.hpp"
#include "treeplane/kinds.hpp"
#include "treeplane/oracle.hpp"

using namespace treeplane;
using namespace treeplane::testing;

namespace {

FiniteTree full_binary_to(std::size_t depth) {
  return approximate(full_tree(Alphabet::binary), depth, 2);
}

std::vector<Letter> letters(std::initializer_list<Letter> l) { return l; }

}  // namespace

TEST_CASE("successors on finite trees") {
  FiniteTree t = tree_of({Node{}, Node{0}, Node{1}, Node{0, 0}});
  CHECK(successors(t, Node{0}) == letters({0}));
  CHECK(successors(t, Node{}) == letters({0, 1}));
  try {
    successors(t, Node{0, 1});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::node_not_in_tree);
  }
}

TEST_CASE("successors on oracles truncate to fuel") {
  TreeOracle o = full_tree(Alphabet::omega);
  CHECK(successors(o, Node{}, 4) == letters({0, 1, 2, 3}));
  TreeOracle chain = chain_then_full(Node{2, 5}, Alphabet::omega);
  CHECK(successors(chain, Node{2}, 4) == letters({5}));
  CHECK_THROWS_AS(successors(chain, Node{3}, 4), Error);
}

TEST_CASE("split nodes") {
  CHECK(split_nodes(tree_of({Node{}, Node{0}, Node{1}})) ==
        std::vector<Node>{Node{}});
  CHECK(split_nodes(tree_of({Node{}, Node{0}})).empty());

  // independent enumeration over the full binary tree of depth 3
  FiniteTree t = full_binary_to(3);
  FlatTree flat = FlatTree::from(t);
  std::vector<Node> expected;
  for (const Node& n : flat.nodes)
    if (flat.succ_count(n) >= 2) expected.push_back(n);
  std::sort(expected.begin(), expected.end(), LengthLexLess{});
  CHECK(split_nodes(t) == expected);
  for (const Node& n : expected) CHECK(n.size() <= 2);
  CHECK(expected.size() == 1 + 2 + 4);
}

TEST_CASE("immediate splitting successors") {
  FiniteTree full3 = full_binary_to(3);
  CHECK(immediate_splitting_successors(full3, Node{}) ==
        std::vector<Node>{Node{}});
  FiniteTree t = tree_of({Node{}, Node{0}, Node{0, 0}, Node{0, 1}});
  CHECK(immediate_splitting_successors(t, Node{}) ==
        std::vector<Node>{Node{0}});
  FiniteTree chain = tree_of({Node{}, Node{0}, Node{0, 0}});
  CHECK(immediate_splitting_successors(chain, Node{}).empty());
  CHECK_THROWS_AS(immediate_splitting_successors(chain, Node{1}), Error);
}

TEST_CASE("immediate splitting successors form an antichain inside splits") {
  auto trees = all_binary_trees(3);
  for (std::size_t i = 0; i < trees.size(); i += 7) {
    FiniteTree t = tree_of(trees[i]);
    auto splits = split_nodes(t);
    for (const Node& s : t.all_nodes()) {
      auto succ = immediate_splitting_successors(t, s);
      for (std::size_t a = 0; a < succ.size(); ++a) {
        CHECK(std::find(splits.begin(), splits.end(), succ[a]) != splits.end());
        CHECK(s.is_prefix_of(succ[a]));
        for (std::size_t b = a + 1; b < succ.size(); ++b)
          CHECK(incomparable(succ[a], succ[b]));
      }
    }
  }
}

TEST_CASE("stem") {
  CHECK(stem(tree_of({Node{}, Node{0}, Node{1}}), 5) == Node{});
  FiniteTree t =
      tree_of({Node{}, Node{2}, Node{2, 0}, Node{2, 1}}, Alphabet::omega);
  CHECK(stem(t, 5) == Node{2});

  std::vector<Node> chain{Node{}};
  for (std::size_t i = 1; i <= 10; ++i)
    chain.push_back(Node(std::vector<Letter>(i, 0)));
  try {
    stem(tree_of(chain), 5);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::no_split_within_fuel);
  }
}

TEST_CASE("tips, height, rank") {
  FiniteTree t = tree_of({Node{}, Node{0}, Node{0, 0}});
  CHECK(tips(t) == std::vector<Node>{Node{0, 0}});
  CHECK(height(t) == 2);

  FiniteTree root = tree_of({Node{}});
  CHECK(tips(root) == std::vector<Node>{Node{}});
  CHECK(height(root) == 0);

  FiniteTree t2 = tree_of({Node{}, Node{0}, Node{1}, Node{0, 0}});
  CHECK(node_rank(t2, Node{1}) == 0);
  CHECK(height(t2) == 2);
  CHECK(node_rank(t2, Node{}) == 2);
  CHECK_THROWS_AS(node_rank(t2, Node{1, 1}), Error);
}

TEST_CASE("check_kind worked examples") {
  FiniteTree full4 = full_binary_to(4);
  CHECK(check_kind(full4, TreeKind::uniformly_perfect, 4).consistent);

  FiniteTree silver_bad =
      tree_of({Node{}, Node{0}, Node{1}, Node{0, 0}, Node{0, 1}, Node{1, 0}});
  auto v = check_kind(silver_bad, TreeKind::silver, 2);
  CHECK(!v.consistent);
  REQUIRE(v.witnesses.size() == 2);
  CHECK(v.witnesses[0] == Node{0});
  CHECK(v.witnesses[1] == Node{1});

  FiniteTree up_bad =
      tree_of({Node{}, Node{0}, Node{1}, Node{0, 0}, Node{0, 1}});
  auto v2 = check_kind(up_bad, TreeKind::uniformly_perfect, 2);
  CHECK(!v2.consistent);
  REQUIRE(!v2.witnesses.empty());
  CHECK(v2.witnesses[0] == Node{1});
}

TEST_CASE("check_kind is monotone in depth") {
  auto trees = all_binary_trees(4);
  Lcg rng(11);
  for (std::size_t rep = 0; rep < 400; ++rep) {
    FiniteTree t = tree_of(trees[rng.next_below(trees.size())]);
    std::size_t h = t.height();
    for (TreeKind k :
         {TreeKind::perfect, TreeKind::silver, TreeKind::uniformly_perfect,
          TreeKind::splits_and_rests, TreeKind::laver}) {
      for (std::size_t d = 0; d + 1 <= h; ++d) {
        auto lo = check_kind(t, k, d);
        auto hi = check_kind(t, k, d + 1);
        if (!lo.consistent) CHECK(!hi.consistent);
      }
    }
  }
}

TEST_CASE("check_kind agrees with quantifier expansion to depth 3") {
  auto trees = all_binary_trees(3);
  CHECK(trees.size() == 676);
  for (const auto& nodes : trees) {
    FiniteTree t = tree_of(nodes);
    FlatTree flat = FlatTree::from(t);
    std::size_t d = t.height();
    for (TreeKind k :
         {TreeKind::perfect, TreeKind::miller, TreeKind::laver,
          TreeKind::silver, TreeKind::uniformly_perfect, TreeKind::slalom,
          TreeKind::splits_and_rests, TreeKind::evenly_cut}) {
      CAPTURE(to_string(k));
      CHECK(check_kind(t, k, d).consistent == oracle_check(flat, k, d));
    }
  }
}

TEST_CASE("prefix closure is preserved by constructors and approximations") {
  Lcg rng(3);
  for (std::size_t rep = 0; rep < 50; ++rep) {
    FiniteTree t(Alphabet::omega);
    for (std::size_t i = 0; i < 1 + rng.next_below(12); ++i)
      t.insert_branch(random_omega_node(rng, 1 + rng.next_below(5), 4));
    for (const Node& n : t.all_nodes())
      for (std::size_t k = 0; k <= n.size(); ++k) CHECK(t.contains(n.prefix(k)));
  }
  FiniteTree a = approximate(seeded_miller_oracle(5), 4, 5);
  for (const Node& n : a.all_nodes())
    if (!n.empty()) CHECK(a.contains(n.parent()));
}

TEST_CASE("from_nodes validates prefix closure and alphabet") {
  CHECK_THROWS_AS(tree_of({Node{}, Node{0, 0}}), Error);
  CHECK_THROWS_AS(tree_of({Node{}, Node{2}}, Alphabet::binary), Error);
  CHECK_NOTHROW(tree_of({Node{}, Node{2}}, Alphabet::omega));
}

TEST_CASE("silver reduction: full binary tree to depth 4") {
  // retained splitting levels 0 and 2, least letter elsewhere
  FiniteTree out = silver_splits_and_rests(full_tree(Alphabet::binary), 4);
  FiniteTree expected(Alphabet::binary);
  for (Letter a : {0, 1})
    for (Letter b : {0, 1}) expected.insert_branch(Node{a, 0, b, 0});
  CHECK(out == expected);
}

TEST_CASE("silver reduction keeps an already thinned tree") {
  TreeOracle o = level_split_tree({0, 2}, std::nullopt, Alphabet::omega);
  FiniteTree out = silver_splits_and_rests(o, 4, 2);
  // splitting levels 0 and 2 are two apart already, so both are retained
  FiniteTree expected(Alphabet::omega);
  for (Letter a : {0, 1})
    for (Letter b : {0, 1}) expected.insert_branch(Node{a, 0, b, 0});
  CHECK(out == expected);
}

TEST_CASE("silver reduction of a chain is the chain") {
  TreeOracle chain = chain_then_full(Node{1, 0, 1, 0}, Alphabet::omega);
  FiniteTree out = silver_splits_and_rests(chain, 4, 2);
  FiniteTree expected(Alphabet::omega);
  expected.insert_branch(Node{1, 0, 1, 0});
  CHECK(out == expected);
  CHECK(split_nodes(out).empty());
}

TEST_CASE("silver reduction detects a violation") {
  FiniteTree bad =
      tree_of({Node{}, Node{0}, Node{1}, Node{0, 0}, Node{0, 1}, Node{1, 0}});
  try {
    silver_splits_and_rests(oracle_from_tree(bad), 2, 4);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_silver);
  }
}

TEST_CASE("silver reduction output invariants on seeded oracles") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    TreeOracle o = seeded_silver_oracle(seed);
    FiniteTree out = silver_splits_and_rests(o, 8, 2);
    FiniteTree approx = approximate(o, 8, 2);
    CHECK(out.is_subtree_of(approx));
    CHECK(check_kind(out, TreeKind::silver, 8).consistent);
    CHECK(check_kind(out, TreeKind::splits_and_rests, 8).consistent);
  }
}

TEST_CASE("oracle stem and approximation basics") {
  TreeOracle o = chain_then_full(Node{3, 1}, Alphabet::omega);
  CHECK(stem(o, 10) == Node{3, 1});
  CHECK_THROWS_AS(stem(o, 1), Error);
  FiniteTree a = approximate(o, 3, 3);
  CHECK(a.contains(Node{3, 1, 2}));
  CHECK(!a.contains(Node{2}));
}

TEST_CASE("violation witnesses stay valid at deeper frontiers") {
  auto trees = all_binary_trees(4);
  Lcg rng(47);
  for (std::size_t rep = 0; rep < 300; ++rep) {
    FiniteTree t = tree_of(trees[rng.next_below(trees.size())]);
    std::size_t h = t.height();
    for (std::size_t d = 0; d + 1 <= h; ++d) {
      auto v = check_kind(t, TreeKind::silver, d);
      if (!v.consistent) {
        // the recorded pair still has differing successor sets at d+1
        REQUIRE(v.witnesses.size() == 2);
        CHECK(t.successor_letters(v.witnesses[0]) !=
              t.successor_letters(v.witnesses[1]));
        CHECK(!check_kind(t, TreeKind::silver, d + 1).consistent);
      }
      auto sr = check_kind(t, TreeKind::splits_and_rests, d);
      if (!sr.consistent) {
        REQUIRE(sr.witnesses.size() == 2);
        CHECK(t.successor_count(sr.witnesses[0]) >= 2);
        CHECK(t.successor_count(sr.witnesses[1]) >= 2);
        CHECK(!check_kind(t, TreeKind::splits_and_rests, d + 1).consistent);
      }
    }
  }
}
