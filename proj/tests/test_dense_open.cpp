#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "support/brute.hpp"
#include "support/generators.hpp"
#include "treeplane/dense_open.hpp"
#include "treeplane/error.hpp"
#include "treeplane/rationals.hpp"

using namespace treeplane;
using namespace treeplane::testing;

TEST_CASE("support of rational points") {
  CHECK(RationalPoint({1, 2}).support() == 2);
  CHECK(RationalPoint({0, 0, 5}).support() == 3);
  CHECK(RationalPoint({1, 2, 0, 0}).support() == 2);  // zero tail trimmed
  try {
    RationalPoint({0, 0, 0}).support();
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::zero_point);
  }
}

TEST_CASE("max entry of pairs") {
  CHECK(max_entry(RationalPoint({1, 2}), RationalPoint({3, 1})) == 3);
  CHECK(max_entry(RationalPoint({0, 1}), RationalPoint({1, 0})) == 1);
  CHECK(max_entry(RationalPoint({7, 0, 2}), RationalPoint({1, 1, 9})) == 9);
}

TEST_CASE("pair validation") {
  CHECK_NOTHROW(RationalPair::checked(RationalPoint({1}), RationalPoint({2})));
  CHECK_THROWS_AS(
      RationalPair::checked(RationalPoint({0, 1}), RationalPoint({1})), Error);
  CHECK_THROWS_AS(
      RationalPair::checked(RationalPoint({1}), RationalPoint({1})), Error);
  CHECK_THROWS_AS(RationalPair::checked(RationalPoint{}, RationalPoint({1})),
                  Error);
}

TEST_CASE("enumeration head matches the documented order") {
  // weight 3 block (supp 1, max 2): (1),(2) then (2),(1); then (supp 2,
  // max 1): (0,1),(1,1) then (1,1),(0,1)
  CHECK(rational_pair_at(0) ==
        RationalPair{RationalPoint({1}), RationalPoint({2})});
  CHECK(rational_pair_at(1) ==
        RationalPair{RationalPoint({2}), RationalPoint({1})});
  CHECK(rational_pair_at(2) ==
        RationalPair{RationalPoint({0, 1}), RationalPoint({1, 1})});
  CHECK(rational_pair_at(3) ==
        RationalPair{RationalPoint({1, 1}), RationalPoint({0, 1})});
}

TEST_CASE("enumeration agrees with the brute expansion and is injective") {
  auto brute = brute_enumeration(10000);
  std::set<std::vector<Letter>> seen;
  for (std::size_t i = 0; i < 10000; ++i) {
    RationalPair p = rational_pair_at(i);
    CHECK(p == brute[i]);
    std::vector<Letter> key = p.first.entries();
    key.push_back(0xffffffffu);
    key.insert(key.end(), p.second.entries().begin(), p.second.entries().end());
    CHECK(seen.insert(key).second);
  }
}

TEST_CASE("every bounded pair appears within the documented bound") {
  std::size_t bound = enumeration_bound(2, 2);
  std::set<std::pair<std::vector<Letter>, std::vector<Letter>>> expected;
  for (std::size_t s = 1; s <= 2; ++s)
    for (const auto& a : brute_sides(s, 2))
      for (const auto& b : brute_sides(s, 2))
        if (a != b) expected.insert({a, b});
  std::set<std::pair<std::vector<Letter>, std::vector<Letter>>> found;
  for (std::size_t i = 0; i < bound; ++i) {
    RationalPair p = rational_pair_at(i);
    if (p.first.support() <= 2 && max_entry(p) <= 2)
      found.insert({p.first.entries(), p.second.entries()});
  }
  CHECK(found == expected);
}

TEST_CASE("enumeration restricted to small supports and entries is a bijection") {
  for (std::size_t s_cap = 1; s_cap <= 3; ++s_cap) {
    for (Letter m_cap = 1; m_cap <= 3; ++m_cap) {
      std::size_t bound = enumeration_bound(s_cap, m_cap);
      std::set<std::pair<std::vector<Letter>, std::vector<Letter>>> expected;
      for (std::size_t s = 1; s <= s_cap; ++s)
        for (const auto& a : brute_sides(s, m_cap))
          for (const auto& b : brute_sides(s, m_cap))
            if (a != b) expected.insert({a, b});
      std::size_t hits = 0;
      std::set<std::pair<std::vector<Letter>, std::vector<Letter>>> found;
      for (std::size_t i = 0; i < bound; ++i) {
        RationalPair p = rational_pair_at(i);
        if (p.first.support() <= s_cap && max_entry(p) <= m_cap) {
          ++hits;
          CHECK(found.insert({p.first.entries(), p.second.entries()}).second);
        }
      }
      CHECK(hits == expected.size());
      CHECK(found == expected);
    }
  }
}

TEST_CASE("miller oracle: worked refinement") {
  OpenDenseOracle u = make_miller_u_oracle();
  Box b = u.refine(Node{1}, Node{2});
  CHECK(b.left == Node{1, 0, 0});
  CHECK(b.right == Node{2, 0, 0});
  CHECK(b.left.size() == b.right.size());
  CHECK(u.contains_box(b) == Containment::inside);
}

TEST_CASE("miller oracle: refine output is always inside") {
  OpenDenseOracle u = make_miller_u_oracle();
  Lcg rng(17);
  for (std::size_t rep = 0; rep < 200; ++rep) {
    Node a = random_omega_node(rng, rng.next_below(4), 3);
    Node b = random_omega_node(rng, rng.next_below(4), 3);
    Box box = u.refine(a, b);
    CHECK(a.is_prefix_of(box.left));
    CHECK(b.is_prefix_of(box.right));
    CHECK(u.contains_box(box) == Containment::inside);
  }
}

TEST_CASE("miller oracle: the all-zero unit box is undecided") {
  OpenDenseOracle u = make_miller_u_oracle();
  // every generator frame is supp + K >= 2, longer than these sides
  CHECK(u.contains_box(Box{Node{0}, Node{0}}) == Containment::unknown);
  for (const RationalPair& q : brute_enumeration(500))
    CHECK(support(q) + max_entry(q) >= 2);
}

TEST_CASE("miller oracle: refine picks the least-index covering generator") {
  OpenDenseOracle u = make_miller_u_oracle();
  Lcg rng(23);
  for (std::size_t rep = 0; rep < 60; ++rep) {
    Node a = random_omega_node(rng, rng.next_below(3), 2);
    Node b = random_omega_node(rng, rng.next_below(3), 2);
    Box box = u.refine(a, b);
    auto covers = [&](const RationalPair& q) { return miller_covers(q, a, b); };
    auto expected = brute_min_cover(covers, 400000);
    REQUIRE(expected.has_value());
    std::size_t len = support(*expected) + max_entry(*expected);
    CHECK(box.left == expected->first.restrict_to(len));
    CHECK(box.right == expected->second.restrict_to(len));
  }
}

TEST_CASE("silver oracle: generator shape") {
  OpenDenseOracle u = make_silver_u_oracle();
  Box b = u.refine(Node{3}, Node{4});
  // sides end in 0,0 and 1,1 and have equal length supp+2
  REQUIRE(b.left.size() == b.right.size());
  std::size_t n = b.left.size();
  CHECK(b.left[n - 1] == 0);
  CHECK(b.left[n - 2] == 0);
  CHECK(b.right[n - 1] == 1);
  CHECK(b.right[n - 2] == 1);
  CHECK(Node{3}.is_prefix_of(b.left));
  CHECK(Node{4}.is_prefix_of(b.right));
  CHECK(u.contains_box(b) == Containment::inside);
  CHECK(b.left == Node{3, 0, 0});
  CHECK(b.right == Node{4, 1, 1});
}

TEST_CASE("silver oracle: refine picks the least-index covering generator") {
  OpenDenseOracle u = make_silver_u_oracle();
  Lcg rng(29);
  for (std::size_t rep = 0; rep < 60; ++rep) {
    Node a = random_omega_node(rng, rng.next_below(3), 2);
    Node b = random_omega_node(rng, rng.next_below(3), 2);
    Box box = u.refine(a, b);
    auto covers = [&](const RationalPair& q) { return silver_covers(q, a, b); };
    auto expected = brute_min_cover(covers, 400000);
    REQUIRE(expected.has_value());
    std::size_t s = support(*expected);
    CHECK(box.left == expected->first.restrict_to(s).concat(Node{0, 0}));
    CHECK(box.right == expected->second.restrict_to(s).concat(Node{1, 1}));
  }
}

TEST_CASE("one-dimensional generators") {
  CHECK(up_miller_g_generator(0, RationalPoint({2})) == Node{2, 0, 0});
  CHECK(up_miller_g_generator(1, RationalPoint({1})) == Node{1, 0, 0});
  for (std::size_t n = 0; n < 5; ++n) {
    Node g = up_miller_g_generator(n, RationalPoint({3, 1}));
    CHECK(g.size() == 2 + 3 + n);
    for (std::size_t i = 2; i < g.size(); ++i) CHECK(g[i] == 0);
  }
  CHECK_THROWS_AS(up_miller_g_generator(1, RationalPoint{}), Error);
}

TEST_CASE("zero-hit membership reports") {
  auto r = laver_g_membership(Node{0, 1, 0}, 2);
  CHECK(r.satisfied);
  CHECK(r.indices == std::vector<std::size_t>{0, 2});
  CHECK(!laver_g_membership(Node{1, 2, 3}, 1).satisfied);
  auto r2 = laver_g_membership(Node{0, 0, 0, 0}, 4);
  CHECK(r2.satisfied);
  CHECK(r2.indices == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("refine_pair certifies both orientations") {
  for (OpenDenseOracle u : {make_miller_u_oracle(), make_silver_u_oracle()}) {
    auto [a, b] = refine_pair(u, Node{0}, Node{1});
    CHECK(a.size() == b.size());
    CHECK(Node{0}.is_prefix_of(a));
    CHECK(Node{1}.is_prefix_of(b));
    CHECK(psi_certified(u, a, b));
  }
}

TEST_CASE("refine_pair properties on random inputs") {
  OpenDenseOracle u = make_miller_u_oracle();
  Lcg rng(31);
  for (std::size_t rep = 0; rep < 100; ++rep) {
    Node v1 = random_omega_node(rng, rng.next_below(5), 3);
    Node v2 = random_omega_node(rng, rng.next_below(5), 3);
    auto [a, b] = refine_pair(u, v1, v2);
    CHECK(a.size() == b.size());
    CHECK(v1.is_prefix_of(a));
    CHECK(v2.is_prefix_of(b));
    CHECK(psi_certified(u, a, b));
  }
}

TEST_CASE("refine_family: singleton is unchanged") {
  OpenDenseOracle u = make_miller_u_oracle();
  auto out = refine_family(u, {Node{4, 2}});
  REQUIRE(out.size() == 1);
  CHECK(out[0] == Node{4, 2});
}

TEST_CASE("refine_family: all ordered boxes certified") {
  for (OpenDenseOracle u : {make_miller_u_oracle(), make_silver_u_oracle()}) {
    std::vector<Node> family{Node{0}, Node{1}, Node{2}};
    auto out = refine_family(u, family);
    REQUIRE(out.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(family[i].is_prefix_of(out[i]));
      CHECK(out[i].size() == out[0].size());
      for (std::size_t j = 0; j < 3; ++j)
        if (i != j)
          CHECK(u.contains_box(Box{out[i], out[j]}) == Containment::inside);
    }
  }
}

TEST_CASE("refine_family: pointwise extension up to six members") {
  OpenDenseOracle u = make_miller_u_oracle();
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<Node> family;
    for (std::size_t k = 0; k < n; ++k)
      family.push_back(Node{static_cast<Letter>(k)});
    auto out = refine_family(u, family);
    for (std::size_t k = 0; k < n; ++k)
      CHECK(family[k].is_prefix_of(out[k]));
  }
}

TEST_CASE("padding with zeros never invalidates a certificate") {
  Lcg rng(37);
  for (OpenDenseOracle u : {make_miller_u_oracle(), make_silver_u_oracle()}) {
    for (std::size_t rep = 0; rep < 50; ++rep) {
      Node a = random_omega_node(rng, rng.next_below(3), 2);
      Node b = random_omega_node(rng, rng.next_below(3), 2);
      Box box = u.refine(a, b);
      for (std::size_t extra = 1; extra <= 3; ++extra) {
        Box padded{box.left.pad_zeros(box.left.size() + extra),
                   box.right.pad_zeros(box.right.size() + rng.next_below(3))};
        CHECK(u.contains_box(padded) == Containment::inside);
      }
    }
  }
}

TEST_CASE("certified miller boxes with equal-length sides avoid the diagonal") {
  OpenDenseOracle u = make_miller_u_oracle();
  Lcg rng(41);
  for (std::size_t rep = 0; rep < 100; ++rep) {
    Node a = random_omega_node(rng, rng.next_below(4), 3);
    Node b = random_omega_node(rng, rng.next_below(4), 3);
    Box box = u.refine(a, b);
    REQUIRE(box.left.size() == box.right.size());
    CHECK(incomparable(box.left, box.right));
    CHECK(box.left != box.right);
  }
}

TEST_CASE("oracle breach is detected") {
  OpenDenseOracle broken = make_miller_u_oracle();
  broken.refine = [](const Node& a, const Node& b) {
    return Box{a.pad_zeros(a.size() + 1), b.pad_zeros(b.size() + 1)};
  };
  CHECK_THROWS_AS(refine_pair(broken, Node{0}, Node{0, 1}), Error);
}

TEST_CASE("equal inputs never obstruct a refinement") {
  // the covering pair's coordinates are forced apart by the completion, so
  // the diagonal case is ordinary
  for (OpenDenseOracle u : {make_miller_u_oracle(), make_silver_u_oracle()}) {
    for (const Node& v : {Node{}, Node{0}, Node{2, 2}, Node{0, 0, 0}}) {
      Box b = u.refine(v, v);
      CHECK(v.is_prefix_of(b.left));
      CHECK(v.is_prefix_of(b.right));
      CHECK(b.left != b.right);
      CHECK(u.contains_box(b) == Containment::inside);
    }
  }
}
