#pragma once

// Deterministic data generators for tests: exhaustive enumeration of binary
// trees by depth, a splittable linear-congruential stream, and small helpers.

#include <cstdint>
#include <vector>

#include "treeplane/clopen.hpp"
#include "treeplane/finite_tree.hpp"
#include "treeplane/node.hpp"

namespace treeplane::testing {

class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : state_(seed * 2862933555777941757ull + 3037000493ull) {}
  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ull + 1442695040888963407ull;
    return state_ >> 17;
  }
  std::uint64_t next_below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

// All nonempty prefix-closed subsets of the binary tree of the given depth,
// as sorted node lists.
inline std::vector<std::vector<Node>> all_binary_trees(std::size_t depth) {
  if (depth == 0) return {{Node{}}};
  std::vector<std::vector<Node>> below = all_binary_trees(depth - 1);
  std::vector<std::vector<Node>> out;
  auto graft = [](const std::vector<Node>& sub, Letter first) {
    std::vector<Node> out;
    for (const Node& n : sub) {
      std::vector<Letter> v{first};
      v.insert(v.end(), n.letters().begin(), n.letters().end());
      out.emplace_back(std::move(v));
    }
    return out;
  };
  for (std::size_t l = 0; l <= below.size(); ++l) {
    for (std::size_t r = 0; r <= below.size(); ++r) {
      std::vector<Node> t{Node{}};
      if (l > 0) {
        auto g = graft(below[l - 1], 0);
        t.insert(t.end(), g.begin(), g.end());
      }
      if (r > 0) {
        auto g = graft(below[r - 1], 1);
        t.insert(t.end(), g.begin(), g.end());
      }
      out.push_back(std::move(t));
    }
  }
  return out;
}

inline FiniteTree tree_of(const std::vector<Node>& nodes,
                          Alphabet a = Alphabet::binary) {
  return FiniteTree::from_nodes(a, nodes);
}

inline Node random_binary_node(Lcg& rng, std::size_t len) {
  std::vector<Letter> v(len);
  for (auto& x : v) x = static_cast<Letter>(rng.next_below(2));
  return Node(std::move(v));
}

inline Node random_omega_node(Lcg& rng, std::size_t len, Letter max_letter) {
  std::vector<Letter> v(len);
  for (auto& x : v) x = static_cast<Letter>(rng.next_below(max_letter + 1));
  return Node(std::move(v));
}

// Union of random cylinders at the given depth until the measure bound is
// reached.
inline ClopenSet random_clopen_at_least(Lcg& rng, std::size_t depth,
                                        const DyadicRational& min_measure) {
  ClopenSet s = ClopenSet::empty_set();
  while (!(s.measure() >= min_measure))
    s = s.unite(ClopenSet::cylinder(random_binary_node(rng, depth)));
  return s;
}

inline ClopenPlane random_clopen_plane(Lcg& rng, std::size_t depth,
                                       std::size_t boxes) {
  std::vector<std::pair<Node, Node>> bs;
  for (std::size_t i = 0; i < boxes; ++i)
    bs.emplace_back(random_binary_node(rng, depth),
                    random_binary_node(rng, depth));
  return ClopenPlane::from_boxes(bs);
}

}  // namespace treeplane::testing
