#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "treeplane/finite_tree.hpp"
#include "treeplane/node.hpp"

namespace treeplane {

enum class TreeKind {
  perfect,
  miller,
  laver,
  silver,
  uniformly_perfect,
  slalom,
  splits_and_rests,
  evenly_cut,
};

std::string to_string(TreeKind k);
TreeKind tree_kind_from_string(const std::string& s);

// Finite-depth evaluation conventions.
//
// A finite tree is judged as a complete record up to the frontier depth d:
// nodes of length < d have exactly the recorded successors, nodes of length
// d have unknown futures. Infinite branching is not finitely observable, so
// a node counts as omega-split-consistent when it has at least
// omega_split_threshold successors, the alphabet is omega, and the caller
// promised that the tree came from an infinitely branching source.
struct CheckOptions {
  std::size_t omega_split_threshold = 3;
  bool omega_branching_promised = false;
};

struct KindVerdict {
  bool consistent = true;
  std::size_t depth = 0;
  std::vector<Node> witnesses;  // falsifying nodes when !consistent
  std::string detail;
};

// Decides whether T is consistent with the given kind up to frontier_depth.
// Kinds whose definition has an existential clause (perfect, miller, laver,
// slalom) can only ever be refuted, never proven; ConsistentTo means no
// finite-depth violation exists. frontier_depth must not exceed the height.
KindVerdict check_kind(const FiniteTree& t, TreeKind kind,
                       std::size_t frontier_depth,
                       const CheckOptions& opts = {});

}  // namespace treeplane
