#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "treeplane/finite_tree.hpp"
#include "treeplane/kinds.hpp"
#include "treeplane/node.hpp"

namespace treeplane {

// A deterministic generator for a possibly infinite tree. children(n, fuel)
// returns the first `fuel` successor letters of n in increasing order (all of
// them when there are fewer). Suppliers must be pure: equal queries yield
// equal answers, and a letter may be reported only below reachable nodes.
struct TreeOracle {
  Alphabet alphabet = Alphabet::omega;
  std::function<std::vector<Letter>(const Node&, std::size_t)> children;
  std::optional<TreeKind> advertised_kind;
};

// Letter membership is decidable despite infinite branching: with letters
// reported in increasing order, a sits among the first a+1 if at all.
bool has_letter(const TreeOracle& o, const Node& n, Letter a);

bool reachable(const TreeOracle& o, const Node& n);

// succ(n) truncated to the first `fuel` letters. Verifies reachability of n
// first and throws node_not_in_tree otherwise.
std::vector<Letter> successors(const TreeOracle& o, const Node& n,
                               std::size_t fuel);

// Shortest splitting node; follows unique successors for at most `fuel`
// levels.
Node stem(const TreeOracle& o, std::size_t fuel);

// Depth- and width-truncated finite record of the oracle's tree.
FiniteTree approximate(const TreeOracle& o, std::size_t depth,
                       std::size_t fuel);

// Built-in families -------------------------------------------------------

TreeOracle full_tree(Alphabet a);

// A single chain prescribed by `stem_letters`, fully branching above it.
TreeOracle chain_then_full(const Node& stem_letters, Alphabet a);

// Fully branching at the given levels, letter 0 elsewhere. With `period`, the
// level set is extended periodically beyond the listed ones.
TreeOracle level_split_tree(std::vector<std::size_t> levels,
                            std::optional<std::size_t> period, Alphabet a);

// Deterministic pseudo-random family with |succ| in {1, omega}; every chain
// of non-splitting nodes is capped, so splitting nodes stay dense.
TreeOracle seeded_miller_oracle(std::uint64_t seed);

// Deterministic pseudo-random binary family whose successor sets depend only
// on the level.
TreeOracle seeded_silver_oracle(std::uint64_t seed);

TreeOracle oracle_from_tree(FiniteTree t);

// Thins a level-determined (Silver-style) tree so that retained splitting
// levels are at least two apart; at a skipped splitting level every branch
// follows the least successor letter. Validates the level-determinacy of the
// input while reading and throws not_silver on a violation.
FiniteTree silver_splits_and_rests(const TreeOracle& o, std::size_t depth,
                                   std::size_t fuel = 8);

}  // namespace treeplane
