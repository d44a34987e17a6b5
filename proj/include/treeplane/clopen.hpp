#pragma once

#include <memory>
#include <vector>

#include "treeplane/dyadic.hpp"
#include "treeplane/node.hpp"

namespace treeplane {

namespace detail {

// Binary decision trie over 2^omega. Leaves are full or empty; interior
// nodes split on the next coordinate. Canonical form: no interior node has
// two leaf children of equal polarity.
struct BitTrie;
using TriePtr = std::shared_ptr<const BitTrie>;

struct BitTrie {
  bool leaf;
  bool full;         // meaningful for leaves
  TriePtr zero, one; // meaningful for interior nodes
};

TriePtr trie_leaf(bool full);
TriePtr trie_split(TriePtr a, TriePtr b);
TriePtr trie_cylinder(const Node& s, std::size_t from = 0);
TriePtr trie_complement(const TriePtr& t);
TriePtr trie_intersect(const TriePtr& a, const TriePtr& b);
TriePtr trie_unite(const TriePtr& a, const TriePtr& b);
TriePtr trie_translate(const TriePtr& t, const Node& word, std::size_t from = 0);
DyadicRational trie_measure(const TriePtr& t);
bool trie_equal(const TriePtr& a, const TriePtr& b);
std::size_t trie_depth(const TriePtr& t);
TriePtr trie_descend(const TriePtr& t, const Node& path);

}  // namespace detail

// A clopen subset of 2^omega, i.e. a finite union of cylinders, with exact
// measure arithmetic.
class ClopenSet {
 public:
  ClopenSet() : trie_(detail::trie_leaf(false)) {}

  static ClopenSet empty_set() { return ClopenSet(); }
  static ClopenSet full_space() { return ClopenSet(detail::trie_leaf(true)); }
  static ClopenSet cylinder(const Node& s);
  // Generator lists must be antichains of binary nodes when validate is set;
  // the stored form is always the canonical minimal antichain.
  static ClopenSet from_generators(const std::vector<Node>& gens,
                                   bool validate_antichain = true);

  ClopenSet complement() const;
  ClopenSet intersect(const ClopenSet& o) const;
  ClopenSet unite(const ClopenSet& o) const;
  // Coordinatewise addition mod 2 by the zero-padded word t.
  ClopenSet translate(const Node& t) const;

  DyadicRational measure() const;
  DyadicRational measure_within(const Node& s) const;  // λ(this ∩ [s])
  bool is_empty() const;
  bool contains_cylinder(const Node& s) const;
  std::size_t depth() const;

  std::vector<Node> generators() const;  // canonical antichain, length-lex

  bool operator==(const ClopenSet& o) const;

 private:
  explicit ClopenSet(detail::TriePtr t) : trie_(std::move(t)) {}
  detail::TriePtr trie_;

  friend class ClopenPlane;
};

struct Box;  // defined in dense_open.hpp

// A clopen subset of the plane 2^omega x 2^omega, stored as a trie over the
// coordinate interleaving x(0) y(0) x(1) y(1) ...
class ClopenPlane {
 public:
  ClopenPlane() : trie_(detail::trie_leaf(false)) {}

  static ClopenPlane empty_set() { return ClopenPlane(); }
  static ClopenPlane full_space() {
    return ClopenPlane(detail::trie_leaf(true));
  }
  static ClopenPlane box(const Node& left, const Node& right);
  static ClopenPlane from_boxes(
      const std::vector<std::pair<Node, Node>>& boxes);

  ClopenPlane complement() const;
  ClopenPlane intersect(const ClopenPlane& o) const;
  ClopenPlane unite(const ClopenPlane& o) const;
  ClopenPlane translate(const Node& t_left, const Node& t_right) const;
  // {(x,y) : (y,x) in this}
  ClopenPlane swap_coordinates() const;

  DyadicRational measure() const;
  bool is_empty() const;
  std::size_t depth() const;  // interleaved depth

  // Disjoint box decomposition (left/right sides may differ in length by 1).
  std::vector<std::pair<Node, Node>> boxes() const;

  bool operator==(const ClopenPlane& o) const;

 private:
  explicit ClopenPlane(detail::TriePtr t) : trie_(std::move(t)) {}
  detail::TriePtr trie_;

  friend ClopenPlane diagonal_band(std::size_t depth);
};

// A^s = A ∩ A^{-1}.
ClopenPlane symmetrize(const ClopenPlane& a);

// The set {(x,y) : x↾depth = y↾depth}.
ClopenPlane diagonal_band(std::size_t depth);

}  // namespace treeplane
