#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "treeplane/node.hpp"

namespace treeplane {

// A prefix-closed finite set of nodes, stored as a trie. Inserting a node
// inserts all of its prefixes, so the structure is prefix-closed by
// construction; loaders that must *validate* closure of an explicit node list
// use from_nodes().
//
// The empty tree is allowed; any nonempty tree contains the empty node.
class FiniteTree {
 public:
  explicit FiniteTree(Alphabet a = Alphabet::binary) : alphabet_(a) {}

  static FiniteTree from_nodes(Alphabet a, const std::vector<Node>& nodes);

  Alphabet alphabet() const { return alphabet_; }
  bool empty() const { return entries_.empty(); }
  std::size_t node_count() const { return entries_.size(); }

  bool contains(const Node& n) const;
  void insert_branch(const Node& n);

  // Successor letters of a member node, in increasing order.
  std::vector<Letter> successor_letters(const Node& n) const;
  std::size_t successor_count(const Node& n) const;

  std::vector<Node> all_nodes() const;       // length-lex order
  std::vector<Node> nodes_at(std::size_t len) const;
  std::vector<Node> tips() const;            // maximal nodes, length-lex
  std::size_t height() const;                // max node length (0 for {root})

  bool is_subtree_of(const FiniteTree& other) const;

  bool operator==(const FiniteTree& o) const;

  // Visits nodes in length-lex (BFS) order.
  void for_each_node(const std::function<void(const Node&)>& f) const;

 private:
  struct Entry {
    Letter letter = 0;
    std::uint32_t parent = 0;
    std::uint32_t depth = 0;
    std::vector<std::uint32_t> children;  // sorted by letter
  };

  static constexpr std::uint32_t npos = 0xffffffffu;

  std::uint32_t find(const Node& n) const;
  Node materialize(std::uint32_t id) const;

  Alphabet alphabet_;
  // entries_[0] is the root when nonempty.
  std::vector<Entry> entries_;

  friend struct TreeWalk;
};

// Read-only cursor used by algorithms that walk a tree level by level.
struct TreeWalk {
  const FiniteTree& tree;

  explicit TreeWalk(const FiniteTree& t) : tree(t) {}
  std::vector<std::uint32_t> level_ids(std::size_t depth) const;
  const std::vector<std::uint32_t>& children_ids(std::uint32_t id) const {
    return tree.entries_[id].children;
  }
  std::vector<Letter> child_letters(std::uint32_t id) const;
  std::uint32_t child(std::uint32_t id, Letter a) const;
  std::size_t child_count(std::uint32_t id) const {
    return tree.entries_[id].children.size();
  }
  std::size_t depth_of(std::uint32_t id) const { return tree.entries_[id].depth; }
  bool is_tip(std::uint32_t id) const { return tree.entries_[id].children.empty(); }
  Node node_of(std::uint32_t id) const { return tree.materialize(id); }
  std::size_t size() const { return tree.entries_.size(); }
};

// succ_T(s): the set of successor letters of s in T.
// Throws node_not_in_tree when s is not a member.
std::vector<Letter> successors(const FiniteTree& t, const Node& s);

// split(T): members with at least two successors.
std::vector<Node> split_nodes(const FiniteTree& t);

// Succ_T(s): minimal splitting nodes weakly above s (an antichain).
std::vector<Node> immediate_splitting_successors(const FiniteTree& t,
                                                 const Node& s);

// The shortest splitting node; below it the tree is a chain. Walks at most
// `fuel` levels before giving up with no_split_within_fuel.
Node stem(const FiniteTree& t, std::size_t fuel);

std::vector<Node> tips(const FiniteTree& t);
std::size_t height(const FiniteTree& t);

// rank_T(s) = sup{rank_T(u)+1 : u in T, s proper prefix of u}; leaves rank 0.
std::size_t node_rank(const FiniteTree& t, const Node& s);

}  // namespace treeplane
