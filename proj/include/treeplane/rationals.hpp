#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "treeplane/node.hpp"

namespace treeplane {

// A finite-support sequence of naturals (all but finitely many entries are
// zero), stored trimmed: the last stored entry is nonzero.
class RationalPoint {
 public:
  RationalPoint() = default;  // the identically-zero point
  explicit RationalPoint(std::vector<Letter> entries);
  static RationalPoint from_prefix(const Node& n);

  bool is_zero() const { return entries_.empty(); }

  // Largest nonzero index plus one. Undefined (rejected) for the zero point.
  std::size_t support() const;

  Letter operator()(std::size_t i) const {
    return i < entries_.size() ? entries_[i] : 0;
  }
  const std::vector<Letter>& entries() const { return entries_; }
  Letter max_entry() const;

  // q restricted to the first len positions, zero tail included.
  Node restrict_to(std::size_t len) const;

  // Whether prefix is an initial segment of this point (as a function).
  bool extends(const Node& prefix) const;

  bool operator==(const RationalPoint& o) const { return entries_ == o.entries_; }
  bool operator!=(const RationalPoint& o) const { return entries_ != o.entries_; }

 private:
  std::vector<Letter> entries_;
};

// A pair of distinct rational points sharing the same support.
struct RationalPair {
  RationalPoint first;
  RationalPoint second;

  static RationalPair checked(RationalPoint a, RationalPoint b);

  bool operator==(const RationalPair& o) const {
    return first == o.first && second == o.second;
  }
};

std::size_t support(const RationalPair& q);
Letter max_entry(const RationalPoint& a, const RationalPoint& b);
Letter max_entry(const RationalPair& q);

// The fixed enumeration of all valid pairs. Pairs are grouped into finite
// blocks keyed by (support, exact max entry); blocks are ordered by
// support+max first, then by support, and each block is listed in
// lexicographic order of the concatenated entry vectors. This makes the
// enumeration a bijection with a computable covering bound.
RationalPair rational_pair_at(std::size_t index);

// Every pair with support <= s and entries <= m occurs among the first
// enumeration_bound(s, m) indices.
std::size_t enumeration_bound(std::size_t s, Letter m);

// Number of pairs in the (s, m) block.
std::size_t block_size(std::size_t s, Letter m);

// Minimal-index covering search. A family lists the supports s at which a
// generator can cover the query, together with the entries of q1/q2 that the
// query forces at that support and the least admissible exact max entry
// (used when the generator frame length depends on it).
struct SupportCandidate {
  std::size_t support;
  std::vector<Letter> p1;
  std::vector<Letter> p2;
  Letter min_max_entry = 1;
};

// Returns the pair minimal in the (support+max, support, lex) enumeration
// order among valid pairs extending one of the candidates. Visits candidate
// blocks in exact enumeration order, so the result is the least-index cover.
std::optional<RationalPair> find_min_cover(
    std::vector<SupportCandidate> candidates, Letter min_entry,
    std::size_t tries = 64);

}  // namespace treeplane
