#pragma once

// Independent brute-force references for the rational-pair enumeration and
// the generator families: plain nested loops, no sharing with the library's
// search machinery.

#include <optional>
#include <vector>

#include "treeplane/node.hpp"
#include "treeplane/rationals.hpp"

namespace treeplane::testing {

// All entry vectors of length s with entries <= m and nonzero last entry, in
// lexicographic order.
inline std::vector<std::vector<Letter>> brute_sides(std::size_t s, Letter m) {
  std::vector<std::vector<Letter>> out;
  std::vector<Letter> cur(s, 0);
  while (true) {
    if (!cur.empty() && cur.back() != 0) out.push_back(cur);
    std::size_t i = s;
    while (i > 0 && cur[i - 1] == m) {
      cur[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

// All valid pairs with support exactly s and overall max entry exactly m, in
// lexicographic order of the concatenation.
inline std::vector<RationalPair> brute_block(std::size_t s, Letter m) {
  std::vector<RationalPair> out;
  auto has = [](const std::vector<Letter>& v, Letter x) {
    for (Letter e : v)
      if (e == x) return true;
    return false;
  };
  for (const auto& a : brute_sides(s, m))
    for (const auto& b : brute_sides(s, m)) {
      if (a == b) continue;
      if (!has(a, m) && !has(b, m)) continue;
      out.push_back(RationalPair{RationalPoint(a), RationalPoint(b)});
    }
  return out;
}

// Enumeration prefix by weight, support, lex; long enough to cover `count`.
inline std::vector<RationalPair> brute_enumeration(std::size_t count) {
  std::vector<RationalPair> out;
  for (std::size_t w = 2; out.size() < count; ++w)
    for (std::size_t s = 1; s < w && out.size() < count; ++s)
      for (RationalPair& p : brute_block(s, static_cast<Letter>(w - s))) {
        out.push_back(std::move(p));
        if (out.size() == count) break;
      }
  return out;
}

inline bool miller_covers(const RationalPair& q, const Node& x, const Node& y) {
  std::size_t len = support(q) + max_entry(q);
  Node l = q.first.restrict_to(len);
  Node r = q.second.restrict_to(len);
  return x.is_prefix_of(l) && y.is_prefix_of(r);
}

inline bool miller_covers_point_pair(const RationalPair& q, const Node& x,
                                     const Node& y) {
  std::size_t len = support(q) + max_entry(q);
  return q.first.restrict_to(len).is_prefix_of(x) &&
         q.second.restrict_to(len).is_prefix_of(y);
}

inline bool silver_covers(const RationalPair& q, const Node& x, const Node& y) {
  std::size_t s = support(q);
  Node l = q.first.restrict_to(s).concat(Node{0, 0});
  Node r = q.second.restrict_to(s).concat(Node{1, 1});
  return x.is_prefix_of(l) && y.is_prefix_of(r);
}

inline const std::vector<RationalPair>& cached_enumeration(std::size_t cap) {
  static std::vector<RationalPair> cache;
  if (cache.size() < cap) cache = brute_enumeration(cap);
  return cache;
}

// First pair in the enumeration accepted by `covers`, scanning `cap` indices.
template <typename Covers>
inline std::optional<RationalPair> brute_min_cover(const Covers& covers,
                                                   std::size_t cap) {
  const auto& all = cached_enumeration(cap);
  for (std::size_t i = 0; i < cap && i < all.size(); ++i)
    if (covers(all[i])) return all[i];
  return std::nullopt;
}

}  // namespace treeplane::testing
