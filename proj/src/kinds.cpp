#include "treeplane/kinds.hpp"

#include <algorithm>

#include "treeplane/error.hpp"

namespace treeplane {

std::string to_string(TreeKind k) {
  switch (k) {
    case TreeKind::perfect: return "perfect";
    case TreeKind::miller: return "miller";
    case TreeKind::laver: return "laver";
    case TreeKind::silver: return "silver";
    case TreeKind::uniformly_perfect: return "uniformly_perfect";
    case TreeKind::slalom: return "slalom";
    case TreeKind::splits_and_rests: return "splits_and_rests";
    case TreeKind::evenly_cut: return "evenly_cut";
  }
  return "?";
}

TreeKind tree_kind_from_string(const std::string& s) {
  for (TreeKind k :
       {TreeKind::perfect, TreeKind::miller, TreeKind::laver, TreeKind::silver,
        TreeKind::uniformly_perfect, TreeKind::slalom,
        TreeKind::splits_and_rests, TreeKind::evenly_cut})
    if (to_string(k) == s) return k;
  throw Error(Errc::schema_error, "unknown tree kind '" + s + "'");
}

namespace {

struct Scan {
  const FiniteTree& tree;
  TreeWalk walk;
  std::size_t d;  // frontier depth
  std::vector<std::vector<std::uint32_t>> levels;
  std::vector<bool> reaches_frontier;   // subtree touches depth d
  std::vector<bool> split_in_subtree;   // some interior node with >=2 children
  std::vector<bool> omega_in_subtree;   // some omega-split-consistent node
  const CheckOptions& opts;

  Scan(const FiniteTree& t, std::size_t frontier, const CheckOptions& o)
      : tree(t), walk(t), d(frontier), opts(o) {
    if (tree.empty()) return;
    levels.push_back({0});
    while (levels.size() <= d) {
      std::vector<std::uint32_t> next;
      for (auto id : levels.back())
        for (auto c : walk.children_ids(id)) next.push_back(c);
      if (next.empty()) break;
      levels.push_back(std::move(next));
    }
    std::size_t n = walk.size();
    reaches_frontier.assign(n, false);
    split_in_subtree.assign(n, false);
    omega_in_subtree.assign(n, false);
    for (std::size_t lv = levels.size(); lv-- > 0;) {
      for (auto id : levels[lv]) {
        bool reach = (lv == d);
        bool split = false;
        bool omega = false;
        if (lv < d) {
          std::size_t c = walk.child_count(id);
          split = c >= 2;
          omega = is_omega_split(c);
        }
        for (auto ch : walk.children_ids(id)) {
          reach = reach || reaches_frontier[ch];
          split = split || split_in_subtree[ch];
          omega = omega || omega_in_subtree[ch];
        }
        reaches_frontier[id] = reach;
        split_in_subtree[id] = split;
        omega_in_subtree[id] = omega;
      }
    }
  }

  bool is_omega_split(std::size_t child_count) const {
    return tree.alphabet() == Alphabet::omega &&
           opts.omega_branching_promised &&
           child_count >= opts.omega_split_threshold;
  }

  bool interior(std::uint32_t id) const { return walk.depth_of(id) < d; }
};

KindVerdict fail(std::size_t d, std::vector<Node> witnesses,
                 std::string detail) {
  KindVerdict v;
  v.consistent = false;
  v.depth = d;
  v.witnesses = std::move(witnesses);
  v.detail = std::move(detail);
  return v;
}

KindVerdict pass(std::size_t d) {
  KindVerdict v;
  v.consistent = true;
  v.depth = d;
  return v;
}

// Existential kinds are refuted only by exhaustion: an interior node whose
// subtree dies before the frontier and contains no witness of the required
// splitting. `want_omega` selects omega-splits over plain splits.
KindVerdict check_extension_kind(const Scan& s, bool want_omega) {
  for (const auto& level : s.levels) {
    for (auto id : level) {
      if (!s.interior(id)) continue;
      bool witness_below =
          want_omega ? s.omega_in_subtree[id] : s.split_in_subtree[id];
      if (!witness_below && !s.reaches_frontier[id])
        return fail(s.d, {s.walk.node_of(id)},
                    "subtree dies before the frontier with no " +
                        std::string(want_omega ? "omega-split" : "split"));
    }
  }
  return pass(s.d);
}

KindVerdict check_laver(const Scan& s) {
  if (s.tree.empty()) return pass(s.d);
  // Stem candidates are the nodes of the initial chain, up to and including
  // the first splitting node; every other node has an incomparable sibling.
  std::vector<std::uint32_t> candidates;
  std::uint32_t cur = 0;
  while (true) {
    candidates.push_back(cur);
    if (!s.interior(cur)) return pass(s.d);  // chain reaches the frontier
    auto kids = s.walk.children_ids(cur);
    if (kids.size() != 1) break;
    cur = kids.front();
  }
  // A candidate is viable when every interior node strictly above it is
  // omega-split-consistent.
  Node last_candidate;
  Node last_refuter;
  for (auto cand : candidates) {
    std::vector<std::uint32_t> stack(s.walk.children_ids(cand).begin(),
                                     s.walk.children_ids(cand).end());
    bool viable = true;
    while (!stack.empty()) {
      auto id = stack.back();
      stack.pop_back();
      if (!s.interior(id)) continue;
      if (!s.is_omega_split(s.walk.child_count(id))) {
        viable = false;
        last_refuter = s.walk.node_of(id);
        break;
      }
      for (auto c : s.walk.children_ids(id)) stack.push_back(c);
    }
    if (viable) return pass(s.d);
    last_candidate = s.walk.node_of(cand);
  }
  return fail(s.d, {last_candidate, last_refuter},
              "no stem candidate has only omega-splitting nodes above it");
}

KindVerdict check_silver(const Scan& s) {
  for (std::size_t lv = 0; lv < s.levels.size() && lv < s.d; ++lv) {
    const auto& level = s.levels[lv];
    if (level.size() < 2) continue;
    auto first_letters = s.walk.child_letters(level.front());
    for (std::size_t i = 1; i < level.size(); ++i) {
      if (s.walk.child_letters(level[i]) != first_letters)
        return fail(s.d,
                    {s.walk.node_of(level.front()), s.walk.node_of(level[i])},
                    "successor sets differ at level " + std::to_string(lv));
    }
  }
  return pass(s.d);
}

KindVerdict check_uniformly_perfect(const Scan& s) {
  for (std::size_t lv = 0; lv < s.levels.size() && lv < s.d; ++lv) {
    const auto& level = s.levels[lv];
    bool any_split = false;
    for (auto id : level) any_split = any_split || s.walk.child_count(id) >= 2;
    if (!any_split) continue;
    for (auto id : level)
      if (s.walk.child_count(id) < 2)
        return fail(s.d, {s.walk.node_of(id)},
                    "level " + std::to_string(lv) +
                        " mixes splitting and non-splitting nodes");
  }
  return check_extension_kind(s, /*want_omega=*/false);
}

KindVerdict check_splits_and_rests(const Scan& s) {
  for (std::size_t lv = 0; lv + 1 < s.levels.size() && lv + 1 < s.d; ++lv) {
    for (auto id : s.levels[lv]) {
      if (s.walk.child_count(id) < 2) continue;
      for (auto c : s.walk.children_ids(id)) {
        if (s.walk.depth_of(c) < s.d && s.walk.child_count(c) >= 2)
          return fail(s.d, {s.walk.node_of(id), s.walk.node_of(c)},
                      "consecutive splitting nodes");
      }
    }
  }
  return pass(s.d);
}

KindVerdict check_evenly_cut(const FiniteTree& t, std::size_t d) {
  std::size_t h = t.height();
  for (const Node& tip : t.tips())
    if (tip.size() != h)
      return fail(d, {tip},
                  "maximal node below the top level " + std::to_string(h));
  return pass(d);
}

}  // namespace

KindVerdict check_kind(const FiniteTree& t, TreeKind kind,
                       std::size_t frontier_depth, const CheckOptions& opts) {
  if (frontier_depth > t.height())
    throw Error(Errc::schema_error,
                "frontier depth exceeds the height of the tree");
  if (kind == TreeKind::evenly_cut) return check_evenly_cut(t, frontier_depth);
  if (t.empty()) return pass(frontier_depth);
  Scan s(t, frontier_depth, opts);
  switch (kind) {
    case TreeKind::perfect:
      return check_extension_kind(s, false);
    case TreeKind::miller:
      return check_extension_kind(s, true);
    case TreeKind::laver:
      return check_laver(s);
    case TreeKind::silver:
      return check_silver(s);
    case TreeKind::uniformly_perfect:
      return check_uniformly_perfect(s);
    case TreeKind::slalom:
      // The defining clause asks for an interval of levels copying each word;
      // a fresh interval can always sit beyond the frontier, so no finite
      // record refutes it.
      return pass(frontier_depth);
    case TreeKind::splits_and_rests:
      return check_splits_and_rests(s);
    case TreeKind::evenly_cut:
      break;
  }
  return pass(frontier_depth);
}

}  // namespace treeplane
