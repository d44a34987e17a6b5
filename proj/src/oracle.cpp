#include "treeplane/oracle.hpp"

#include <algorithm>
#include <deque>
#include <memory>

#include "treeplane/error.hpp"

namespace treeplane {

namespace {

std::uint64_t fnv_mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ull;
  h *= 0x100000001b3ull;
  h ^= h >> 29;
  return h;
}

std::uint64_t node_hash(std::uint64_t seed, const Node& n) {
  std::uint64_t h = fnv_mix(0xcbf29ce484222325ull, seed);
  for (Letter a : n.letters()) h = fnv_mix(h, a + 1);
  return h;
}

std::vector<Letter> first_letters(std::size_t fuel) {
  std::vector<Letter> out(fuel);
  for (std::size_t i = 0; i < fuel; ++i) out[i] = static_cast<Letter>(i);
  return out;
}

}  // namespace

bool has_letter(const TreeOracle& o, const Node& n, Letter a) {
  auto kids = o.children(n, static_cast<std::size_t>(a) + 1);
  return std::find(kids.begin(), kids.end(), a) != kids.end();
}

bool reachable(const TreeOracle& o, const Node& n) {
  Node cur;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (!has_letter(o, cur, n[i])) return false;
    cur = cur.child(n[i]);
  }
  return true;
}

std::vector<Letter> successors(const TreeOracle& o, const Node& n,
                               std::size_t fuel) {
  if (!reachable(o, n))
    throw Error(Errc::node_not_in_tree, n.to_string());
  return o.children(n, fuel);
}

Node stem(const TreeOracle& o, std::size_t fuel) {
  Node cur;
  for (std::size_t step = 0; step <= fuel; ++step) {
    auto kids = o.children(cur, 2);
    if (kids.size() >= 2) return cur;
    if (kids.empty())
      throw Error(Errc::no_split_within_fuel,
                  "oracle tree dies at " + cur.to_string());
    if (step == fuel) break;
    cur = cur.child(kids.front());
  }
  throw Error(Errc::no_split_within_fuel,
              "chain continues past fuel " + std::to_string(fuel));
}

FiniteTree approximate(const TreeOracle& o, std::size_t depth,
                       std::size_t fuel) {
  FiniteTree t(o.alphabet);
  t.insert_branch(Node{});
  std::deque<Node> queue{Node{}};
  while (!queue.empty()) {
    Node cur = queue.front();
    queue.pop_front();
    if (cur.size() >= depth) continue;
    for (Letter a : o.children(cur, fuel)) {
      Node child = cur.child(a);
      t.insert_branch(child);
      queue.push_back(child);
    }
  }
  return t;
}

TreeOracle full_tree(Alphabet a) {
  TreeOracle o;
  o.alphabet = a;
  o.children = [a](const Node&, std::size_t fuel) {
    if (a == Alphabet::binary) return first_letters(std::min<std::size_t>(fuel, 2));
    return first_letters(fuel);
  };
  o.advertised_kind =
      a == Alphabet::omega ? std::optional<TreeKind>(TreeKind::miller)
                           : std::optional<TreeKind>(TreeKind::silver);
  return o;
}

TreeOracle chain_then_full(const Node& stem_letters, Alphabet a) {
  TreeOracle o;
  o.alphabet = a;
  Node stem = stem_letters;
  o.children = [stem, a](const Node& n, std::size_t fuel) -> std::vector<Letter> {
    if (n.size() < stem.size()) {
      if (!n.is_prefix_of(stem)) return {};
      return fuel == 0 ? std::vector<Letter>{}
                       : std::vector<Letter>{stem[n.size()]};
    }
    if (!stem.is_prefix_of(n)) return {};
    if (a == Alphabet::binary) return first_letters(std::min<std::size_t>(fuel, 2));
    return first_letters(fuel);
  };
  o.advertised_kind = a == Alphabet::omega
                          ? std::optional<TreeKind>(TreeKind::laver)
                          : std::nullopt;
  return o;
}

TreeOracle level_split_tree(std::vector<std::size_t> levels,
                            std::optional<std::size_t> period, Alphabet a) {
  TreeOracle o;
  o.alphabet = a;
  o.children = [levels, period, a](const Node& n,
                                   std::size_t fuel) -> std::vector<Letter> {
    std::size_t lv = n.size();
    bool split = std::find(levels.begin(), levels.end(), lv) != levels.end();
    if (!split && period && !levels.empty()) {
      std::size_t base = *std::max_element(levels.begin(), levels.end());
      if (lv > base && (lv - base) % *period == 0) split = true;
    }
    if (!split) return fuel == 0 ? std::vector<Letter>{} : std::vector<Letter>{0};
    if (a == Alphabet::binary) return first_letters(std::min<std::size_t>(fuel, 2));
    return first_letters(fuel);
  };
  o.advertised_kind = TreeKind::uniformly_perfect;
  return o;
}

TreeOracle seeded_miller_oracle(std::uint64_t seed) {
  TreeOracle o;
  o.alphabet = Alphabet::omega;
  auto splits_at = [seed](const Node& n) {
    // force a split after three chain steps so splitting nodes stay dense
    std::size_t since = 0;
    for (std::size_t len = n.size(); len-- > 0;) {
      Node pre = n.prefix(len);
      if (node_hash(seed, pre) & 1) break;
      ++since;
      if (since >= 3) break;
    }
    return since >= 3 || (node_hash(seed, n) & 1);
  };
  o.children = [seed, splits_at](const Node& n,
                                 std::size_t fuel) -> std::vector<Letter> {
    if (splits_at(n)) return first_letters(fuel);
    if (fuel == 0) return {};
    return {static_cast<Letter>(node_hash(seed, n) % 5)};
  };
  o.advertised_kind = TreeKind::miller;
  return o;
}

TreeOracle seeded_silver_oracle(std::uint64_t seed) {
  TreeOracle o;
  o.alphabet = Alphabet::binary;
  auto level_splits = [seed](std::size_t lv) {
    if (fnv_mix(node_hash(seed, Node{}), lv) % 3 == 0) return true;
    // cap chains of non-splitting levels at four
    for (std::size_t back = 1; back <= 4; ++back) {
      if (lv < back) return false;
      if (fnv_mix(node_hash(seed, Node{}), lv - back) % 3 == 0) return false;
    }
    return true;
  };
  o.children = [seed, level_splits](const Node& n,
                                    std::size_t fuel) -> std::vector<Letter> {
    std::size_t lv = n.size();
    if (level_splits(lv))
      return first_letters(std::min<std::size_t>(fuel, 2));
    if (fuel == 0) return {};
    return {static_cast<Letter>(fnv_mix(node_hash(seed, Node{}), lv * 2 + 1) % 2)};
  };
  o.advertised_kind = TreeKind::silver;
  return o;
}

TreeOracle oracle_from_tree(FiniteTree t) {
  TreeOracle o;
  o.alphabet = t.alphabet();
  auto shared = std::make_shared<FiniteTree>(std::move(t));
  o.children = [shared](const Node& n, std::size_t fuel) -> std::vector<Letter> {
    if (!shared->contains(n)) return {};
    auto all = shared->successor_letters(n);
    if (all.size() > fuel) all.resize(fuel);
    return all;
  };
  return o;
}

FiniteTree silver_splits_and_rests(const TreeOracle& o, std::size_t depth,
                                   std::size_t fuel) {
  // Read per-level successor sets, verifying that they depend on the level
  // only.
  std::vector<std::vector<Letter>> level_letters;
  {
    std::vector<Node> level{Node{}};
    for (std::size_t lv = 0; lv < depth && !level.empty(); ++lv) {
      std::vector<Letter> letters = o.children(level.front(), fuel);
      for (std::size_t i = 1; i < level.size(); ++i) {
        if (o.children(level[i], fuel) != letters)
          throw Error(Errc::not_silver,
                      "successor sets differ between " +
                          level.front().to_string() + " and " +
                          level[i].to_string());
      }
      level_letters.push_back(letters);
      std::vector<Node> next;
      for (const Node& n : level)
        for (Letter a : letters) next.push_back(n.child(a));
      level = std::move(next);
    }
  }

  // Splitting levels retained with gaps of at least two; skipped splitting
  // levels collapse onto the least letter.
  std::vector<bool> retained(level_letters.size(), false);
  std::ptrdiff_t last = -2;
  for (std::size_t lv = 0; lv < level_letters.size(); ++lv) {
    if (level_letters[lv].size() < 2) continue;
    if (static_cast<std::ptrdiff_t>(lv) > last + 1) {
      retained[lv] = true;
      last = static_cast<std::ptrdiff_t>(lv);
    }
  }

  FiniteTree out(o.alphabet);
  out.insert_branch(Node{});
  std::vector<Node> level{Node{}};
  for (std::size_t lv = 0; lv < level_letters.size(); ++lv) {
    const auto& letters = level_letters[lv];
    if (letters.empty()) break;
    std::vector<Letter> keep;
    if (letters.size() >= 2 && retained[lv])
      keep = letters;
    else
      keep = {letters.front()};
    std::vector<Node> next;
    for (const Node& n : level)
      for (Letter a : keep) {
        Node c = n.child(a);
        out.insert_branch(c);
        next.push_back(c);
      }
    level = std::move(next);
  }
  return out;
}

}  // namespace treeplane
