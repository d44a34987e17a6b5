#include "treeplane/genericity.hpp"

#include <algorithm>
#include <memory>

#include "treeplane/error.hpp"
#include "treeplane/kinds.hpp"

namespace treeplane {

Condition::Condition(FiniteTree tree) : tree_(std::move(tree)) {
  if (tree_.empty())
    throw Error(Errc::not_evenly_cut, "empty tree is not a condition");
  auto verdict = check_kind(tree_, TreeKind::evenly_cut, tree_.height());
  if (!verdict.consistent)
    throw Error(Errc::not_evenly_cut,
                "maximal node below the top level: " +
                    (verdict.witnesses.empty()
                         ? std::string("?")
                         : verdict.witnesses.front().to_string()));
}

Condition Condition::root_only() {
  FiniteTree t(Alphabet::omega);
  t.insert_branch(Node{});
  return Condition(std::move(t));
}

bool stronger_than(const Condition& p, const Condition& q) {
  if (!q.tree().is_subtree_of(p.tree())) return false;
  std::vector<Node> q_tips = q.tree().tips();
  std::vector<Node> p_slice = p.tree().nodes_at(q.height());
  std::sort(q_tips.begin(), q_tips.end(), LengthLexLess{});
  std::sort(p_slice.begin(), p_slice.end(), LengthLexLess{});
  return q_tips == p_slice;
}

namespace {

Condition recut(const FiniteTree& grown) {
  // pad every maximal node with zeros up to the top level
  std::size_t h = grown.height();
  FiniteTree out(Alphabet::omega);
  out.insert_branch(Node{});
  grown.for_each_node([&](const Node& n) { out.insert_branch(n); });
  for (const Node& tip : grown.tips())
    out.insert_branch(tip.pad_zeros(h));
  return Condition(std::move(out));
}

}  // namespace

Condition dense_perfect(const Condition& p, const Node& t) {
  if (!p.tree().contains(t))
    throw Error(Errc::node_not_in_tree, t.to_string());
  std::vector<Node> tips = p.tip_nodes();
  std::sort(tips.begin(), tips.end(), LengthLexLess{});
  const Node* host = nullptr;
  for (const Node& tip : tips)
    if (t.is_prefix_of(tip)) {
      host = &tip;
      break;
    }
  if (host == nullptr)
    throw Error(Errc::node_not_in_tree,
                "no tip extends " + t.to_string());
  FiniteTree grown = p.tree();
  grown.insert_branch(host->child(0));
  grown.insert_branch(host->child(1));
  return recut(grown);
}

Condition dense_slalom(const Condition& p, const Node& s) {
  FiniteTree grown = p.tree();
  for (const Node& tip : p.tip_nodes()) grown.insert_branch(tip.concat(s));
  return recut(grown);
}

Condition dense_box_separation(const Condition& p, std::size_t n,
                               const OpenDenseOracle& u) {
  std::vector<Node> tips = p.tip_nodes();
  std::sort(tips.begin(), tips.end(), LengthLexLess{});
  std::vector<Node> refined = refine_family(u, tips);
  std::size_t len = n;
  for (const Node& r : refined) len = std::max(len, r.size());
  FiniteTree grown = p.tree();
  for (Node& r : refined) grown.insert_branch(r.pad_zeros(len));
  Condition out = recut(grown);
  // padding preserved the certificates; replay them on the final tips
  for (const Node& a : out.tip_nodes())
    for (const Node& b : out.tip_nodes())
      if (!(a == b) && u.contains_box(Box{a, b}) != Containment::inside)
        throw Error(Errc::oracle_breach,
                    "tip pair lost its certificate after the recut");
  return out;
}

std::pair<FiniteTree, ChainLog> meet_dense(
    const Condition& start, const std::vector<DenseSetRefiner>& schedule) {
  ChainLog log;
  log.start = start.tree();
  Condition cur = start;
  for (const DenseSetRefiner& r : schedule) {
    Condition next = r.refine(cur);
    if (!stronger_than(next, cur))
      throw Error(Errc::refiner_breach,
                  "refiner '" + r.label + "' is not a strengthening");
    log.steps.push_back(ChainStep{r.label, next.tree()});
    cur = std::move(next);
  }
  return {cur.tree(), std::move(log)};
}

DenseSetRefiner perfect_refiner(const Node& t) {
  return DenseSetRefiner{"perfect@" + t.to_string(),
                         [t](const Condition& p) { return dense_perfect(p, t); }};
}

DenseSetRefiner perfect_everywhere_refiner() {
  return DenseSetRefiner{
      "perfect@tips", [](const Condition& p) {
        Condition cur = p;
        for (const Node& tip : p.tip_nodes()) {
          if (!cur.tree().contains(tip)) continue;
          cur = dense_perfect(cur, tip);
        }
        return cur;
      }};
}

DenseSetRefiner slalom_refiner(const Node& word) {
  return DenseSetRefiner{"slalom@" + word.to_string(),
                         [word](const Condition& p) {
                           return dense_slalom(p, word);
                         }};
}

DenseSetRefiner box_separation_refiner(std::size_t n, OpenDenseOracle u) {
  auto shared = std::make_shared<OpenDenseOracle>(std::move(u));
  return DenseSetRefiner{
      "box_separation@" + std::to_string(n) + "," + shared->name,
      [n, shared](const Condition& p) {
        return dense_box_separation(p, n, *shared);
      }};
}

bool has_slalom_imprint(const FiniteTree& t, const Node& word) {
  if (word.empty()) return true;
  std::size_t h = t.height();
  if (word.size() > h) return false;
  std::vector<Node> tips = t.tips();
  for (std::size_t start = 0; start + word.size() <= h; ++start) {
    bool all = true;
    for (const Node& tip : tips) {
      if (tip.size() < start + word.size()) continue;
      for (std::size_t i = 0; i < word.size() && all; ++i)
        all = tip[start + i] == word[i];
      if (!all) break;
    }
    if (all) return true;
  }
  return false;
}

std::vector<DenseSetRefiner> default_schedule(std::size_t word_len,
                                              Letter max_letter,
                                              std::size_t separation_n,
                                              OpenDenseOracle u) {
  std::vector<DenseSetRefiner> out;
  out.push_back(perfect_everywhere_refiner());
  out.push_back(perfect_everywhere_refiner());
  std::vector<Node> words;
  for (std::size_t len = 1; len <= word_len; ++len) {
    std::vector<Letter> cur(len, 0);
    while (true) {
      words.emplace_back(cur);
      std::size_t i = len;
      while (i > 0 && cur[i - 1] == max_letter) {
        cur[i - 1] = 0;
        --i;
      }
      if (i == 0) break;
      ++cur[i - 1];
    }
  }
  for (const Node& w : words) out.push_back(slalom_refiner(w));
  out.push_back(box_separation_refiner(separation_n, std::move(u)));
  return out;
}

}  // namespace treeplane
