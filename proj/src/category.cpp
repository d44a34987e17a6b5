#include "treeplane/category.hpp"

#include <algorithm>
#include <sstream>

#include "treeplane/error.hpp"

namespace treeplane {

namespace {

bool is_binary_word(const Node& w) {
  return w.fits(Alphabet::binary);
}

Letter max_letter(const Node& w) {
  Letter m = 0;
  for (Letter x : w.letters()) m = std::max(m, x);
  return m;
}

}  // namespace

std::size_t index_generation(const Node& word) {
  if (word.empty()) return 0;
  if (word.size() == 1 && word[0] <= 1) return 1;
  return std::max<std::size_t>(word.size(), max_letter(word) + 1);
}

namespace {

void enumerate_words(std::size_t max_len, Letter alphabet_size,
                     std::vector<Node>& out) {
  std::vector<Letter> cur;
  // breadth-first by length, lexicographic within a length
  for (std::size_t len = 1; len <= max_len; ++len) {
    cur.assign(len, 0);
    while (true) {
      out.emplace_back(cur);
      std::size_t i = len;
      while (i > 0) {
        --i;
        if (cur[i] + 1 < alphabet_size) {
          ++cur[i];
          std::fill(cur.begin() + i + 1, cur.end(), 0);
          break;
        }
        if (i == 0) {
          i = len + 1;  // exhausted
          break;
        }
      }
      if (i == len + 1 || (len == 0)) break;
      if (i == 0 && cur[0] == 0) break;
    }
  }
}

std::vector<Node> generation_words(std::size_t g) {
  if (g == 0) return {Node{}};
  if (g == 1) return {Node{0}, Node{1}};
  std::vector<Node> all;
  enumerate_words(g, static_cast<Letter>(g), all);
  std::vector<Node> out;
  for (Node& w : all)
    if (index_generation(w) == g) out.push_back(std::move(w));
  return out;
}

struct CallPlan {
  std::vector<Node> fresh;       // index words created by this call
  std::vector<Node> updatable;   // existing same-generation words re-extended
};

}  // namespace

InscriptionResult inscribe_category(const DenseSequence& g, std::size_t levels,
                                    const InscriptionLimits& limits) {
  if (levels < 1)
    throw Error(Errc::schema_error, "levels must be at least 1");
  if (levels > limits.max_levels)
    throw Error(Errc::level_overflow,
                "levels " + std::to_string(levels) + " exceeds bound " +
                    std::to_string(limits.max_levels));

  InscriptionResult r;
  r.levels = levels;
  r.labels[Node{}] = Node{};

  for (std::size_t gen = 1; gen <= levels + 1; ++gen) {
    OpenDenseOracle oracle = g.at(gen);
    std::vector<Node> words = generation_words(gen);
    std::vector<Node> binaries;
    for (const Node& w : words)
      if (is_binary_word(w)) binaries.push_back(w);

    // Schedule: words with finished parents first, then one call per new
    // parent below the top length, then all top-length words of new parents
    // together. Binary words join every call so that each (binary, fresh)
    // pair is certified when the fresh label is made; binary words are never
    // parents within their own generation, so re-extending them is safe.
    std::vector<CallPlan> plan;
    CallPlan batch;
    for (const Node& w : words)
      if (index_generation(w.parent()) < gen) batch.fresh.push_back(w);
    plan.push_back(std::move(batch));

    std::vector<Node> new_parents;
    for (const Node& w : words)
      if (w.size() + 1 < gen) new_parents.push_back(w);
    std::sort(new_parents.begin(), new_parents.end(), LengthLexLess{});
    for (const Node& p : new_parents) {
      CallPlan brood;
      for (const Node& w : words)
        if (!w.empty() && w.parent() == p) brood.fresh.push_back(w);
      if (!brood.fresh.empty()) {
        brood.updatable = binaries;
        plan.push_back(std::move(brood));
      }
    }
    CallPlan mega;
    for (const Node& w : words)
      if (w.size() == gen && index_generation(w.parent()) == gen)
        mega.fresh.push_back(w);
    if (!mega.fresh.empty()) {
      mega.updatable = binaries;
      plan.push_back(std::move(mega));
    }

    for (const CallPlan& call : plan) {
      std::vector<Node> family;
      family.reserve(call.fresh.size() + call.updatable.size());
      for (const Node& w : call.fresh) {
        const Node& parent_label = r.labels.at(w.parent());
        family.push_back(parent_label.child(w[w.size() - 1]));
      }
      for (const Node& u : call.updatable) family.push_back(r.labels.at(u));

      std::vector<Node> out = refine_family(oracle, family);

      std::vector<const Node*> call_words;
      for (const Node& w : call.fresh) call_words.push_back(&w);
      for (const Node& u : call.updatable) call_words.push_back(&u);
      for (std::size_t i = 0; i < call_words.size(); ++i)
        r.labels[*call_words[i]] = out[i];

      // log ordered certificates that involve a binary word and a fresh label
      for (std::size_t i = 0; i < call_words.size(); ++i) {
        for (std::size_t j = 0; j < call_words.size(); ++j) {
          if (i == j) continue;
          bool fresh_involved =
              i < call.fresh.size() || j < call.fresh.size();
          if (!fresh_involved) continue;
          if (!is_binary_word(*call_words[i]) &&
              !is_binary_word(*call_words[j]))
            continue;
          r.witness_log.push_back(CertifiedPair{
              gen, *call_words[i], *call_words[j], Box{out[i], out[j]}});
        }
      }
    }
  }

  for (const auto& [word, label] : r.labels) {
    r.miller_approx.insert_branch(label);
    if (is_binary_word(word)) r.uniform_approx.insert_branch(label);
  }
  return r;
}

namespace {

void report(VerificationReport& rep, const std::string& msg) {
  rep.failures.push_back(msg);
}

}  // namespace

VerificationReport verify_inscription(const InscriptionResult& r,
                                      const DenseSequence& g) {
  VerificationReport rep;
  const auto& labels = r.labels;

  auto root = labels.find(Node{});
  if (root == labels.end() || !root->second.empty())
    report(rep, "root label missing or not the empty node");

  // extension order both ways, parent-child letter discipline
  for (const auto& [w, lab] : labels) {
    if (w.empty()) continue;
    auto pit = labels.find(w.parent());
    if (pit == labels.end()) {
      report(rep, "missing parent word for " + w.to_string());
      continue;
    }
    Node expected = pit->second.child(w[w.size() - 1]);
    if (!expected.is_prefix_of(lab))
      report(rep, "condition 1: label of " + w.to_string() +
                      " does not extend parent label plus letter");
    if (lab.size() <= pit->second.size())
      report(rep, "condition 1: label of " + w.to_string() +
                      " does not strictly extend its parent's");
  }
  for (auto it1 = labels.begin(); it1 != labels.end(); ++it1)
    for (auto it2 = std::next(it1); it2 != labels.end(); ++it2) {
      bool word_cmp = !incomparable(it1->first, it2->first);
      bool label_cmp = !incomparable(it1->second, it2->second);
      if (word_cmp != label_cmp)
        report(rep, "condition 1: comparability mismatch between " +
                        it1->first.to_string() + " and " +
                        it2->first.to_string());
    }

  // sibling meet condition
  for (const auto& [w, lab] : labels) {
    std::vector<std::pair<Letter, const Node*>> kids;
    for (const auto& [w2, lab2] : labels)
      if (w2.size() == w.size() + 1 && w.is_prefix_of(w2))
        kids.emplace_back(w2[w2.size() - 1], &lab2);
    for (std::size_t i = 0; i < kids.size(); ++i)
      for (std::size_t j = i + 1; j < kids.size(); ++j)
        if (!(kids[i].second->meet(*kids[j].second) == lab))
          report(rep, "condition 2: children of " + w.to_string() +
                          " do not meet exactly at its label");
  }

  // per-generation certificates: ordered pairs with a binary member
  std::size_t max_gen = 0;
  for (const auto& [w, lab] : labels)
    max_gen = std::max(max_gen, index_generation(w));
  for (std::size_t gen = 1; gen <= max_gen; ++gen) {
    OpenDenseOracle oracle = g.at(gen);
    OpenDenseOracle coarser = g.at(gen >= 2 ? gen - 1 : gen);
    std::vector<const Node*> words;
    std::vector<const Node*> labs;
    for (const auto& [w, lab] : labels)
      if (index_generation(w) == gen) {
        words.push_back(&w);
        labs.push_back(&lab);
      }
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = 0; j < words.size(); ++j) {
        if (i == j) continue;
        if (!is_binary_word(*words[i]) && !is_binary_word(*words[j])) continue;
        if (!incomparable(*words[i], *words[j])) continue;
        ++rep.pairs_checked;
        Box box{*labs[i], *labs[j]};
        if (oracle.contains_box(box) != Containment::inside) {
          report(rep, "condition 3: pair " + words[i]->to_string() + ", " +
                          words[j]->to_string() + " not inside stage " +
                          std::to_string(gen));
        } else if (gen >= 2 &&
                   coarser.contains_box(box) != Containment::inside) {
          // opportunistic check of the descending contract on the supplier
          report(rep, "descending contract: a stage-" + std::to_string(gen) +
                          " box is not inside stage " +
                          std::to_string(gen - 1));
        }
      }
    }
  }

  // equal label lengths across binary words of equal length
  std::map<std::size_t, std::size_t> binary_len;
  for (const auto& [w, lab] : labels) {
    if (!is_binary_word(w) || w.empty()) continue;
    auto it = binary_len.find(w.size());
    if (it == binary_len.end())
      binary_len[w.size()] = lab.size();
    else if (it->second != lab.size())
      report(rep, "condition 4: binary labels of word length " +
                      std::to_string(w.size()) + " have unequal lengths");
  }

  if (!r.uniform_approx.is_subtree_of(r.miller_approx))
    report(rep, "binary-label tree is not a subtree of the full-label tree");
  if (!r.uniform_approx.empty()) {
    auto verdict = check_kind(r.uniform_approx, TreeKind::uniformly_perfect,
                              r.uniform_approx.height());
    if (!verdict.consistent)
      report(rep, "binary-label tree fails the uniformly perfect check: " +
                      verdict.detail);
  }

  // every maximal node is reached through a unique chain of labels
  for (const Node& tip : r.miller_approx.tips()) {
    std::vector<const Node*> on_path;
    bool tip_is_label = false;
    for (const auto& [w, lab] : labels) {
      if (lab.is_prefix_of(tip)) on_path.push_back(&w);
      if (lab == tip) tip_is_label = true;
    }
    if (!tip_is_label) {
      report(rep, "maximal node " + tip.to_string() + " is not a label");
      continue;
    }
    std::sort(on_path.begin(), on_path.end(),
              [](const Node* a, const Node* b) { return a->size() < b->size(); });
    bool chain = true;
    for (std::size_t i = 0; i + 1 < on_path.size(); ++i)
      chain = chain && on_path[i]->size() + 1 == on_path[i + 1]->size() &&
              on_path[i]->is_prefix_of(*on_path[i + 1]);
    if (!chain || on_path.empty() || !on_path.front()->empty())
      report(rep, "label path through " + tip.to_string() +
                      " is not a single chain of index words");
  }

  return rep;
}

namespace {

void require_omega_miller_like(const TreeOracle& t) {
  if (t.alphabet != Alphabet::omega)
    throw Error(Errc::not_miller_like, "oracle alphabet is not omega");
  if (t.advertised_kind && *t.advertised_kind != TreeKind::miller &&
      *t.advertised_kind != TreeKind::laver)
    throw Error(Errc::not_miller_like,
                "oracle advertises " + to_string(*t.advertised_kind));
}

Letter least_letter_above(const TreeOracle& t, const Node& n, std::size_t bound,
                          std::size_t fuel, Errc errc) {
  auto kids = t.children(n, std::max<std::size_t>(bound + 2, 2));
  for (Letter a : kids)
    if (a > bound) return a;
  kids = t.children(n, fuel);
  for (Letter a : kids)
    if (a > bound) return a;
  throw Error(errc, "no successor letter above " + std::to_string(bound) +
                        " at " + n.to_string() + " within fuel");
}

// Advance to a splitting node of length strictly above `bound`, following
// least letters through intermediate nodes.
Node walk_to_split_past(const TreeOracle& t, Node cur, std::size_t bound,
                        std::size_t fuel, Errc errc) {
  for (std::size_t step = 0; step < fuel; ++step) {
    auto kids = t.children(cur, 2);
    if (kids.size() >= 2 && cur.size() > bound) return cur;
    if (kids.empty())
      throw Error(errc, "branch dies at " + cur.to_string());
    cur = cur.child(kids.front());
  }
  throw Error(errc, "no splitting node past " + std::to_string(bound) +
                        " within fuel");
}

// Structural exhaustion of miller_U generators against a concrete pair: a
// cover with frame length L is fully determined by the prefixes, so each L
// names at most one candidate.
std::size_t certify_miller_avoidance(const Node& x, const Node& y,
                                     std::size_t bound) {
  OpenDenseOracle u = make_miller_u_oracle();
  Box b{x.prefix(bound), y.prefix(bound)};
  if (u.contains_box(b) == Containment::inside)
    throw Error(Errc::oracle_breach,
                "constructed pair is covered by a generator");
  return bound >= 2 ? bound - 1 : 0;
}

}  // namespace

AvoidanceWitness miller_avoidance_witness(const TreeOracle& t,
                                          std::size_t rounds,
                                          std::size_t fuel) {
  require_omega_miller_like(t);
  Node start = stem(t, fuel);
  Node x = start, y = start;
  AvoidanceWitness w;
  for (std::size_t round = 0; round < rounds; ++round) {
    Letter s = least_letter_above(t, x, y.size(), fuel, Errc::not_miller_like);
    x = walk_to_split_past(t, x.child(s), y.size(), fuel,
                           Errc::not_miller_like);
    w.x_blocks.push_back(x.size());
    Letter u = least_letter_above(t, y, x.size(), fuel, Errc::not_miller_like);
    y = walk_to_split_past(t, y.child(u), x.size(), fuel,
                           Errc::not_miller_like);
    w.y_blocks.push_back(y.size());
  }
  w.x_prefix = x;
  w.y_prefix = y;
  w.checked_generator_bound = std::min(x.size(), y.size());
  w.generators_examined =
      certify_miller_avoidance(x, y, w.checked_generator_bound);
  return w;
}

Node laver_witness(const TreeOracle& l, std::size_t length, std::size_t fuel) {
  if (l.alphabet != Alphabet::omega)
    throw Error(Errc::not_laver_like, "oracle alphabet is not omega");
  if (l.advertised_kind && *l.advertised_kind != TreeKind::laver)
    throw Error(Errc::not_laver_like,
                "oracle advertises " +
                    (l.advertised_kind ? to_string(*l.advertised_kind)
                                       : std::string("nothing")));
  Node cur = stem(l, fuel);
  if (cur.size() > length) cur = cur.prefix(length);
  while (cur.size() < length) {
    auto kids = l.children(cur, 2);
    Letter pick = 0;
    if (!kids.empty() && kids.front() != 0)
      pick = kids.front();
    else if (kids.size() >= 2)
      pick = kids[1];
    else
      throw Error(Errc::not_laver_like,
                  "no nonzero successor at " + cur.to_string());
    cur = cur.child(pick);
  }
  return cur;
}

AvoidanceWitness silver_square_witness(const TreeOracle& s, std::size_t depth,
                                       std::size_t fuel) {
  if (s.advertised_kind && *s.advertised_kind != TreeKind::silver)
    throw Error(Errc::not_silver,
                "oracle advertises " + to_string(*s.advertised_kind));
  FiniteTree reduced = silver_splits_and_rests(s, depth, fuel);

  // least branch, and the branch deviating at the first splitting level
  std::vector<std::size_t> split_levels;
  Node x, y;
  bool diverged = false;
  Node cur;
  for (std::size_t lv = 0; lv < depth; ++lv) {
    auto letters = reduced.successor_letters(cur);
    if (letters.empty()) break;
    if (letters.size() >= 2) split_levels.push_back(lv);
    x = x.child(letters.front());
    if (!diverged && letters.size() >= 2) {
      y = y.child(letters[1]);
      diverged = true;
    } else {
      y = y.child(letters.front());
    }
    cur = cur.child(letters.front());
  }
  if (!diverged)
    throw Error(Errc::no_split_within_fuel,
                "reduced tree has no splitting level within depth");

  AvoidanceWitness w;
  w.x_prefix = x;
  w.y_prefix = y;
  w.x_blocks = split_levels;
  w.checked_generator_bound = depth;
  OpenDenseOracle u = make_silver_u_oracle();
  if (u.contains_box(Box{x, y}) == Containment::inside ||
      u.contains_box(Box{y, x}) == Containment::inside)
    throw Error(Errc::oracle_breach,
                "reduced branches are covered by a generator");
  std::size_t cap = std::min(x.size(), y.size());
  w.generators_examined = cap >= 3 ? cap - 2 : 0;
  return w;
}

UpMillerWitness up_miller_witness(const TreeOracle& t, std::size_t depth,
                                  std::size_t n, std::size_t fuel) {
  if (t.alphabet != Alphabet::omega)
    throw Error(Errc::not_up_miller_like, "oracle alphabet is not omega");
  if (t.advertised_kind && *t.advertised_kind != TreeKind::uniformly_perfect &&
      *t.advertised_kind != TreeKind::miller)
    throw Error(Errc::not_up_miller_like,
                "oracle advertises " + to_string(*t.advertised_kind));

  // probe pass along least letters, scanning one level past depth
  std::vector<std::size_t> splits;
  {
    Node cur;
    for (std::size_t lv = 0; lv <= depth; ++lv) {
      auto kids = t.children(cur, 2);
      if (kids.empty())
        throw Error(Errc::not_up_miller_like,
                    "probe branch dies at level " + std::to_string(lv));
      if (kids.size() >= 2) splits.push_back(lv);
      cur = cur.child(kids.front());
    }
  }
  if (splits.empty() || n <= splits.front())
    throw Error(Errc::schema_error,
                "requires n greater than the first splitting level");

  Node x;
  for (std::size_t lv = 0; lv < depth; ++lv) {
    auto kids = t.children(x, 2);
    bool split_here = kids.size() >= 2;
    bool probe_split =
        std::find(splits.begin(), splits.end(), lv) != splits.end();
    if (split_here != probe_split)
      throw Error(Errc::not_up_miller_like,
                  "splitting levels are not level-uniform at level " +
                      std::to_string(lv));
    if (!split_here) {
      if (kids.empty())
        throw Error(Errc::not_up_miller_like, "branch dies");
      x = x.child(kids.front());
      continue;
    }
    auto next = std::upper_bound(splits.begin(), splits.end(), lv);
    if (next == splits.end())
      throw Error(Errc::not_up_miller_like,
                  "next splitting level after " + std::to_string(lv) +
                      " is not discoverable within depth");
    Letter pick =
        least_letter_above(t, x, *next, fuel, Errc::not_up_miller_like);
    x = x.child(pick);
  }

  // structural exhaustion of the one-dimensional generators
  UpMillerWitness w;
  w.x_prefix = x;
  w.split_levels = splits;
  w.checked_generator_bound = depth;
  std::size_t last_nz = 0;
  Letter running_max = 0;
  std::size_t examined = 0;
  for (std::size_t len = 1; len <= x.size(); ++len) {
    std::size_t i = len - 1;
    if (x[i] != 0) last_nz = len;
    running_max = std::max(running_max, x[i]);
    ++examined;
    if (last_nz >= 1 && last_nz + running_max + n == len)
      throw Error(Errc::oracle_breach,
                  "constructed branch is covered by a generator");
  }
  w.generators_examined = examined;
  return w;
}

}  // namespace treeplane
