#pragma once

#include <functional>
#include <string>
#include <vector>

#include "treeplane/dense_open.hpp"
#include "treeplane/finite_tree.hpp"
#include "treeplane/node.hpp"

namespace treeplane {

// An evenly cut finite tree on omega: all maximal nodes sit at the top level.
class Condition {
 public:
  explicit Condition(FiniteTree tree);
  static Condition root_only();

  const FiniteTree& tree() const { return tree_; }
  std::size_t height() const { return tree_.height(); }
  std::vector<Node> tip_nodes() const { return tree_.tips(); }

 private:
  FiniteTree tree_{Alphabet::omega};
};

// p is stronger than q: p end-extends q, i.e. q is a subset and p meets q's
// top level exactly in q's tips.
bool stronger_than(const Condition& p, const Condition& q);

// A sound strengthening move tagged for logs; refine(p) must be stronger
// than p (checked after every application).
struct DenseSetRefiner {
  std::string label;
  std::function<Condition(const Condition&)> refine;
};

// Splits some node above t: the least tip extending t gains both letters 0
// and 1, every other tip is padded with 0 to keep the cut even.
Condition dense_perfect(const Condition& p, const Node& t);

// Imprints the word s on a fresh interval of levels directly above the
// current height: every tip is extended by s.
Condition dense_slalom(const Condition& p, const Node& s);

// Extends the tips through refine_family against u so that every ordered
// pair of distinct tips is certified inside u, pads tips with zeros to
// length at least n, and re-cuts evenly.
Condition dense_box_separation(const Condition& p, std::size_t n,
                               const OpenDenseOracle& u);

struct ChainStep {
  std::string label;
  FiniteTree tree{Alphabet::omega};
};

struct ChainLog {
  FiniteTree start{Alphabet::omega};
  std::vector<ChainStep> steps;
};

// Folds the schedule into a descending chain, checking stronger_than after
// every step (refiner_breach otherwise). Returns the final tree and the
// chain of conditions.
std::pair<FiniteTree, ChainLog> meet_dense(
    const Condition& start, const std::vector<DenseSetRefiner>& schedule);

// Refiner constructors for schedules.
DenseSetRefiner perfect_refiner(const Node& t);
DenseSetRefiner perfect_everywhere_refiner();  // dense_perfect at every tip
DenseSetRefiner slalom_refiner(const Node& word);
DenseSetRefiner box_separation_refiner(std::size_t n, OpenDenseOracle u);

// Whether some interval of levels carries the word on every maximal node
// long enough to reach it.
bool has_slalom_imprint(const FiniteTree& t, const Node& word);

// The default schedule: two sweeps of tip splitting, slalom words of length
// at most `word_len` over letters at most `max_letter`, then one box
// separation stage against u.
std::vector<DenseSetRefiner> default_schedule(std::size_t word_len,
                                              Letter max_letter,
                                              std::size_t separation_n,
                                              OpenDenseOracle u);

}  // namespace treeplane
