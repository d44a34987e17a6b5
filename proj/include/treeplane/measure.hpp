#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "treeplane/clopen.hpp"
#include "treeplane/dyadic.hpp"
#include "treeplane/finite_tree.hpp"
#include "treeplane/kinds.hpp"
#include "treeplane/node.hpp"
#include "treeplane/oracle.hpp"

namespace treeplane {

// A tree oracle equipped with exact cylinder masses: node_mass(root) = 1 and
// node_mass(s) is the limit from below of the child mass partial sums.
struct MeasuredTreeOracle {
  TreeOracle tree;
  std::function<DyadicRational(const Node&)> node_mass;
};

// mass([s ⌢ i]) = mass([s]) / 2^(i+1); masses sum exactly to the parent's.
MeasuredTreeOracle geometric_measured_oracle();

struct FSigmaStage {
  FiniteTree tree{Alphabet::omega};
  std::vector<Letter> cutoffs;       // per-level inclusive letter bound
  DyadicRational certified_bound;    // product of the per-level retentions
};

// Grows the finitely branching tree whose level-k cutoff is the least letter
// bound retaining a mass fraction above 1 - 1/2^(k+n) below every node, and
// certifies the mass of its body from below by the exact partial product.
FSigmaStage build_f_sigma_avoiding_miller(const MeasuredTreeOracle& mu,
                                          std::size_t n, std::size_t depth,
                                          std::size_t fuel = 10000);

// ---------------------------------------------------------------------------

struct PlaneStep {
  std::size_t step = 0;           // 1-based
  std::size_t chosen_depth = 0;   // side length of the chosen box
  Node box_left, box_right;
  DyadicRational box_mass;        // λ(box ∩ B_{step-1})
  DyadicRational box_threshold;   // (1 - ε_step) / 2^(2 depth)
  std::size_t stage_index = 0;    // selected stage for this step
  DyadicRational stage_mass_min;  // least pair mass at the selected stage
  DyadicRational stage_threshold;
  DyadicRational b_mass;          // λ(B_step)
  DyadicRational b_bound;         // (1 - 2^(2 step) ε_step) / 2^(2 depth)
};

struct PlaneInscription {
  std::size_t levels = 0;
  std::size_t base_stage = 0;       // k_0
  DyadicRational base_mass;         // λ(B_0)
  DyadicRational base_bound;        // 1 - 2 ε_0
  std::map<Node, Node, LengthLexLess> labels;  // binary word -> label
  std::vector<PlaneStep> steps;
  FiniteTree tree{Alphabet::binary};
};

// Epsilon schedule 1/2^(2n+3); fixed by the certified inequalities.
DyadicRational plane_epsilon(std::size_t n);

// Inscribes a uniformly perfect square into an ascending union of clopen
// planes: pick the base stage with measure above 1 - ε_0, symmetrize; then
// repeatedly find the first off-diagonal box of relative mass above
// 1 - ε_step inside the running intersection, extend every label through the
// box sides translated by its own zero-padded label, select the next stage
// meeting the per-pair threshold, and recertify the running intersection's
// exact mass against the displayed lower bound.
PlaneInscription inscribe_measure(const std::vector<ClopenPlane>& stages,
                                  std::size_t levels);

// Recomputes every certified inequality of a finished run from the stages
// and the recorded choices alone.
std::vector<std::string> replay_plane_inscription(
    const PlaneInscription& run, const std::vector<ClopenPlane>& stages);

// The documented test family: stage k is the complement of the diagonal
// band of depth 2k+4.
std::vector<ClopenPlane> band_complement_stages(std::size_t count);

// ---------------------------------------------------------------------------

struct SilverStep {
  std::size_t step = 0;  // 1-based
  Node block;            // common extension block
  DyadicRational block_mass_min;      // least translate mass for the block
  DyadicRational block_threshold;     // (1 - ε_step) λ(cylinder)
  DyadicRational half_split_min;      // least mass after the split letters
  DyadicRational half_split_threshold;
  DyadicRational b_mass;
  DyadicRational b_bound;
};

struct SilverInscription {
  std::size_t levels = 0;
  Node seed_cylinder;               // σ_0
  DyadicRational seed_mass;         // λ([σ_0] ∩ F)
  DyadicRational seed_threshold;    // (1 - ε_0) λ([σ_0])
  DyadicRational base_mass;         // λ(B_0)
  DyadicRational base_bound;
  std::map<Node, Node, LengthLexLess> labels;  // pattern word -> label
  std::vector<SilverStep> steps;
  FiniteTree tree{Alphabet::binary};
};

DyadicRational silver_epsilon(std::size_t n);  // 1/2^(n+3)

// Grows a Silver tree inside a clopen set of positive measure: find a
// cylinder nearly inside the set, split it, and repeatedly extend all
// branches by a common block found through the translated intersection, the
// split letters coming last. Throws density_search_exhausted only if the
// search outruns its bound (impossible for clopen inputs of positive
// measure) and stage_deficit_too_large when the input has measure zero.
SilverInscription silver_in_closed(const ClopenSet& f, std::size_t levels);

std::vector<std::string> replay_silver_inscription(const SilverInscription& run,
                                                   const ClopenSet& f);

// ---------------------------------------------------------------------------

struct SmallSetSpec {
  // Consecutive finite intervals; interval n has length lengths[n] >= n.
  std::vector<std::size_t> lengths;

  static SmallSetSpec default_spec(std::size_t count);  // lengths n+1
  std::size_t start_of(std::size_t n) const;
  std::size_t end_of(std::size_t n) const;
};

struct SmallSetWitness {
  Node x_prefix;
  Node y_prefix;
  std::size_t difference_level = 0;
  std::vector<std::size_t> hit_intervals;
  DyadicRational pattern_sum;  // sum of 2^-|I_n| over covered intervals
  DyadicRational bound_sum;    // sum of 2^-n over the same indices
};

// Two branches of a Silver-like tree differing at exactly one splitting
// level and agreeing on every later covered interval.
SmallSetWitness small_set_witness(const SmallSetSpec& spec,
                                  const TreeOracle& s, std::size_t depth,
                                  std::size_t fuel = 8);

}  // namespace treeplane
