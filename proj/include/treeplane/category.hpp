#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "treeplane/dense_open.hpp"
#include "treeplane/finite_tree.hpp"
#include "treeplane/node.hpp"
#include "treeplane/oracle.hpp"

namespace treeplane {

// One certified rectangle from the inscription run: the ordered pair of
// labels indexed by (first, second) was found inside at(generation).
struct CertifiedPair {
  std::size_t generation;
  Node first_index;
  Node second_index;
  Box box;
};

// Output of the dense-open inscription. Index words live over the omega
// alphabet; generation g contributes the words with max(length, max letter+1)
// equal to g, except that (0) and (1) belong to generation 1. The tree grown
// from all labels is Miller-shaped (index letters branch at label ends); the
// tree grown from binary-indexed labels is uniformly perfect by the equal
// length discipline.
struct InscriptionResult {
  std::size_t levels = 0;
  std::map<Node, Node, LengthLexLess> labels;  // index word -> label node
  FiniteTree miller_approx{Alphabet::omega};
  FiniteTree uniform_approx{Alphabet::omega};
  std::vector<CertifiedPair> witness_log;
};

// Generation of an index word under the schedule above.
std::size_t index_generation(const Node& word);

struct InscriptionLimits {
  std::size_t max_levels = 6;
};

// Builds labels generation by generation: each batch of fresh index words is
// extended through refine_family against at(g) together with the binary words
// of the same generation, so every ordered (binary, anything) pair of
// incomparable same-generation labels carries a certificate. Sibling labels
// start from the parent label extended by the index letter itself, which
// grows the all-label tree with one branch per letter at each label end.
InscriptionResult inscribe_category(const DenseSequence& g, std::size_t levels,
                                    const InscriptionLimits& limits = {});

struct VerificationReport {
  std::vector<std::string> failures;
  std::size_t pairs_checked = 0;
  bool ok() const { return failures.empty(); }
};

// Re-checks an inscription from its labels and the dense sequence alone (the
// witness log is advisory): prefix closure, label/index extension order, the
// sibling meet condition, equal lengths across binary words of equal length,
// uniform perfectness of the binary tree, certificates for incomparable
// same-generation pairs with a binary member, and the unique label path
// through every maximal node.
VerificationReport verify_inscription(const InscriptionResult& r,
                                      const DenseSequence& g);

// A finite fragment of a pair of branches together with the generator bound
// that was exhausted while certifying avoidance.
struct AvoidanceWitness {
  Node x_prefix;
  Node y_prefix;
  std::vector<std::size_t> x_blocks;  // |x_1|, |x_2|, ...
  std::vector<std::size_t> y_blocks;  // |y_1|, |y_2|, ...
  std::size_t checked_generator_bound = 0;
  std::size_t generators_examined = 0;
};

// Walks two branches of a Miller-like tree in alternating blocks, each block
// entering with a letter larger than the other branch's current length and
// ending at a splitting node past it; then certifies that no generator of
// the miller_U family with frame length within min(|x|,|y|) covers (x, y).
AvoidanceWitness miller_avoidance_witness(const TreeOracle& t,
                                          std::size_t rounds,
                                          std::size_t fuel = 10000);

// A branch prefix through a Laver-like tree taking only nonzero letters past
// the stem.
Node laver_witness(const TreeOracle& l, std::size_t length,
                   std::size_t fuel = 10000);

// Thins a Silver-like tree until no two splitting levels are adjacent, takes
// the two least branches diverging at the first retained splitting level and
// certifies that no silver_U generator with sides within `depth` covers them.
AvoidanceWitness silver_square_witness(const TreeOracle& s, std::size_t depth,
                                       std::size_t fuel = 64);

struct UpMillerWitness {
  Node x_prefix;
  std::vector<std::size_t> split_levels;
  std::size_t checked_generator_bound = 0;
  std::size_t generators_examined = 0;
};

// On a level-uniform tree with unary or full branching, picks at each
// splitting level a letter exceeding the next splitting level, and certifies
// non-membership in the up_miller_G generators with supp+K+n within `depth`.
UpMillerWitness up_miller_witness(const TreeOracle& t, std::size_t depth,
                                  std::size_t n, std::size_t fuel = 10000);

}  // namespace treeplane
