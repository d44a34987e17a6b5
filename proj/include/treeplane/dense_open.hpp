#pragma once

#include <functional>
#include <string>
#include <vector>

#include "treeplane/node.hpp"
#include "treeplane/rationals.hpp"

namespace treeplane {

// The basic open rectangle [left] x [right].
struct Box {
  Node left;
  Node right;

  bool operator==(const Box& o) const {
    return left == o.left && right == o.right;
  }
};

enum class Containment { inside, unknown };

// A finite interface to an open dense subset of the plane. refine(s, t) must
// return a box extending (s, t) whose containment the oracle itself certifies
// (density makes refine total); contains_box is sound but may be incomplete.
struct OpenDenseOracle {
  std::string name;
  std::function<Box(const Node&, const Node&)> refine;
  std::function<Containment(const Box&)> contains_box;
};

// The union of the rectangles [q1 ↾ (supp+K)] x [q2 ↾ (supp+K)] over all
// valid pairs q, where K is the largest entry of the pair. contains_box is
// decidable here because a covering generator's frame length is bounded by
// the shorter side; refine picks the covering pair of least enumeration
// index.
OpenDenseOracle make_miller_u_oracle();

// The union of [q1 ↾ supp ⌢ (0,0)] x [q2 ↾ supp ⌢ (1,1)] over all valid
// pairs q.
OpenDenseOracle make_silver_u_oracle();

// q ↾ (supp(q) + K(q) + n) for a single nonzero rational, K read
// one-dimensionally as the largest entry of q.
Node up_miller_g_generator(std::size_t n, const RationalPoint& q);

struct ZeroHitReport {
  bool satisfied;
  std::vector<std::size_t> indices;  // witnessing zero positions
};

// Finite surrogate for "x has infinitely many zero entries": satisfied when
// the prefix already carries at least `target` zeros.
ZeroHitReport laver_g_membership(const Node& x_prefix, std::size_t target);

// Extends (v1, v2) to an equal-length pair certified inside U in both
// orientations: refine forward, refine the swap, then zero-pad the shorter
// side. Throws oracle_breach when a refine output fails the oracle's own
// contains_box.
std::pair<Node, Node> refine_pair(const OpenDenseOracle& u, const Node& v1,
                                  const Node& v2);

// Extends each member of a family to equal-length nodes with both
// orientations of every distinct pair certified inside U. Pairs are
// processed along the triangular schedule (k against every l > k on the
// current chain values); certificates survive the later extensions because
// boxes shrink under extension.
std::vector<Node> refine_family(const OpenDenseOracle& u,
                                const std::vector<Node>& family);

// contains_box on both orientations.
bool psi_certified(const OpenDenseOracle& u, const Node& a, const Node& b);

// A descending sequence of open dense oracles (a box inside at(n+1) must be
// inside at(n)).
struct DenseSequence {
  std::string name;
  std::function<OpenDenseOracle(std::size_t)> at;
};

DenseSequence constant_sequence(OpenDenseOracle oracle);

}  // namespace treeplane
