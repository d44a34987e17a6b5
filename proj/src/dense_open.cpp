#include "treeplane/dense_open.hpp"

#include <algorithm>
#include <memory>

#include "treeplane/error.hpp"

namespace treeplane {

namespace {

// Forced prefix of a covering coordinate with support s: the query node must
// be an initial segment of the generator side, so entries up to s are copied
// and entries past s must already be zero.
std::optional<std::vector<Letter>> plain_prefix(const Node& n, std::size_t s) {
  if (s < n.size()) {
    for (std::size_t j = s; j < n.size(); ++j)
      if (n[j] != 0) return std::nullopt;
    return n.prefix(s).letters();
  }
  return n.letters();
}

// Same, for a generator side of the form q ↾ s ⌢ tail (tail of fixed bits).
std::optional<std::vector<Letter>> tailed_prefix(const Node& n, std::size_t s,
                                                 Letter tail_bit,
                                                 std::size_t tail_len) {
  if (n.size() > s + tail_len) return std::nullopt;
  for (std::size_t j = s; j < n.size(); ++j)
    if (n[j] != tail_bit) return std::nullopt;
  if (s < n.size()) return n.prefix(s).letters();
  return n.letters();
}

Letter max_entry_of(const Node& a, const Node& b) {
  Letter m = 0;
  for (Letter x : a.letters()) m = std::max(m, x);
  for (Letter x : b.letters()) m = std::max(m, x);
  return m;
}

std::size_t trim_length(const Node& n) {
  std::size_t t = 0;
  for (std::size_t i = 0; i < n.size(); ++i)
    if (n[i] != 0) t = i + 1;
  return t;
}

Box miller_box(const RationalPair& q) {
  std::size_t len = support(q) + max_entry(q);
  return Box{q.first.restrict_to(len), q.second.restrict_to(len)};
}

Box silver_box(const RationalPair& q) {
  std::size_t s = support(q);
  Node l = q.first.restrict_to(s).concat(Node{0, 0});
  Node r = q.second.restrict_to(s).concat(Node{1, 1});
  return Box{l, r};
}

}  // namespace

OpenDenseOracle make_miller_u_oracle() {
  OpenDenseOracle o;
  o.name = "miller_U";
  o.contains_box = [](const Box& b) {
    // A generator covering the box has frame length L = supp + K with both
    // sides prefixes of b; one pass over L suffices.
    std::size_t cap = std::min(b.left.size(), b.right.size());
    std::size_t last_nz_l = 0, last_nz_r = 0;  // last nonzero index + 1
    bool differ = false;
    std::size_t diff_at = 0;
    Letter running_max = 0;
    for (std::size_t len = 1; len <= cap; ++len) {
      std::size_t i = len - 1;
      if (b.left[i] != 0) last_nz_l = len;
      if (b.right[i] != 0) last_nz_r = len;
      if (!differ && b.left[i] != b.right[i]) {
        differ = true;
        diff_at = len;
      }
      running_max = std::max({running_max, b.left[i], b.right[i]});
      if (len < 2) continue;
      std::size_t s = std::max(last_nz_l, last_nz_r);
      if (s == 0 || last_nz_l != last_nz_r) continue;
      if (!differ || diff_at > s) continue;
      if (s + running_max == len) return Containment::inside;
    }
    return Containment::unknown;
  };
  o.refine = [](const Node& v1, const Node& v2) {
    // Feasible supports: the trimmed lengths of either side (zero tails can
    // fold into the generator frame) and anything past both sides. Other
    // supports would force a zero last entry.
    std::size_t len = std::max(v1.size(), v2.size());
    std::vector<std::size_t> supports;
    for (std::size_t s : {trim_length(v1), trim_length(v2), len + 1, len + 2,
                          len + 3})
      if (s >= 1 &&
          std::find(supports.begin(), supports.end(), s) == supports.end())
        supports.push_back(s);
    std::vector<SupportCandidate> cands;
    for (std::size_t s : supports) {
      auto p1 = plain_prefix(v1, s);
      auto p2 = plain_prefix(v2, s);
      if (!p1 || !p2) continue;
      SupportCandidate c{s, std::move(*p1), std::move(*p2), 1};
      // the frame supp+K must reach past both inputs
      if (len > s) c.min_max_entry = static_cast<Letter>(len - s);
      cands.push_back(std::move(c));
    }
    auto q = find_min_cover(std::move(cands), max_entry_of(v1, v2));
    if (!q)
      throw Error(Errc::oracle_breach, "no covering generator found");
    return miller_box(*q);
  };
  return o;
}

OpenDenseOracle make_silver_u_oracle() {
  OpenDenseOracle o;
  o.name = "silver_U";
  o.contains_box = [](const Box& b) {
    std::size_t cap = std::min(b.left.size(), b.right.size());
    for (std::size_t len = 3; len <= cap; ++len) {
      std::size_t s = len - 2;
      if (b.left[s] != 0 || b.left[s + 1] != 0) continue;
      if (b.right[s] != 1 || b.right[s + 1] != 1) continue;
      if (b.left[s - 1] == 0 || b.right[s - 1] == 0) continue;
      bool differ = false;
      for (std::size_t i = 0; i < s && !differ; ++i)
        differ = b.left[i] != b.right[i];
      if (differ) return Containment::inside;
    }
    return Containment::unknown;
  };
  o.refine = [](const Node& v1, const Node& v2) {
    std::size_t len = std::max(v1.size(), v2.size());
    std::size_t lo = len > 2 ? len - 2 : 1;
    std::vector<SupportCandidate> cands;
    for (std::size_t s = std::max<std::size_t>(lo, 1); s <= len + 3; ++s) {
      auto p1 = tailed_prefix(v1, s, 0, 2);
      auto p2 = tailed_prefix(v2, s, 1, 2);
      if (!p1 || !p2) continue;
      cands.push_back(SupportCandidate{s, std::move(*p1), std::move(*p2), 1});
    }
    auto q = find_min_cover(std::move(cands), max_entry_of(v1, v2));
    if (!q)
      throw Error(Errc::oracle_breach, "no covering generator found");
    return silver_box(*q);
  };
  return o;
}

Node up_miller_g_generator(std::size_t n, const RationalPoint& q) {
  if (q.is_zero())
    throw Error(Errc::zero_point, "generator of a zero rational");
  return q.restrict_to(q.support() + q.max_entry() + n);
}

ZeroHitReport laver_g_membership(const Node& x_prefix, std::size_t target) {
  ZeroHitReport r{false, {}};
  for (std::size_t i = 0; i < x_prefix.size(); ++i)
    if (x_prefix[i] == 0) r.indices.push_back(i);
  if (r.indices.size() >= target) {
    r.indices.resize(target);
    r.satisfied = true;
  } else {
    r.indices.clear();
  }
  return r;
}

bool psi_certified(const OpenDenseOracle& u, const Node& a, const Node& b) {
  return u.contains_box(Box{a, b}) == Containment::inside &&
         u.contains_box(Box{b, a}) == Containment::inside;
}

namespace {

void check_inside(const OpenDenseOracle& u, const Box& b) {
  if (u.contains_box(b) != Containment::inside)
    throw Error(Errc::oracle_breach,
                "refine output not certified by " + u.name);
}

}  // namespace

std::pair<Node, Node> refine_pair(const OpenDenseOracle& u, const Node& v1,
                                  const Node& v2) {
  Box fwd = u.refine(v1, v2);
  if (!v1.is_prefix_of(fwd.left) || !v2.is_prefix_of(fwd.right))
    throw Error(Errc::oracle_breach, "refine output does not extend input");
  check_inside(u, fwd);
  Box bwd = u.refine(fwd.right, fwd.left);
  if (!fwd.right.is_prefix_of(bwd.left) || !fwd.left.is_prefix_of(bwd.right))
    throw Error(Errc::oracle_breach, "refine output does not extend input");
  check_inside(u, bwd);
  Node s1 = bwd.right;
  Node s2 = bwd.left;
  std::size_t len = std::max(s1.size(), s2.size());
  s1 = s1.pad_zeros(len);
  s2 = s2.pad_zeros(len);
  check_inside(u, Box{s1, s2});
  check_inside(u, Box{s2, s1});
  return {s1, s2};
}

std::vector<Node> refine_family(const OpenDenseOracle& u,
                                const std::vector<Node>& family) {
  std::vector<Node> cur = family;
  for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
    for (std::size_t l = k + 1; l < cur.size(); ++l) {
      auto [a, b] = refine_pair(u, cur[k], cur[l]);
      cur[k] = a;
      cur[l] = b;
    }
  }
  std::size_t len = 0;
  for (const Node& n : cur) len = std::max(len, n.size());
  for (Node& n : cur) n = n.pad_zeros(len);
  // final certificates on the padded family
  for (std::size_t k = 0; k < cur.size(); ++k)
    for (std::size_t l = 0; l < cur.size(); ++l)
      if (k != l) check_inside(u, Box{cur[k], cur[l]});
  return cur;
}

DenseSequence constant_sequence(OpenDenseOracle oracle) {
  DenseSequence s;
  s.name = oracle.name;
  auto shared = std::make_shared<OpenDenseOracle>(std::move(oracle));
  s.at = [shared](std::size_t) { return *shared; };
  return s;
}

}  // namespace treeplane
