#include "treeplane/rationals.hpp"

#include <algorithm>

#include "treeplane/error.hpp"

namespace treeplane {

RationalPoint::RationalPoint(std::vector<Letter> entries)
    : entries_(std::move(entries)) {
  while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
}

RationalPoint RationalPoint::from_prefix(const Node& n) {
  return RationalPoint(n.letters());
}

std::size_t RationalPoint::support() const {
  if (entries_.empty())
    throw Error(Errc::zero_point, "support of the zero point is undefined");
  return entries_.size();
}

Letter RationalPoint::max_entry() const {
  Letter m = 0;
  for (Letter x : entries_) m = std::max(m, x);
  return m;
}

Node RationalPoint::restrict_to(std::size_t len) const {
  std::vector<Letter> v(len, 0);
  for (std::size_t i = 0; i < len && i < entries_.size(); ++i) v[i] = entries_[i];
  return Node(std::move(v));
}

bool RationalPoint::extends(const Node& prefix) const {
  for (std::size_t i = 0; i < prefix.size(); ++i)
    if ((*this)(i) != prefix[i]) return false;
  return true;
}

RationalPair RationalPair::checked(RationalPoint a, RationalPoint b) {
  if (a.is_zero() || b.is_zero())
    throw Error(Errc::zero_point, "pair coordinates must be nonzero");
  if (a.support() != b.support())
    throw Error(Errc::schema_error, "pair coordinates must share a support");
  if (a == b)
    throw Error(Errc::schema_error, "pair coordinates must differ");
  return RationalPair{std::move(a), std::move(b)};
}

std::size_t support(const RationalPair& q) { return q.first.support(); }

Letter max_entry(const RationalPoint& a, const RationalPoint& b) {
  return std::max(a.max_entry(), b.max_entry());
}

Letter max_entry(const RationalPair& q) { return max_entry(q.first, q.second); }

namespace {

// Vectors of length s with entries <= m and a nonzero last entry.
std::size_t count_sides(std::size_t s, Letter m) {
  if (s == 0 || m == 0) return 0;
  std::size_t r = m;
  for (std::size_t i = 1; i < s; ++i) r *= (m + 1);
  return r;
}

// Lexicographically next vector with entries <= m; last entry kept nonzero.
bool next_side(std::vector<Letter>& v, Letter m) {
  for (std::size_t i = v.size(); i-- > 0;) {
    if (v[i] < m) {
      ++v[i];
      for (std::size_t j = i + 1; j < v.size(); ++j) v[j] = 0;
      if (v.back() == 0) v.back() = 1;
      return true;
    }
  }
  return false;
}

bool contains_entry(const std::vector<Letter>& v, Letter m) {
  return std::find(v.begin(), v.end(), m) != v.end();
}

}  // namespace

std::size_t block_size(std::size_t s, Letter m) {
  if (m == 0) return 0;
  std::size_t all = count_sides(s, m);
  std::size_t below = count_sides(s, m - 1);
  // pairs whose overall max is exactly m, minus the equal ones
  return (all * all - below * below) - (all - below);
}

RationalPair rational_pair_at(std::size_t index) {
  for (std::size_t w = 2;; ++w) {
    for (std::size_t s = 1; s < w; ++s) {
      Letter m = static_cast<Letter>(w - s);
      std::size_t size = block_size(s, m);
      if (index >= size) {
        index -= size;
        continue;
      }
      // walk the block lexicographically
      std::vector<Letter> a(s, 0);
      a.back() = 1;
      while (true) {
        std::vector<Letter> b(s, 0);
        b.back() = 1;
        bool a_has_m = contains_entry(a, m);
        do {
          if (a == b) continue;
          if (!a_has_m && !contains_entry(b, m)) continue;
          if (index == 0)
            return RationalPair{RationalPoint(a), RationalPoint(b)};
          --index;
        } while (next_side(b, m));
        if (!next_side(a, m)) break;
      }
    }
  }
}

std::size_t enumeration_bound(std::size_t s, Letter m) {
  std::size_t total = 0;
  std::size_t w_cap = s + m;
  for (std::size_t w = 2; w <= w_cap; ++w)
    for (std::size_t ss = 1; ss < w; ++ss)
      total += block_size(ss, static_cast<Letter>(w - ss));
  return total;
}

namespace {

// Lexicographically least valid completion of the forced prefixes within the
// (s, m) block: fill free positions with zeros, keep last entries nonzero,
// place the required exact-max entry as late as possible (preferring the
// second coordinate), and resolve accidental equality by the smallest bump at
// the latest free position.
std::optional<RationalPair> lex_min_completion(const SupportCandidate& req,
                                               std::size_t s, Letter m) {
  if (req.p1.size() > s || req.p2.size() > s) return std::nullopt;
  for (Letter x : req.p1)
    if (x > m) return std::nullopt;
  for (Letter x : req.p2)
    if (x > m) return std::nullopt;

  auto complete = [s](const std::vector<Letter>& p) {
    std::vector<Letter> v = p;
    v.resize(s, 0);
    if (p.size() < s) v.back() = 1;
    return v;
  };
  std::vector<Letter> q1 = complete(req.p1);
  std::vector<Letter> q2 = complete(req.p2);
  if (q1.back() == 0 || q2.back() == 0) return std::nullopt;

  Letter cur = std::max(*std::max_element(q1.begin(), q1.end()),
                        *std::max_element(q2.begin(), q2.end()));
  if (cur < m) {
    if (req.p2.size() < s)
      q2.back() = m;
    else if (req.p1.size() < s)
      q1.back() = m;
    else
      return std::nullopt;
  }

  if (q1 == q2) {
    bool fixed = false;
    for (std::size_t pos = s; pos-- > req.p2.size() && !fixed;)
      if (q2[pos] < m) {
        ++q2[pos];
        fixed = true;
      }
    for (std::size_t pos = s; pos-- > req.p1.size() && !fixed;)
      if (q1[pos] < m) {
        ++q1[pos];
        fixed = true;
      }
    if (!fixed) return std::nullopt;
  }
  return RationalPair{RationalPoint(std::move(q1)), RationalPoint(std::move(q2))};
}

}  // namespace

std::optional<RationalPair> find_min_cover(
    std::vector<SupportCandidate> candidates, Letter min_entry,
    std::size_t tries) {
  Letter floor = std::max<Letter>(min_entry, 1);
  struct Block {
    std::size_t w, s;
    std::size_t cand;
    Letter m;
  };
  std::vector<Block> queue;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (candidates[i].support == 0) continue;
    Letter m = std::max(floor, candidates[i].min_max_entry);
    queue.push_back({candidates[i].support + m, candidates[i].support, i, m});
  }
  for (std::size_t round = 0; round < tries && !queue.empty(); ++round) {
    std::size_t best = 0;
    for (std::size_t j = 1; j < queue.size(); ++j)
      if (queue[j].w < queue[best].w ||
          (queue[j].w == queue[best].w && queue[j].s < queue[best].s))
        best = j;
    Block b = queue[best];
    if (auto pair = lex_min_completion(candidates[b.cand], b.s, b.m))
      return pair;
    queue[best].m = b.m + 1;
    queue[best].w = b.w + 1;
  }
  return std::nullopt;
}

}  // namespace treeplane
