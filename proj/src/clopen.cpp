#include "treeplane/clopen.hpp"

#include <algorithm>
#include <deque>

#include "treeplane/error.hpp"

namespace treeplane {
namespace detail {

TriePtr trie_leaf(bool full) {
  static TriePtr empty = std::make_shared<BitTrie>(BitTrie{true, false, nullptr, nullptr});
  static TriePtr whole = std::make_shared<BitTrie>(BitTrie{true, true, nullptr, nullptr});
  return full ? whole : empty;
}

TriePtr trie_split(TriePtr a, TriePtr b) {
  if (a->leaf && b->leaf && a->full == b->full) return a;
  return std::make_shared<BitTrie>(BitTrie{false, false, std::move(a), std::move(b)});
}

TriePtr trie_child(const TriePtr& t, bool bit) {
  if (t->leaf) return t;
  return bit ? t->one : t->zero;
}

TriePtr trie_cylinder(const Node& s, std::size_t from) {
  if (from == s.size()) return trie_leaf(true);
  TriePtr below = trie_cylinder(s, from + 1);
  if (s[from] == 0) return trie_split(below, trie_leaf(false));
  return trie_split(trie_leaf(false), below);
}

TriePtr trie_complement(const TriePtr& t) {
  if (t->leaf) return trie_leaf(!t->full);
  return trie_split(trie_complement(t->zero), trie_complement(t->one));
}

TriePtr trie_intersect(const TriePtr& a, const TriePtr& b) {
  if (a->leaf) return a->full ? b : trie_leaf(false);
  if (b->leaf) return b->full ? a : trie_leaf(false);
  return trie_split(trie_intersect(a->zero, b->zero),
                    trie_intersect(a->one, b->one));
}

TriePtr trie_unite(const TriePtr& a, const TriePtr& b) {
  if (a->leaf) return a->full ? a : b;
  if (b->leaf) return b->full ? b : a;
  return trie_split(trie_unite(a->zero, b->zero), trie_unite(a->one, b->one));
}

TriePtr trie_translate(const TriePtr& t, const Node& word, std::size_t from) {
  if (from >= word.size()) return t;  // zero tail: identity
  if (t->leaf) return t;              // XOR is a bijection on leaves
  TriePtr z = trie_translate(trie_child(t, false), word, from + 1);
  TriePtr o = trie_translate(trie_child(t, true), word, from + 1);
  if (word[from] % 2 == 1) std::swap(z, o);
  return trie_split(std::move(z), std::move(o));
}

DyadicRational trie_measure(const TriePtr& t) {
  if (t->leaf) return t->full ? DyadicRational(1) : DyadicRational(0);
  return (trie_measure(t->zero) + trie_measure(t->one)) *
         DyadicRational::power_of_two(-1);
}

bool trie_equal(const TriePtr& a, const TriePtr& b) {
  if (a == b) return true;
  if (a->leaf != b->leaf) return false;
  if (a->leaf) return a->full == b->full;
  return trie_equal(a->zero, b->zero) && trie_equal(a->one, b->one);
}

std::size_t trie_depth(const TriePtr& t) {
  if (t->leaf) return 0;
  return 1 + std::max(trie_depth(t->zero), trie_depth(t->one));
}

TriePtr trie_descend(const TriePtr& t, const Node& path) {
  TriePtr cur = t;
  for (std::size_t i = 0; i < path.size(); ++i) cur = trie_child(cur, path[i]);
  return cur;
}

namespace {

void collect_generators(const TriePtr& t, std::vector<Letter>& path,
                        std::vector<Node>& out) {
  if (t->leaf) {
    if (t->full) out.emplace_back(path);
    return;
  }
  path.push_back(0);
  collect_generators(t->zero, path, out);
  path.back() = 1;
  collect_generators(t->one, path, out);
  path.pop_back();
}

}  // namespace

}  // namespace detail

using namespace detail;

ClopenSet ClopenSet::cylinder(const Node& s) {
  if (!s.fits(Alphabet::binary))
    throw Error(Errc::schema_error, "cylinder node must be binary");
  return ClopenSet(trie_cylinder(s));
}

ClopenSet ClopenSet::from_generators(const std::vector<Node>& gens,
                                     bool validate_antichain) {
  if (validate_antichain) {
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j)
        if (!incomparable(gens[i], gens[j]))
          throw Error(Errc::schema_error,
                      "generators are not an antichain: " +
                          gens[i].to_string() + " vs " + gens[j].to_string());
  }
  TriePtr t = trie_leaf(false);
  for (const Node& g : gens) t = trie_unite(t, trie_cylinder(g));
  return ClopenSet(t);
}

ClopenSet ClopenSet::complement() const { return ClopenSet(trie_complement(trie_)); }

ClopenSet ClopenSet::intersect(const ClopenSet& o) const {
  return ClopenSet(trie_intersect(trie_, o.trie_));
}

ClopenSet ClopenSet::unite(const ClopenSet& o) const {
  return ClopenSet(trie_unite(trie_, o.trie_));
}

ClopenSet ClopenSet::translate(const Node& t) const {
  if (!t.fits(Alphabet::binary))
    throw Error(Errc::schema_error, "translation word must be binary");
  return ClopenSet(trie_translate(trie_, t));
}

DyadicRational ClopenSet::measure() const { return trie_measure(trie_); }

DyadicRational ClopenSet::measure_within(const Node& s) const {
  return trie_measure(trie_descend(trie_, s)) *
         DyadicRational::power_of_two(-static_cast<int>(s.size()));
}

bool ClopenSet::is_empty() const { return trie_->leaf && !trie_->full; }

bool ClopenSet::contains_cylinder(const Node& s) const {
  TriePtr t = trie_descend(trie_, s);
  return t->leaf && t->full;
}

std::size_t ClopenSet::depth() const { return trie_depth(trie_); }

std::vector<Node> ClopenSet::generators() const {
  std::vector<Node> out;
  std::vector<Letter> path;
  collect_generators(trie_, path, out);
  std::sort(out.begin(), out.end(), LengthLexLess{});
  return out;
}

bool ClopenSet::operator==(const ClopenSet& o) const {
  return trie_equal(trie_, o.trie_);
}

namespace {

// Trie of [left] x [right] over the interleaved coordinates; position p is an
// x coordinate when even and a y coordinate when odd.
TriePtr box_trie(const Node& left, const Node& right, std::size_t p) {
  std::size_t ix = (p + 1) / 2;
  std::size_t iy = p / 2;
  if (ix >= left.size() && iy >= right.size()) return trie_leaf(true);
  bool x_turn = (p % 2 == 0);
  std::size_t i = p / 2;
  const Node& side = x_turn ? left : right;
  TriePtr below = box_trie(left, right, p + 1);
  if (i < side.size())
    return side[i] == 0 ? trie_split(below, trie_leaf(false))
                        : trie_split(trie_leaf(false), below);
  return trie_split(below, below);
}

}  // namespace

ClopenPlane ClopenPlane::box(const Node& left, const Node& right) {
  if (!left.fits(Alphabet::binary) || !right.fits(Alphabet::binary))
    throw Error(Errc::schema_error, "box sides must be binary");
  return ClopenPlane(box_trie(left, right, 0));
}

ClopenPlane ClopenPlane::from_boxes(
    const std::vector<std::pair<Node, Node>>& boxes) {
  TriePtr t = trie_leaf(false);
  for (const auto& [l, r] : boxes)
    t = trie_unite(t, box_trie(l, r, 0));
  return ClopenPlane(t);
}

ClopenPlane ClopenPlane::complement() const {
  return ClopenPlane(trie_complement(trie_));
}

ClopenPlane ClopenPlane::intersect(const ClopenPlane& o) const {
  return ClopenPlane(trie_intersect(trie_, o.trie_));
}

ClopenPlane ClopenPlane::unite(const ClopenPlane& o) const {
  return ClopenPlane(trie_unite(trie_, o.trie_));
}

ClopenPlane ClopenPlane::translate(const Node& t_left,
                                   const Node& t_right) const {
  std::size_t n = std::max(t_left.size(), t_right.size());
  std::vector<Letter> interleaved(2 * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    interleaved[2 * i] = t_left.at_or_zero(i) % 2;
    interleaved[2 * i + 1] = t_right.at_or_zero(i) % 2;
  }
  return ClopenPlane(trie_translate(trie_, Node(std::move(interleaved))));
}

namespace {

TriePtr swap_rec(const TriePtr& t) {
  if (t->leaf) return t;
  TriePtr z = trie_child(t, false);
  TriePtr o = trie_child(t, true);
  TriePtr zz = swap_rec(trie_child(z, false));
  TriePtr zo = swap_rec(trie_child(z, true));
  TriePtr oz = swap_rec(trie_child(o, false));
  TriePtr oo = swap_rec(trie_child(o, true));
  return trie_split(trie_split(std::move(zz), std::move(oz)),
                    trie_split(std::move(zo), std::move(oo)));
}

}  // namespace

ClopenPlane ClopenPlane::swap_coordinates() const {
  return ClopenPlane(swap_rec(trie_));
}

DyadicRational ClopenPlane::measure() const { return trie_measure(trie_); }

bool ClopenPlane::is_empty() const { return trie_->leaf && !trie_->full; }

std::size_t ClopenPlane::depth() const { return trie_depth(trie_); }

std::vector<std::pair<Node, Node>> ClopenPlane::boxes() const {
  std::vector<Node> words;
  std::vector<Letter> path;
  collect_generators(trie_, path, words);
  std::vector<std::pair<Node, Node>> out;
  out.reserve(words.size());
  for (const Node& w : words) {
    std::vector<Letter> l, r;
    for (std::size_t i = 0; i < w.size(); ++i)
      (i % 2 == 0 ? l : r).push_back(w[i]);
    out.emplace_back(Node(std::move(l)), Node(std::move(r)));
  }
  return out;
}

bool ClopenPlane::operator==(const ClopenPlane& o) const {
  return trie_equal(trie_, o.trie_);
}

ClopenPlane symmetrize(const ClopenPlane& a) {
  return a.intersect(a.swap_coordinates());
}

namespace {

TriePtr diag_trie(std::size_t depth) {
  if (depth == 0) return trie_leaf(true);
  TriePtr below = diag_trie(depth - 1);
  return trie_split(trie_split(below, trie_leaf(false)),
                    trie_split(trie_leaf(false), below));
}

}  // namespace

ClopenPlane diagonal_band(std::size_t depth) {
  return ClopenPlane(diag_trie(depth));
}

}  // namespace treeplane
