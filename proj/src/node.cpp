#include "treeplane/node.hpp"

#include <algorithm>
#include <sstream>

#include "treeplane/error.hpp"

namespace treeplane {

std::string to_string(Alphabet a) {
  return a == Alphabet::binary ? "binary" : "omega";
}

Alphabet alphabet_from_string(const std::string& s) {
  if (s == "binary") return Alphabet::binary;
  if (s == "omega") return Alphabet::omega;
  throw Error(Errc::schema_error, "unknown alphabet '" + s + "'");
}

Node Node::prefix(std::size_t n) const {
  if (n >= letters_.size()) return *this;
  return Node(std::vector<Letter>(letters_.begin(), letters_.begin() + n));
}

Node Node::parent() const {
  if (letters_.empty())
    throw Error(Errc::node_not_in_tree, "empty node has no parent");
  return prefix(letters_.size() - 1);
}

Node Node::child(Letter a) const {
  std::vector<Letter> v = letters_;
  v.push_back(a);
  return Node(std::move(v));
}

Node Node::concat(const Node& tail) const {
  std::vector<Letter> v = letters_;
  v.insert(v.end(), tail.letters_.begin(), tail.letters_.end());
  return Node(std::move(v));
}

bool Node::is_prefix_of(const Node& other) const {
  if (letters_.size() > other.letters_.size()) return false;
  return std::equal(letters_.begin(), letters_.end(), other.letters_.begin());
}

bool Node::fits(Alphabet a) const {
  for (Letter x : letters_)
    if (!letter_fits(a, x)) return false;
  return true;
}

Node Node::meet(const Node& other) const {
  std::size_t n = 0;
  std::size_t cap = std::min(letters_.size(), other.letters_.size());
  while (n < cap && letters_[n] == other.letters_[n]) ++n;
  return prefix(n);
}

Node Node::pad_zeros(std::size_t n) const {
  if (letters_.size() >= n) return *this;
  std::vector<Letter> v = letters_;
  v.resize(n, 0);
  return Node(std::move(v));
}

std::string Node::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << ',';
    os << letters_[i];
  }
  os << ')';
  return os.str();
}

std::string to_string(Errc c) {
  switch (c) {
    case Errc::node_not_in_tree: return "NodeNotInTree";
    case Errc::no_split_within_fuel: return "NoSplitWithinFuel";
    case Errc::not_silver: return "NotSilver";
    case Errc::not_miller_like: return "NotMillerLike";
    case Errc::not_laver_like: return "NotLaverLike";
    case Errc::not_up_miller_like: return "NotUPMillerLike";
    case Errc::not_evenly_cut: return "NotEvenlyCut";
    case Errc::zero_point: return "ZeroPoint";
    case Errc::oracle_breach: return "OracleBreach";
    case Errc::refiner_breach: return "RefinerBreach";
    case Errc::level_overflow: return "LevelOverflow";
    case Errc::fuel_exhausted: return "ConvergenceFuelExhausted";
    case Errc::stage_deficit_too_large: return "StageDeficitTooLarge";
    case Errc::density_search_exhausted: return "DensitySearchExhausted";
    case Errc::depth_too_shallow: return "DepthTooShallow";
    case Errc::schema_error: return "SchemaError";
  }
  return "UnknownError";
}

}  // namespace treeplane
