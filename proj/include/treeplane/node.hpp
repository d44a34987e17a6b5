#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace treeplane {

// Letters of tree nodes. The binary alphabet restricts letters to {0,1};
// the omega alphabet allows any natural number.
using Letter = std::uint32_t;

enum class Alphabet { binary, omega };

inline bool letter_fits(Alphabet a, Letter x) {
  return a == Alphabet::omega || x <= 1;
}

std::string to_string(Alphabet a);
Alphabet alphabet_from_string(const std::string& s);

// A finite sequence of letters. Nodes are the elements of trees; the empty
// node is the root of every nonempty tree.
class Node {
 public:
  Node() = default;
  explicit Node(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Node(std::initializer_list<Letter> letters) : letters_(letters) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }

  // Entry with implicit zero tail: at(i) = letters[i] for i < size, else 0.
  Letter at_or_zero(std::size_t i) const {
    return i < letters_.size() ? letters_[i] : 0;
  }

  Node prefix(std::size_t n) const;
  Node parent() const;  // throws on the empty node
  Node child(Letter a) const;
  Node concat(const Node& tail) const;

  bool is_prefix_of(const Node& other) const;
  bool fits(Alphabet a) const;

  // Longest common prefix.
  Node meet(const Node& other) const;

  // Pads with zeros up to length n (no-op if already at least that long).
  Node pad_zeros(std::size_t n) const;

  bool operator==(const Node& o) const { return letters_ == o.letters_; }
  bool operator!=(const Node& o) const { return letters_ != o.letters_; }

  std::string to_string() const;

 private:
  std::vector<Letter> letters_;
};

inline bool incomparable(const Node& a, const Node& b) {
  return !a.is_prefix_of(b) && !b.is_prefix_of(a);
}

// Length-lexicographic order: shorter first, then lexicographic. This is the
// canonical order used everywhere a node set is serialized or enumerated.
struct LengthLexLess {
  bool operator()(const Node& a, const Node& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.letters() < b.letters();
  }
};

}  // namespace treeplane
