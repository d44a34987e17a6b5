#include "treeplane/finite_tree.hpp"

#include <algorithm>
#include <deque>

#include "treeplane/error.hpp"

namespace treeplane {

FiniteTree FiniteTree::from_nodes(Alphabet a, const std::vector<Node>& nodes) {
  FiniteTree t(a);
  std::set<Node, LengthLexLess> listed(nodes.begin(), nodes.end());
  for (const Node& n : nodes) {
    if (!n.fits(a))
      throw Error(Errc::schema_error,
                  "node " + n.to_string() + " does not fit the alphabet");
    if (!n.empty() && listed.find(n.parent()) == listed.end())
      throw Error(Errc::schema_error, "node set is not prefix-closed at " +
                                          n.to_string());
    t.insert_branch(n);
  }
  return t;
}

std::uint32_t FiniteTree::find(const Node& n) const {
  if (entries_.empty()) return npos;
  std::uint32_t cur = 0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const Entry& e = entries_[cur];
    std::uint32_t next = npos;
    // children sorted by letter
    auto it = std::lower_bound(e.children.begin(), e.children.end(), n[i],
                               [this](std::uint32_t id, Letter a) {
                                 return entries_[id].letter < a;
                               });
    if (it != e.children.end() && entries_[*it].letter == n[i]) next = *it;
    if (next == npos) return npos;
    cur = next;
  }
  return cur;
}

bool FiniteTree::contains(const Node& n) const { return find(n) != npos; }

void FiniteTree::insert_branch(const Node& n) {
  if (entries_.empty()) entries_.push_back(Entry{});
  std::uint32_t cur = 0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    Entry& e = entries_[cur];
    auto it = std::lower_bound(e.children.begin(), e.children.end(), n[i],
                               [this](std::uint32_t id, Letter a) {
                                 return entries_[id].letter < a;
                               });
    if (it != e.children.end() && entries_[*it].letter == n[i]) {
      cur = *it;
      continue;
    }
    std::uint32_t fresh = static_cast<std::uint32_t>(entries_.size());
    std::size_t pos = static_cast<std::size_t>(it - e.children.begin());
    Entry child;
    child.letter = n[i];
    child.parent = cur;
    child.depth = entries_[cur].depth + 1;
    entries_.push_back(child);
    entries_[cur].children.insert(entries_[cur].children.begin() + pos, fresh);
    cur = fresh;
  }
}

Node FiniteTree::materialize(std::uint32_t id) const {
  std::vector<Letter> v(entries_[id].depth);
  std::uint32_t cur = id;
  for (std::size_t i = v.size(); i > 0; --i) {
    v[i - 1] = entries_[cur].letter;
    cur = entries_[cur].parent;
  }
  return Node(std::move(v));
}

std::vector<Letter> FiniteTree::successor_letters(const Node& n) const {
  std::uint32_t id = find(n);
  if (id == npos)
    throw Error(Errc::node_not_in_tree, n.to_string());
  std::vector<Letter> out;
  out.reserve(entries_[id].children.size());
  for (std::uint32_t c : entries_[id].children) out.push_back(entries_[c].letter);
  return out;
}

std::size_t FiniteTree::successor_count(const Node& n) const {
  std::uint32_t id = find(n);
  if (id == npos)
    throw Error(Errc::node_not_in_tree, n.to_string());
  return entries_[id].children.size();
}

void FiniteTree::for_each_node(const std::function<void(const Node&)>& f) const {
  if (entries_.empty()) return;
  std::deque<std::uint32_t> queue{0};
  while (!queue.empty()) {
    std::uint32_t id = queue.front();
    queue.pop_front();
    f(materialize(id));
    for (std::uint32_t c : entries_[id].children) queue.push_back(c);
  }
}

std::vector<Node> FiniteTree::all_nodes() const {
  std::vector<Node> out;
  out.reserve(entries_.size());
  for_each_node([&](const Node& n) { out.push_back(n); });
  return out;
}

std::vector<Node> FiniteTree::nodes_at(std::size_t len) const {
  std::vector<Node> out;
  TreeWalk w(*this);
  for (std::uint32_t id : w.level_ids(len)) out.push_back(materialize(id));
  return out;
}

std::vector<Node> FiniteTree::tips() const {
  std::vector<Node> out;
  if (entries_.empty()) return out;
  std::deque<std::uint32_t> queue{0};
  while (!queue.empty()) {
    std::uint32_t id = queue.front();
    queue.pop_front();
    if (entries_[id].children.empty()) out.push_back(materialize(id));
    for (std::uint32_t c : entries_[id].children) queue.push_back(c);
  }
  return out;
}

std::size_t FiniteTree::height() const {
  std::size_t h = 0;
  for (const Entry& e : entries_) h = std::max<std::size_t>(h, e.depth);
  return h;
}

bool FiniteTree::is_subtree_of(const FiniteTree& other) const {
  if (entries_.empty()) return true;
  if (other.entries_.empty()) return false;
  // co-walk from the roots
  std::deque<std::pair<std::uint32_t, std::uint32_t>> queue{{0u, 0u}};
  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    for (std::uint32_t ca : entries_[a].children) {
      Letter x = entries_[ca].letter;
      const auto& bc = other.entries_[b].children;
      auto it = std::lower_bound(bc.begin(), bc.end(), x,
                                 [&other](std::uint32_t id, Letter l) {
                                   return other.entries_[id].letter < l;
                                 });
      if (it == bc.end() || other.entries_[*it].letter != x) return false;
      queue.push_back({ca, *it});
    }
  }
  return true;
}

bool FiniteTree::operator==(const FiniteTree& o) const {
  return alphabet_ == o.alphabet_ && node_count() == o.node_count() &&
         is_subtree_of(o);
}

std::vector<std::uint32_t> TreeWalk::level_ids(std::size_t depth) const {
  std::vector<std::uint32_t> cur;
  if (tree.entries_.empty()) return cur;
  cur.push_back(0);
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t id : cur)
      for (std::uint32_t c : tree.entries_[id].children) next.push_back(c);
    cur = std::move(next);
  }
  return cur;
}

std::vector<Letter> TreeWalk::child_letters(std::uint32_t id) const {
  std::vector<Letter> out;
  for (std::uint32_t c : tree.entries_[id].children)
    out.push_back(tree.entries_[c].letter);
  return out;
}

std::uint32_t TreeWalk::child(std::uint32_t id, Letter a) const {
  const auto& ch = tree.entries_[id].children;
  auto it = std::lower_bound(ch.begin(), ch.end(), a,
                             [this](std::uint32_t c, Letter l) {
                               return tree.entries_[c].letter < l;
                             });
  if (it == ch.end() || tree.entries_[*it].letter != a)
    return 0xffffffffu;
  return *it;
}

std::vector<Letter> successors(const FiniteTree& t, const Node& s) {
  return t.successor_letters(s);
}

std::vector<Node> split_nodes(const FiniteTree& t) {
  std::vector<Node> out;
  t.for_each_node([&](const Node& n) {
    if (t.successor_count(n) >= 2) out.push_back(n);
  });
  return out;
}

std::vector<Node> immediate_splitting_successors(const FiniteTree& t,
                                                 const Node& s) {
  if (!t.contains(s))
    throw Error(Errc::node_not_in_tree, s.to_string());
  std::vector<Node> out;
  // depth-first from s; stop descending at the first splitting node
  std::vector<Node> stack{s};
  while (!stack.empty()) {
    Node cur = stack.back();
    stack.pop_back();
    auto succ = t.successor_letters(cur);
    if (succ.size() >= 2) {
      out.push_back(cur);
      continue;
    }
    for (Letter a : succ) stack.push_back(cur.child(a));
  }
  std::sort(out.begin(), out.end(), LengthLexLess{});
  return out;
}

Node stem(const FiniteTree& t, std::size_t fuel) {
  if (t.empty())
    throw Error(Errc::no_split_within_fuel, "empty tree");
  Node cur;
  for (std::size_t step = 0; step <= fuel; ++step) {
    auto succ = t.successor_letters(cur);
    if (succ.size() >= 2) return cur;
    if (succ.empty())
      throw Error(Errc::no_split_within_fuel,
                  "tree dies at " + cur.to_string() + " without splitting");
    if (step == fuel) break;
    cur = cur.child(succ.front());
  }
  throw Error(Errc::no_split_within_fuel,
              "chain continues past fuel " + std::to_string(fuel));
}

std::vector<Node> tips(const FiniteTree& t) { return t.tips(); }

std::size_t height(const FiniteTree& t) { return t.height(); }

std::size_t node_rank(const FiniteTree& t, const Node& s) {
  if (!t.contains(s))
    throw Error(Errc::node_not_in_tree, s.to_string());
  // rank(s) = length of the longest chain strictly above s
  std::size_t best = 0;
  std::vector<std::pair<Node, std::size_t>> stack{{s, 0}};
  while (!stack.empty()) {
    auto [cur, d] = stack.back();
    stack.pop_back();
    best = std::max(best, d);
    for (Letter a : t.successor_letters(cur)) stack.push_back({cur.child(a), d + 1});
  }
  return best;
}

}  // namespace treeplane
