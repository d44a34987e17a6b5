#include "treeplane/dot.hpp"

#include <map>
#include <sstream>

namespace treeplane {

std::string to_dot(const FiniteTree& t, const std::string& graph_name) {
  std::ostringstream os;
  os << "digraph " << graph_name << " {\n";
  os << "  node [shape=circle, fontsize=10];\n";
  std::map<Node, std::size_t, LengthLexLess> ids;
  t.for_each_node([&](const Node& n) {
    std::size_t id = ids.size();
    ids[n] = id;
    std::string label = n.empty() ? "()" : n.to_string();
    os << "  n" << id << " [label=\"" << label << "\"];\n";
    if (!n.empty()) os << "  n" << ids.at(n.parent()) << " -> n" << id << ";\n";
  });
  os << "}\n";
  return os.str();
}

}  // namespace treeplane
