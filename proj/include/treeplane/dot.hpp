#pragma once

#include <string>

#include "treeplane/finite_tree.hpp"

namespace treeplane {

// Graphviz rendering: one graph node per tree node, labeled by its entries.
std::string to_dot(const FiniteTree& t, const std::string& graph_name = "tree");

}  // namespace treeplane
