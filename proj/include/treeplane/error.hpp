#pragma once

#include <stdexcept>
#include <string>

namespace treeplane {

// Failure codes shared across the library. Each code corresponds to one
// documented error condition of an operation.
enum class Errc {
  node_not_in_tree,
  no_split_within_fuel,
  not_silver,
  not_miller_like,
  not_laver_like,
  not_up_miller_like,
  not_evenly_cut,
  zero_point,
  oracle_breach,
  refiner_breach,
  level_overflow,
  fuel_exhausted,
  stage_deficit_too_large,
  density_search_exhausted,
  depth_too_shallow,
  schema_error,
};

std::string to_string(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(to_string(code) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace treeplane
