#pragma once

#include <cstdint>

namespace delp {

/// Work counters for one tree (or a sum over several).
struct SearchStats {
  std::uint64_t arguments_built = 0;             // candidate defeaters examined
  std::uint64_t nodes_expanded = 0;
  std::uint64_t nodes_pruned_alpha_beta = 0;
  std::uint64_t attack_points_considered = 0;
  std::uint64_t attack_points_skipped_shared_basis = 0;

  SearchStats& operator+=(const SearchStats& o) {
    arguments_built += o.arguments_built;
    nodes_expanded += o.nodes_expanded;
    nodes_pruned_alpha_beta += o.nodes_pruned_alpha_beta;
    attack_points_considered += o.attack_points_considered;
    attack_points_skipped_shared_basis += o.attack_points_skipped_shared_basis;
    return *this;
  }
  bool operator==(const SearchStats&) const = default;
};

}  // namespace delp
