#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "delp/dialectics.hpp"

namespace delp {

/// Program-independent rendering of a dialectical tree.
struct TreeView {
  std::string conclusion;
  std::vector<std::string> rules;
  std::string label;  // "U" or "D"
  std::optional<std::string> attack_point;
  std::size_t pruned_children = 0;
  std::vector<TreeView> children;

  std::size_t size() const;
  bool operator==(const TreeView&) const = default;
};

TreeView to_view(const ArgumentStore& store, const DialecticalNode& node);

/// `{"tree": {...}, "stats": {...}}`; stats are omitted when null.
std::string to_json(const TreeView& tree, const SearchStats* stats = nullptr);
std::string to_dot(const TreeView& tree);

/// Inverse of to_json. Throws std::invalid_argument on schema violations.
std::pair<TreeView, std::optional<SearchStats>> tree_from_json(const std::string& text);

}  // namespace delp
