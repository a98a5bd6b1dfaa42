#include "delp/tree_export.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace delp {

using nlohmann::ordered_json;

std::size_t TreeView::size() const {
  std::size_t n = 1;
  for (const auto& c : children) n += c.size();
  return n;
}

TreeView to_view(const ArgumentStore& store, const DialecticalNode& node) {
  const KnowledgeBase& kb = store.kb();
  TreeView v;
  v.conclusion = kb.name(store[node.argument].conclusion);
  v.rules = store.rule_texts(node.argument);
  v.label = std::string(to_string(node.label));
  if (node.attack_point) v.attack_point = kb.name(*node.attack_point);
  v.pruned_children = node.pruned_children_count;
  for (const auto& c : node.children) v.children.push_back(to_view(store, c));
  return v;
}

namespace {

ordered_json node_json(const TreeView& t) {
  ordered_json j;
  j["conclusion"] = t.conclusion;
  j["rules"] = t.rules;
  j["label"] = t.label;
  j["attack_point"] = t.attack_point ? ordered_json(*t.attack_point) : ordered_json(nullptr);
  j["pruned_children"] = t.pruned_children;
  j["children"] = ordered_json::array();
  for (const auto& c : t.children) j["children"].push_back(node_json(c));
  return j;
}

TreeView node_from(const ordered_json& j) {
  TreeView t;
  try {
    t.conclusion = j.at("conclusion").get<std::string>();
    t.rules = j.at("rules").get<std::vector<std::string>>();
    t.label = j.at("label").get<std::string>();
    if (!j.at("attack_point").is_null()) t.attack_point = j.at("attack_point").get<std::string>();
    t.pruned_children = j.at("pruned_children").get<std::size_t>();
    for (const auto& c : j.at("children")) t.children.push_back(node_from(c));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad tree json: ") + e.what());
  }
  if (t.label != "U" && t.label != "D") throw std::invalid_argument("bad tree json: label must be U or D");
  return t;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

void dot_node(std::ostringstream& os, const TreeView& t, std::size_t& next) {
  const std::size_t id = next++;
  std::string label = "{";
  for (std::size_t i = 0; i < t.rules.size(); ++i) label += (i ? "; " : "") + t.rules[i];
  label += "}, " + t.conclusion;
  os << "  n" << id << " [label=\"" << escape(label) << "\\n(" << t.label << ")\", fillcolor=\""
     << (t.label == "U" ? "#d9ead3" : "#f4cccc") << "\"];\n";
  for (const auto& c : t.children) {
    const std::size_t cid = next;
    dot_node(os, c, next);
    os << "  n" << id << " -> n" << cid << " [label=\"" << escape(c.attack_point.value_or("")) << "\"];\n";
  }
  if (t.pruned_children > 0) {
    os << "  n" << id << "_cut [label=\"* " << t.pruned_children << " not expanded\", shape=plaintext];\n";
    os << "  n" << id << " -> n" << id << "_cut [style=dashed];\n";
  }
}

}  // namespace

std::string to_json(const TreeView& tree, const SearchStats* stats) {
  ordered_json j;
  j["tree"] = node_json(tree);
  if (stats != nullptr) {
    j["stats"] = {{"arguments_built", stats->arguments_built},
                  {"nodes_expanded", stats->nodes_expanded},
                  {"nodes_pruned_alpha_beta", stats->nodes_pruned_alpha_beta},
                  {"attack_points_considered", stats->attack_points_considered},
                  {"attack_points_skipped_shared_basis", stats->attack_points_skipped_shared_basis}};
  }
  return j.dump(2) + "\n";
}

std::string to_dot(const TreeView& tree) {
  std::ostringstream os;
  os << "digraph dialectical_tree {\n";
  os << "  node [shape=box, style=filled, fontname=\"Helvetica\"];\n";
  std::size_t next = 0;
  dot_node(os, tree, next);
  os << "}\n";
  return os.str();
}

std::pair<TreeView, std::optional<SearchStats>> tree_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad tree json: ") + e.what());
  }
  if (!j.contains("tree")) throw std::invalid_argument("bad tree json: missing \"tree\"");
  std::optional<SearchStats> stats;
  if (j.contains("stats")) {
    const auto& s = j["stats"];
    try {
      stats = SearchStats{s.at("arguments_built").get<std::uint64_t>(), s.at("nodes_expanded").get<std::uint64_t>(),
                          s.at("nodes_pruned_alpha_beta").get<std::uint64_t>(),
                          s.at("attack_points_considered").get<std::uint64_t>(),
                          s.at("attack_points_skipped_shared_basis").get<std::uint64_t>()};
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("bad tree json: ") + e.what());
    }
  }
  return {node_from(j["tree"]), stats};
}

}  // namespace delp
