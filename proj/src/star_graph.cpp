#include "starplanar/star_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "starplanar/error.hpp"

namespace starplanar {

namespace {

std::string join(const std::vector<std::string>& ids) {
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += ", ";
    out += id;
  }
  return out;
}

}  // namespace

std::string Violation::message() const {
  std::string text;
  switch (kind) {
    case ViolationKind::bad_identifier:
      text = "bad identifier " + join(ids);
      break;
    case ViolationKind::duplicate_vertex:
      text = "duplicate vertex " + join(ids);
      break;
    case ViolationKind::duplicate_half_edge:
      text = "duplicate half-edge " + join(ids);
      break;
    case ViolationKind::unknown_half_edge:
      text = "unknown half-edge " + join(ids);
      break;
    case ViolationKind::self_paired_half_edge:
      text = "half-edge paired with itself " + join(ids);
      break;
    case ViolationKind::half_edge_in_two_edges:
      text = "half-edge in two edges " + join(ids);
      break;
    case ViolationKind::unmatched_half_edge:
      text = join(ids) + " unmatched";
      break;
  }
  if (line > 0) text = "line " + std::to_string(line) + ": " + text;
  return text;
}

bool is_identifier(std::string_view token) {
  if (token.empty()) return false;
  return std::all_of(token.begin(), token.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_' || c == '.' || c == '-';
  });
}

std::vector<Violation> validate(const GraphDescription& description) {
  std::vector<Violation> violations;
  std::set<std::string> vertex_names;
  // half-edge -> declaring line
  std::map<std::string, int> declared;
  for (const auto& vertex : description.vertices) {
    if (!is_identifier(vertex.name)) {
      violations.push_back({ViolationKind::bad_identifier, {vertex.name}, vertex.line});
    }
    if (!vertex_names.insert(vertex.name).second) {
      violations.push_back({ViolationKind::duplicate_vertex, {vertex.name}, vertex.line});
    }
    for (const auto& h : vertex.order) {
      if (!is_identifier(h)) {
        violations.push_back({ViolationKind::bad_identifier, {h}, vertex.line});
      }
      if (!declared.emplace(h, vertex.line).second) {
        violations.push_back({ViolationKind::duplicate_half_edge, {h}, vertex.line});
      }
    }
  }

  std::set<std::string> matched;
  for (const auto& edge : description.edges) {
    if (edge.a == edge.b) {
      violations.push_back({ViolationKind::self_paired_half_edge, {edge.a}, edge.line});
      continue;
    }
    for (const auto* h : {&edge.a, &edge.b}) {
      if (!declared.contains(*h)) {
        violations.push_back({ViolationKind::unknown_half_edge, {*h}, edge.line});
      } else if (!matched.insert(*h).second) {
        violations.push_back({ViolationKind::half_edge_in_two_edges, {*h}, edge.line});
      }
    }
  }

  std::vector<std::string> unmatched;
  int first_line = 0;
  for (const auto& [h, line] : declared) {
    if (!matched.contains(h)) {
      if (unmatched.empty()) first_line = line;
      unmatched.push_back(h);
    }
  }
  if (!unmatched.empty()) {
    violations.push_back({ViolationKind::unmatched_half_edge, unmatched, first_line});
  }
  return violations;
}

StarGraph StarGraph::from_description(const GraphDescription& description) {
  if (auto violations = validate(description); !violations.empty()) {
    std::string text;
    for (const auto& v : violations) {
      if (!text.empty()) text += "; ";
      text += v.message();
    }
    throw InvalidGraph(text);
  }

  StarGraph g;
  for (const auto& vertex : description.vertices) {
    g.vertex_names_.push_back(vertex.name);
    for (const auto& h : vertex.order) g.half_edge_names_.push_back(h);
  }
  std::sort(g.vertex_names_.begin(), g.vertex_names_.end());
  std::sort(g.half_edge_names_.begin(), g.half_edge_names_.end());

  const auto half_count = g.half_edge_names_.size();
  g.vertex_of_.assign(half_count, -1);
  g.partner_.assign(half_count, -1);
  g.edge_of_.assign(half_count, -1);
  g.position_.assign(half_count, -1);
  g.orders_.resize(g.vertex_names_.size());

  for (const auto& vertex : description.vertices) {
    const int v = *g.find_vertex(vertex.name);
    std::vector<int> order;
    for (const auto& h : vertex.order) order.push_back(*g.find_half_edge(h));
    g.orders_[v] = canonical_unoriented(std::span<const int>(order));
    for (std::size_t i = 0; i < g.orders_[v].size(); ++i) {
      g.vertex_of_[g.orders_[v][i]] = v;
      g.position_[g.orders_[v][i]] = static_cast<int>(i);
    }
  }

  for (const auto& edge : description.edges) {
    const int a = *g.find_half_edge(edge.a);
    const int b = *g.find_half_edge(edge.b);
    g.partner_[a] = b;
    g.partner_[b] = a;
    g.edges_.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  for (std::size_t e = 0; e < g.edges_.size(); ++e) {
    g.edge_of_[g.edges_[e].first] = static_cast<int>(e);
    g.edge_of_[g.edges_[e].second] = static_cast<int>(e);
  }
  return g;
}

StarGraph StarGraph::build(
    const std::vector<std::pair<std::string, std::vector<std::string>>>& vertices,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  GraphDescription description;
  for (const auto& [name, order] : vertices) description.vertices.push_back({name, order, 0});
  for (const auto& [a, b] : edges) description.edges.push_back({a, b, 0});
  return from_description(description);
}

std::optional<int> StarGraph::find_vertex(std::string_view name) const {
  auto it = std::lower_bound(vertex_names_.begin(), vertex_names_.end(), name);
  if (it == vertex_names_.end() || *it != name) return std::nullopt;
  return static_cast<int>(it - vertex_names_.begin());
}

std::optional<int> StarGraph::find_half_edge(std::string_view name) const {
  auto it = std::lower_bound(half_edge_names_.begin(), half_edge_names_.end(), name);
  if (it == half_edge_names_.end() || *it != name) return std::nullopt;
  return static_cast<int>(it - half_edge_names_.begin());
}

GraphDescription StarGraph::description() const {
  GraphDescription d;
  for (int v = 0; v < vertex_count(); ++v) {
    VertexSpec spec{vertex_names_[v], {}, 0};
    for (int h : orders_[v]) spec.order.push_back(half_edge_names_[h]);
    d.vertices.push_back(std::move(spec));
  }
  for (const auto& [a, b] : edges_) {
    d.edges.push_back({half_edge_names_[a], half_edge_names_[b], 0});
  }
  return d;
}

bool degrees_ok_46(const StarGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 4 && g.degree(v) != 6) return false;
  }
  return true;
}

bool theorem_degrees_ok(const StarGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int d = g.degree(v);
    if (d != 0 && d != 4 && d != 6) return false;
  }
  return true;
}

int opposite_half_edge(const StarGraph& g, int h) {
  const int v = g.vertex_of(h);
  const int n = g.degree(v);
  if (n % 2 != 0) {
    throw std::invalid_argument("no opposite defined at odd-degree vertex " +
                                g.vertex_name(v));
  }
  return g.order(v)[(g.position(h) + n / 2) % n];
}

Components connected_components(const StarGraph& g) {
  Components c;
  c.of_vertex.assign(g.vertex_count(), -1);
  for (int start = 0; start < g.vertex_count(); ++start) {
    if (c.of_vertex[start] >= 0) continue;
    const int id = c.count();
    c.members.emplace_back();
    std::vector<int> stack{start};
    c.of_vertex[start] = id;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      c.members[id].push_back(v);
      for (int h : g.order(v)) {
        const int w = g.vertex_of(g.partner(h));
        if (c.of_vertex[w] < 0) {
          c.of_vertex[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(c.members[id].begin(), c.members[id].end());
  }
  return c;
}

RotationSystem forward_rotation(const StarGraph& g) {
  RotationSystem rho;
  for (int v = 0; v < g.vertex_count(); ++v) {
    rho.rotations.emplace_back(g.order(v).begin(), g.order(v).end());
  }
  return rho;
}

bool is_rotation_system_for(const StarGraph& g, const RotationSystem& rho) {
  if (static_cast<int>(rho.rotations.size()) != g.vertex_count()) return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto expected = std::vector<int>(g.order(v).begin(), g.order(v).end());
    auto actual = rho.rotations[v];
    std::sort(expected.begin(), expected.end());
    std::sort(actual.begin(), actual.end());
    if (expected != actual) return false;
  }
  return true;
}

bool is_compatible(const StarGraph& g, const RotationSystem& rho) {
  if (!is_rotation_system_for(g, rho)) return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& rot = rho.rotations[v];
    if (canonical_unoriented(std::span<const int>(rot)) !=
        std::vector<int>(g.order(v).begin(), g.order(v).end())) {
      return false;
    }
  }
  return true;
}

}  // namespace starplanar
