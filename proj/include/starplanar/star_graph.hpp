#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "starplanar/cyclic_order.hpp"

namespace starplanar {

// Unvalidated, name-based form of a *-graph as read from a file or written by
// hand. `line` fields carry source locations for diagnostics (0 = unknown).
struct VertexSpec {
  std::string name;
  std::vector<std::string> order;
  int line = 0;
};

struct EdgeSpec {
  std::string a;
  std::string b;
  int line = 0;
};

struct GraphDescription {
  std::vector<VertexSpec> vertices;
  std::vector<EdgeSpec> edges;
};

enum class ViolationKind {
  bad_identifier,
  duplicate_vertex,
  duplicate_half_edge,
  unknown_half_edge,
  self_paired_half_edge,
  half_edge_in_two_edges,
  unmatched_half_edge,
};

struct Violation {
  ViolationKind kind;
  std::vector<std::string> ids;
  int line = 0;

  std::string message() const;
};

bool is_identifier(std::string_view token);

// Every invariant violation of `description`; empty means well-formed.
std::vector<Violation> validate(const GraphDescription& description);

// Immutable half-edge graph with an unoriented cyclic order at every vertex.
//
// Vertices and half-edges are indexed in lexicographic order of their names,
// so index order is the canonical iteration order. Each vertex stores its
// order in canonical form (least rotation/reversal by index).
class StarGraph {
 public:
  StarGraph() = default;

  // Throws InvalidGraph listing every violation.
  static StarGraph from_description(const GraphDescription& description);

  static StarGraph build(
      const std::vector<std::pair<std::string, std::vector<std::string>>>& vertices,
      const std::vector<std::pair<std::string, std::string>>& edges);

  int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
  int half_edge_count() const { return static_cast<int>(half_edge_names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::string& vertex_name(int v) const { return vertex_names_[v]; }
  const std::string& half_edge_name(int h) const { return half_edge_names_[h]; }
  std::optional<int> find_vertex(std::string_view name) const;
  std::optional<int> find_half_edge(std::string_view name) const;

  int vertex_of(int h) const { return vertex_of_[h]; }
  int partner(int h) const { return partner_[h]; }
  int edge_of(int h) const { return edge_of_[h]; }
  // Position of `h` in its vertex's canonical order.
  int position(int h) const { return position_[h]; }

  std::span<const int> order(int v) const { return orders_[v]; }
  CyclicOrder cyclic_order(int v) const { return CyclicOrder(orders_[v]); }
  int degree(int v) const { return static_cast<int>(orders_[v].size()); }

  // Half-edges of edge `e`, lower index first.
  std::pair<int, int> edge(int e) const { return edges_[e]; }

  // Canonical name-based description.
  GraphDescription description() const;

  friend bool operator==(const StarGraph&, const StarGraph&) = default;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<std::string> half_edge_names_;
  std::vector<int> vertex_of_;
  std::vector<int> partner_;
  std::vector<int> edge_of_;
  std::vector<int> position_;
  std::vector<std::vector<int>> orders_;
  std::vector<std::pair<int, int>> edges_;
};

bool degrees_ok_46(const StarGraph& g);

// Degree guard for theorem-level operations: 4, 6, or isolated (degree 0).
bool theorem_degrees_ok(const StarGraph& g);

// Half-edge at cyclic distance n/2 from `h`. Throws std::invalid_argument at
// an odd-degree vertex.
int opposite_half_edge(const StarGraph& g, int h);

struct Components {
  std::vector<int> of_vertex;
  std::vector<std::vector<int>> members;  // sorted vertex indices

  int count() const { return static_cast<int>(members.size()); }
};

Components connected_components(const StarGraph& g);

// Oriented cyclic order of half-edges at each vertex, indexed by vertex.
struct RotationSystem {
  std::vector<std::vector<int>> rotations;

  friend bool operator==(const RotationSystem&, const RotationSystem&) = default;
};

// Every vertex oriented as its canonical order.
RotationSystem forward_rotation(const StarGraph& g);

// Each rotation is a rotation or reversed rotation of the vertex's order.
bool is_compatible(const StarGraph& g, const RotationSystem& rho);

// Each rotation is a permutation of the vertex's half-edges.
bool is_rotation_system_for(const StarGraph& g, const RotationSystem& rho);

}  // namespace starplanar
