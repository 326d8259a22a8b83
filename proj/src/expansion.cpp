#include "starplanar/expansion.hpp"

#include <algorithm>
#include <iostream>
#include <set>
#include <stdexcept>

#include "starplanar/error.hpp"
#include "starplanar/planarity.hpp"

namespace starplanar {

namespace {

class NamePool {
 public:
  explicit NamePool(const StarGraph& g) {
    for (int v = 0; v < g.vertex_count(); ++v) used_.insert(g.vertex_name(v));
    for (int h = 0; h < g.half_edge_count(); ++h) used_.insert(g.half_edge_name(h));
  }

  std::string fresh(std::string base) {
    while (used_.contains(base)) base += "_";
    used_.insert(base);
    return base;
  }

 private:
  std::set<std::string> used_;
};

}  // namespace

Expansion expand(const StarGraph& g, int variant) {
  if (variant != 1 && variant != 2) {
    throw std::invalid_argument("expansion variant must be 1 or 2");
  }
  if (!theorem_degrees_ok(g)) {
    throw DegreeError("expansion requires every vertex to have degree 4 or 6");
  }
  const int offset = variant == 1 ? 0 : 1;
  NamePool names(g);
  GraphDescription out;
  ExpansionMap map;
  map.variant = variant;

  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto order = g.order(v);
    if (order.size() != 6) {
      VertexSpec spec{g.vertex_name(v), {}, 0};
      for (int h : order) spec.order.push_back(g.half_edge_name(h));
      out.vertices.push_back(std::move(spec));
      continue;
    }
    ExpandedVertex tri;
    tri.original = g.vertex_name(v);
    for (int k = 0; k < 3; ++k) {
      tri.corners[k] = names.fresh(tri.original + ".T" + std::to_string(k));
      tri.prev[k] = names.fresh(tri.corners[k] + ".p");
      tri.next[k] = names.fresh(tri.corners[k] + ".n");
      tri.external[k] = {g.half_edge_name(order[(2 * k + offset) % 6]),
                         g.half_edge_name(order[(2 * k + 1 + offset) % 6])};
    }
    for (int k = 0; k < 3; ++k) {
      out.vertices.push_back({tri.corners[k],
                              {tri.prev[k], tri.external[k][0], tri.external[k][1],
                               tri.next[k]},
                              0});
      out.edges.push_back({tri.next[k], tri.prev[(k + 1) % 3], 0});
    }
    map.triangles.push_back(std::move(tri));
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.edge(e);
    out.edges.push_back({g.half_edge_name(a), g.half_edge_name(b), 0});
  }
  return {StarGraph::from_description(out), std::move(map)};
}

std::vector<TriangleIndices> resolve(const StarGraph& g, const StarGraph& expanded,
                                     const ExpansionMap& map) {
  auto vertex = [](const StarGraph& graph, const std::string& name) {
    auto v = graph.find_vertex(name);
    if (!v) throw std::invalid_argument("expansion map names unknown vertex " + name);
    return *v;
  };
  auto half_edge = [&](const std::string& name) {
    auto h = expanded.find_half_edge(name);
    if (!h) throw std::invalid_argument("expansion map names unknown half-edge " + name);
    return *h;
  };
  std::vector<TriangleIndices> out;
  for (const auto& tri : map.triangles) {
    TriangleIndices t;
    t.original = vertex(g, tri.original);
    for (int k = 0; k < 3; ++k) {
      t.corners[k] = vertex(expanded, tri.corners[k]);
      t.prev[k] = half_edge(tri.prev[k]);
      t.next[k] = half_edge(tri.next[k]);
      t.external[k] = {half_edge(tri.external[k][0]), half_edge(tri.external[k][1])};
    }
    out.push_back(t);
  }
  return out;
}

namespace {

int successor(const std::vector<int>& rot, int h) {
  auto it = std::find(rot.begin(), rot.end(), h);
  ++it;
  return it == rot.end() ? rot.front() : *it;
}

// Rotation after contracting the edge (a_half at rot_a, b_half at rot_b).
std::vector<int> splice(const std::vector<int>& rot_a, int a_half,
                        const std::vector<int>& rot_b, int b_half) {
  std::vector<int> merged;
  for (const auto* part : {&rot_a, &rot_b}) {
    const int cut = part == &rot_a ? a_half : b_half;
    const auto pos = std::find(part->begin(), part->end(), cut) - part->begin();
    const auto n = static_cast<std::ptrdiff_t>(part->size());
    for (std::ptrdiff_t i = 1; i < n; ++i) merged.push_back((*part)[(pos + i) % n]);
  }
  return merged;
}

class Contractor {
 public:
  Contractor(const StarGraph& g, const StarGraph& expanded, const ExpansionMap& map,
             const RotationSystem& rho, const ContractOptions& options)
      : g_(g),
        expanded_(expanded),
        triangles_(resolve(g, expanded, map)),
        rot_(rho),
        options_(options) {}

  RotationSystem run() {
    const int bound = options_.max_flips >= 0
                          ? options_.max_flips
                          : 4 * static_cast<int>(triangles_.size()) + 16;
    int flips = 0;
    for (int mixed = mixed_count(); mixed > 0;) {
      if (++flips > bound) {
        throw ContractionFailed("flip bound of " + std::to_string(bound) +
                                " exceeded with " + std::to_string(mixed) +
                                " mixed triangles left");
      }
      flip_first_mixed();
      const int now = mixed_count();
      if (now >= mixed) {
        throw ContractionFailed("flip did not reduce the number of mixed triangles");
      }
      if (trace_faces(expanded_, rot_).genus != 0) {
        throw ContractionFailed("flip broke planarity of the expansion");
      }
      mixed = now;
    }
    RotationSystem out = contract();
    if (!is_compatible(g_, out)) {
      throw ContractionFailed("contracted rotation is not compatible with the *-structure");
    }
    if (trace_faces(g_, out).genus != 0) {
      throw ContractionFailed("contracted rotation is not planar");
    }
    return out;
  }

 private:
  // True when corner k's external pair lies to the left of the directed
  // triangle prev -> next.
  bool left_side(const TriangleIndices& t, int k) const {
    return successor(rot_.rotations[t.corners[k]], t.prev[k]) == t.next[k];
  }

  bool mixed(const TriangleIndices& t) const {
    const bool s0 = left_side(t, 0);
    return left_side(t, 1) != s0 || left_side(t, 2) != s0;
  }

  int mixed_count() const {
    return static_cast<int>(std::count_if(triangles_.begin(), triangles_.end(),
                                          [&](const auto& t) { return mixed(t); }));
  }

  void flip_first_mixed() {
    const auto& t = *std::find_if(triangles_.begin(), triangles_.end(),
                                  [&](const auto& tri) { return mixed(tri); });
    const bool sides[3] = {left_side(t, 0), left_side(t, 1), left_side(t, 2)};
    int k = 0;
    while (sides[k] == sides[(k + 1) % 3] || sides[k] == sides[(k + 2) % 3]) ++k;

    std::vector<char> in_block(expanded_.vertex_count(), 0);
    std::vector<int> stack;
    auto is_corner = [&](int v) {
      return v == t.corners[0] || v == t.corners[1] || v == t.corners[2];
    };
    for (int x : t.external[k]) {
      const int p = expanded_.partner(x);
      const int w = expanded_.vertex_of(p);
      if (w == t.corners[k] && (p == t.external[k][0] || p == t.external[k][1])) continue;
      if (is_corner(w)) {
        throw ContractionFailed("external pair of a minority corner reaches the triangle");
      }
      if (!in_block[w]) {
        in_block[w] = 1;
        stack.push_back(w);
      }
    }
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int h : expanded_.order(v)) {
        const int p = expanded_.partner(h);
        const int w = expanded_.vertex_of(p);
        if (is_corner(w)) {
          if (w != t.corners[k] || (p != t.external[k][0] && p != t.external[k][1])) {
            throw ContractionFailed("block at a minority corner touches the triangle elsewhere");
          }
          continue;
        }
        if (!in_block[w]) {
          in_block[w] = 1;
          stack.push_back(w);
        }
      }
    }
    for (int v = 0; v < expanded_.vertex_count(); ++v) {
      if (in_block[v]) std::reverse(rot_.rotations[v].begin(), rot_.rotations[v].end());
    }
    auto& corner = rot_.rotations[t.corners[k]];
    std::reverse(corner.begin(), corner.end());
  }

  int to_original(int h) const { return *g_.find_half_edge(expanded_.half_edge_name(h)); }

  RotationSystem contract() const {
    RotationSystem out;
    out.rotations.resize(g_.vertex_count());
    std::vector<char> done(g_.vertex_count(), 0);
    for (const auto& t : triangles_) {
      auto merged = splice(rot_.rotations[t.corners[0]], t.next[0],
                           rot_.rotations[t.corners[1]], t.prev[1]);
      merged = splice(merged, t.next[1], rot_.rotations[t.corners[2]], t.prev[2]);
      std::erase(merged, t.next[2]);
      std::erase(merged, t.prev[0]);
      for (int h : merged) out.rotations[t.original].push_back(to_original(h));
      done[t.original] = 1;
    }
    for (int v = 0; v < g_.vertex_count(); ++v) {
      if (done[v]) continue;
      const auto w = expanded_.find_vertex(g_.vertex_name(v));
      if (!w) throw ContractionFailed("vertex missing from expansion: " + g_.vertex_name(v));
      for (int h : rot_.rotations[*w]) out.rotations[v].push_back(to_original(h));
    }
    return out;
  }

  const StarGraph& g_;
  const StarGraph& expanded_;
  std::vector<TriangleIndices> triangles_;
  RotationSystem rot_;
  ContractOptions options_;
};

}  // namespace

RotationSystem contract_planar_rotation(const StarGraph& g, const StarGraph& expanded,
                                        const ExpansionMap& map,
                                        const RotationSystem& rho,
                                        const ContractOptions& options) {
  if (!is_compatible(expanded, rho) || trace_faces(expanded, rho).genus != 0) {
    throw NotPlanar("input not planar: rotation is not a compatible genus-0 embedding");
  }
  try {
    return Contractor(g, expanded, map, rho, options).run();
  } catch (const ContractionFailed& e) {
    if (!options.fallback) throw;
    std::cerr << "warning: constructive contraction failed (" << e.what()
              << "); searching a planar rotation directly\n";
    auto witness = find_planar_star_embedding(g);
    if (!witness) throw;
    return witness->rotation;
  }
}

}  // namespace starplanar
