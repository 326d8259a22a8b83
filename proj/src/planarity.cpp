#include "starplanar/planarity.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "starplanar/error.hpp"

namespace starplanar {

int FaceTrace::face_count() const {
  int count = 0;
  for (const auto& c : components) count += c.faces;
  return count;
}

FaceTrace trace_faces(const StarGraph& g, const RotationSystem& rho) {
  if (!is_rotation_system_for(g, rho)) {
    throw std::invalid_argument("rotation system does not match the graph");
  }
  const int half_count = g.half_edge_count();
  std::vector<int> successor(half_count);
  for (const auto& rot : rho.rotations) {
    for (std::size_t i = 0; i < rot.size(); ++i) {
      successor[rot[i]] = rot[(i + 1) % rot.size()];
    }
  }

  const Components comps = connected_components(g);
  FaceTrace trace;
  trace.components.resize(comps.count());
  for (int c = 0; c < comps.count(); ++c) {
    auto& summary = trace.components[c];
    summary.vertices = static_cast<int>(comps.members[c].size());
    for (int v : comps.members[c]) summary.edges += g.degree(v);
    summary.edges /= 2;
  }

  std::vector<char> visited(half_count, 0);
  for (int start = 0; start < half_count; ++start) {
    if (visited[start]) continue;
    std::vector<int> face;
    int h = start;
    do {
      visited[h] = 1;
      face.push_back(h);
      h = successor[g.partner(h)];
    } while (h != start);
    trace.components[comps.of_vertex[g.vertex_of(start)]].faces += 1;
    trace.faces.push_back(std::move(face));
  }

  for (auto& summary : trace.components) {
    if (summary.edges == 0) summary.faces = 1;
    const int twice_genus = 2 - summary.vertices + summary.edges - summary.faces;
    if (twice_genus < 0 || twice_genus % 2 != 0) {
      throw std::logic_error("face trace violates Euler's formula");
    }
    summary.genus = twice_genus / 2;
    trace.genus += summary.genus;
  }
  return trace;
}

int max_free_vertices() { return 40; }

namespace {

// Face-count kernel for one component under an orientation mask. Bit i of
// `mask` reverses free vertex i (counted from the most significant end).
class ComponentScan {
 public:
  ComponentScan(const StarGraph& g, const std::vector<int>& members)
      : g_(g), members_(members) {
    for (int v : members_) {
      for (int h : g_.order(v)) half_edges_.push_back(h);
    }
    local_index_.assign(g_.half_edge_count(), -1);
    for (std::size_t i = 0; i < half_edges_.size(); ++i) {
      local_index_[half_edges_[i]] = static_cast<int>(i);
    }
    vertex_slot_.assign(g_.vertex_count(), -1);
    for (std::size_t i = 0; i < members_.size(); ++i) {
      vertex_slot_[members_[i]] = static_cast<int>(i);
    }
  }

  int free_count() const { return static_cast<int>(members_.size()) - 1; }

  bool reversed(std::uint64_t mask, int vertex) const {
    const int slot = vertex_slot_[vertex];
    if (slot == 0) return false;
    return (mask >> (free_count() - slot)) & 1U;
  }

  bool planar(std::uint64_t mask) const {
    const int n = static_cast<int>(half_edges_.size());
    if (n == 0) return true;
    std::vector<char> visited(n, 0);
    int faces = 0;
    for (int i = 0; i < n; ++i) {
      if (visited[i]) continue;
      ++faces;
      int h = half_edges_[i];
      while (!visited[local_index_[h]]) {
        visited[local_index_[h]] = 1;
        const int p = g_.partner(h);
        const int v = g_.vertex_of(p);
        const int d = g_.degree(v);
        const int step = reversed(mask, v) ? d - 1 : 1;
        h = g_.order(v)[(g_.position(p) + step) % d];
      }
    }
    const int vertices = static_cast<int>(members_.size());
    const int edges = n / 2;
    return vertices - edges + faces == 2;
  }

 private:
  const StarGraph& g_;
  const std::vector<int>& members_;
  std::vector<int> half_edges_;
  std::vector<int> local_index_;
  std::vector<int> vertex_slot_;
};

using MaskSearch = std::optional<std::uint64_t> (*)(const ComponentScan&);

std::optional<std::uint64_t> first_planar_mask_serial(const ComponentScan& scan) {
  const std::uint64_t total = std::uint64_t{1} << scan.free_count();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (scan.planar(mask)) return mask;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> first_planar_mask_parallel(const ComponentScan& scan) {
  const std::int64_t total = std::int64_t{1} << scan.free_count();
  constexpr std::int64_t kBlock = 1 << 12;
  for (std::int64_t block = 0; block < total; block += kBlock) {
    const std::int64_t end = std::min(total, block + kBlock);
    std::int64_t first = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for schedule(static) reduction(min : first)
    for (std::int64_t mask = block; mask < end; ++mask) {
      if (mask < first && scan.planar(static_cast<std::uint64_t>(mask))) {
        first = std::min(first, mask);
      }
    }
    if (first != std::numeric_limits<std::int64_t>::max()) {
      return static_cast<std::uint64_t>(first);
    }
  }
  return std::nullopt;
}

std::optional<EmbeddingWitness> search_embedding(const StarGraph& g, MaskSearch search) {
  const Components comps = connected_components(g);
  RotationSystem rho = forward_rotation(g);
  for (const auto& members : comps.members) {
    ComponentScan scan(g, members);
    if (scan.free_count() > max_free_vertices()) {
      throw ResourceLimitExceeded("orientation search over " +
                                  std::to_string(scan.free_count()) +
                                  " free vertices exceeds the ceiling of " +
                                  std::to_string(max_free_vertices()));
    }
    const auto mask = search(scan);
    if (!mask) return std::nullopt;
    for (int v : members) {
      if (scan.reversed(*mask, v)) {
        std::reverse(rho.rotations[v].begin(), rho.rotations[v].end());
      }
    }
  }
  EmbeddingWitness witness{rho, trace_faces(g, rho)};
  if (witness.trace.genus != 0) {
    throw std::logic_error("orientation kernel disagrees with face tracing");
  }
  return witness;
}

}  // namespace

std::optional<EmbeddingWitness> find_planar_star_embedding(const StarGraph& g) {
  return search_embedding(g, first_planar_mask_parallel);
}

namespace reference {
std::optional<EmbeddingWitness> find_planar_star_embedding(const StarGraph& g) {
  return search_embedding(g, first_planar_mask_serial);
}
}  // namespace reference

bool verify_embedding_witness(const StarGraph& g, const EmbeddingWitness& w) {
  if (!is_compatible(g, w.rotation)) return false;
  const FaceTrace retraced = trace_faces(g, w.rotation);
  if (retraced.faces != w.trace.faces || retraced.genus != w.trace.genus) return false;
  for (const auto& c : retraced.components) {
    if (c.genus != 0) return false;
  }
  return true;
}

CriterionVerdict is_star_planar_by_criterion(const StarGraph& g) {
  if (!theorem_degrees_ok(g)) {
    throw DegreeError("criterion requires every vertex to have degree 4 or 6");
  }
  CriterionVerdict verdict;
  verdict.obstruct = find_obstruct(g);
  verdict.planar = !verdict.obstruct.has_value();
  return verdict;
}

CrosscheckVerdict crosscheck(const StarGraph& g) {
  CrosscheckVerdict verdict;
  auto criterion = is_star_planar_by_criterion(g);
  verdict.criterion_planar = criterion.planar;
  verdict.obstruct = std::move(criterion.obstruct);
  verdict.witness = find_planar_star_embedding(g);
  verdict.embedding_planar = verdict.witness.has_value();
  verdict.agree = verdict.criterion_planar == verdict.embedding_planar;
  return verdict;
}

}  // namespace starplanar
