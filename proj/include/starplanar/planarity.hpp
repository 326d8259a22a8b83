#pragma once

#include <optional>
#include <vector>

#include "starplanar/cycles.hpp"
#include "starplanar/star_graph.hpp"

namespace starplanar {

struct ComponentEuler {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int genus = 0;
};

// Faces of the orientable embedding given by a rotation system. A face is the
// cyclic list of half-edges it departs through; leaving via h arrives at
// partner(h), and the walk departs next through the rotation successor of
// partner(h).
struct FaceTrace {
  std::vector<std::vector<int>> faces;
  std::vector<ComponentEuler> components;  // indexed like connected_components()
  int genus = 0;                           // summed over components

  // Traced faces plus one face per edgeless component.
  int face_count() const;
};

// Throws std::invalid_argument unless `rho` is a rotation system for `g`.
FaceTrace trace_faces(const StarGraph& g, const RotationSystem& rho);

struct EmbeddingWitness {
  RotationSystem rotation;
  FaceTrace trace;
};

// Exhaustive search over orientations of each vertex's cyclic order, with the
// least vertex of each component pinned forward. Returns the first genus-0
// assignment in canonical order: per component, free vertices in index order
// read as a binary number with "reversed" = 1 and the earliest vertex most
// significant.
//
// Throws ResourceLimitExceeded when a component has more than
// `max_free_vertices()` unpinned vertices.
std::optional<EmbeddingWitness> find_planar_star_embedding(const StarGraph& g);

namespace reference {
// Serial form of the orientation scan; same result as the parallel kernel.
std::optional<EmbeddingWitness> find_planar_star_embedding(const StarGraph& g);
}  // namespace reference

int max_free_vertices();

// Rotation and trace are consistent, compatible and genus 0.
bool verify_embedding_witness(const StarGraph& g, const EmbeddingWitness& w);

struct CriterionVerdict {
  bool planar = false;
  std::optional<ObstructCertificate> obstruct;
};

// Planar iff no Vassiliev obstruct exists. Throws DegreeError unless every
// vertex has degree 4 or 6 (isolated vertices are skipped).
CriterionVerdict is_star_planar_by_criterion(const StarGraph& g);

struct CrosscheckVerdict {
  bool criterion_planar = false;
  bool embedding_planar = false;
  bool agree = false;
  std::optional<ObstructCertificate> obstruct;
  std::optional<EmbeddingWitness> witness;
};

// Runs both deciders on `g`.
CrosscheckVerdict crosscheck(const StarGraph& g);

}  // namespace starplanar
