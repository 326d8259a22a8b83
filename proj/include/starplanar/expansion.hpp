#pragma once

#include <array>
#include <string>
#include <vector>

#include "starplanar/star_graph.hpp"

namespace starplanar {

// One 6-vertex replaced by a triangle of 4-vertices.
//
// Corner k carries the order (prev_k, ext_k[0], ext_k[1], next_k), where
// prev_k / next_k are its triangle half-edges towards corners k-1 / k+1, and
// triangle edge k joins next_k to prev_{k+1}. External half-edges keep their
// names from the original graph, so ext lists the bijection explicitly.
struct ExpandedVertex {
  std::string original;
  std::array<std::string, 3> corners;
  std::array<std::string, 3> prev;
  std::array<std::string, 3> next;
  std::array<std::array<std::string, 2>, 3> external;

  friend bool operator==(const ExpandedVertex&, const ExpandedVertex&) = default;
};

struct ExpansionMap {
  int variant = 1;
  std::vector<ExpandedVertex> triangles;  // in index order of the 6-vertices

  friend bool operator==(const ExpansionMap&, const ExpansionMap&) = default;
};

struct Expansion {
  StarGraph graph;
  ExpansionMap map;
};

// Variant 1 gives corner k the consecutive externals at canonical positions
// (2k, 2k+1); variant 2 shifts the grouping by one, (2k+1, 2k+2).
// Throws DegreeError unless every vertex has degree 0, 4 or 6.
Expansion expand(const StarGraph& g, int variant = 1);

// A triangle of `map` resolved to half-edge and vertex indices.
struct TriangleIndices {
  int original = -1;                // vertex of g
  std::array<int, 3> corners{};     // vertices of the expansion
  std::array<int, 3> prev{};
  std::array<int, 3> next{};
  std::array<std::array<int, 2>, 3> external{};
};

// Throws std::invalid_argument if `map` names anything missing from the graphs.
std::vector<TriangleIndices> resolve(const StarGraph& g, const StarGraph& expanded,
                                     const ExpansionMap& map);

struct ContractOptions {
  // Bound on flips before giving up; negative means 4 * triangles + 16.
  int max_flips = -1;
  // On failure of the constructive path, search a planar rotation of g
  // directly and warn on stderr instead of throwing.
  bool fallback = false;
};

// Turns a genus-0 rotation system of the expansion, compatible with its
// X-structure, into a genus-0 rotation system of `g` compatible with g's
// *-structure. Triangles whose external pairs sit on both sides are made
// one-sided by reflecting the block hanging off the minority corner; every
// triangle is then contracted to its 6-vertex.
//
// Throws NotPlanar if `rho` is not a compatible genus-0 rotation, and
// ContractionFailed if the flip loop stalls or exceeds its bound.
RotationSystem contract_planar_rotation(const StarGraph& g, const StarGraph& expanded,
                                        const ExpansionMap& map,
                                        const RotationSystem& rho,
                                        const ContractOptions& options = {});

}  // namespace starplanar
