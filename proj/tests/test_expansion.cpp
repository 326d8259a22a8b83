#include "doctest.h"

#include <iostream>
#include <sstream>

#include "fixtures.hpp"
#include "starplanar/error.hpp"
#include "starplanar/expansion.hpp"
#include "starplanar/planarity.hpp"

using namespace starplanar;
using namespace starplanar::testing;

namespace {

// Every orientation of every vertex, least vertex pinned.
std::vector<RotationSystem> all_orientations(const StarGraph& g) {
  std::vector<RotationSystem> out;
  const int n = g.vertex_count();
  for (std::uint64_t mask = 0; mask < (1ULL << (n - 1)); ++mask) {
    RotationSystem rho = forward_rotation(g);
    for (int v = 1; v < n; ++v) {
      if (mask >> (v - 1) & 1ULL) std::reverse(rho.rotations[v].begin(), rho.rotations[v].end());
    }
    out.push_back(rho);
  }
  return out;
}

bool planar_compatible(const StarGraph& g, const RotationSystem& rho) {
  return is_compatible(g, rho) && trace_faces(g, rho).genus == 0;
}

}  // namespace

TEST_CASE("expansion counts") {
  const auto petals = hexagon_bouquet({{"1", "2"}, {"3", "4"}, {"5", "6"}});
  const auto e = expand(petals);
  CHECK(e.graph.vertex_count() == 3);
  CHECK(e.graph.edge_count() == 6);
  CHECK(e.map.triangles.size() == 1);
  for (int v = 0; v < e.graph.vertex_count(); ++v) CHECK(e.graph.degree(v) == 4);

  const auto g4 = nested_bouquet();
  const auto e4 = expand(g4);
  CHECK(e4.graph == g4);
  CHECK(e4.map.triangles.empty());

  std::vector<std::string> a{"a1", "a2", "a3", "a4", "a5", "a6"};
  std::vector<std::string> b{"b1", "b2", "b3", "b4", "b5", "b6"};
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < 6; ++i) edges.emplace_back(a[i], b[i]);
  const auto twin = StarGraph::build({{"x", a}, {"y", b}}, edges);
  const auto et = expand(twin);
  CHECK(et.graph.vertex_count() == 6);
  CHECK(et.graph.edge_count() == 12);
}

TEST_CASE("expansion structure") {
  const auto g = double_crossing_graph();
  const auto e = expand(g);
  const auto& t = e.map.triangles.at(0);
  CHECK(t.original == "a");
  CHECK(t.corners == std::array<std::string, 3>{"a.T0", "a.T1", "a.T2"});
  CHECK(t.external[0] == std::array<std::string, 2>{"1", "2"});
  CHECK(t.external[1] == std::array<std::string, 2>{"3", "4"});
  CHECK(t.external[2] == std::array<std::string, 2>{"5", "6"});
  const auto idx = resolve(g, e.graph, e.map).at(0);
  for (int k = 0; k < 3; ++k) {
    const auto v = idx.corners[k];
    CHECK(e.graph.cyclic_order(v) ==
          CyclicOrder({idx.prev[k], idx.external[k][0], idx.external[k][1], idx.next[k]}));
    CHECK(e.graph.partner(idx.next[k]) == idx.prev[(k + 1) % 3]);
  }
  // Externals keep their partners.
  for (const char* h : {"1", "2", "3", "4", "5", "6"}) {
    CHECK(e.graph.half_edge_name(e.graph.partner(half(e.graph, h))) ==
          g.half_edge_name(g.partner(half(g, h))));
  }
  CHECK(expand(g).graph == e.graph);
  CHECK(expand(g).map == e.map);

  const auto e2 = expand(g, 2);
  CHECK(e2.map.variant == 2);
  CHECK(e2.map.triangles[0].external[0] == std::array<std::string, 2>{"2", "3"});
  CHECK(e2.map.triangles[0].external[2] == std::array<std::string, 2>{"6", "1"});

  CHECK_THROWS_AS(expand(g, 3), std::invalid_argument);
  const auto odd = StarGraph::build({{"v", {"a", "b"}}}, {{"a", "b"}});
  CHECK_THROWS_AS(expand(odd), DegreeError);
}

TEST_CASE("generated names avoid collisions") {
  const auto g = StarGraph::build({{"a", {"1", "2", "3", "4", "5", "6"}}, {"a.T0", {"x", "y", "z", "w"}}},
                                  {{"1", "2"}, {"3", "4"}, {"5", "6"}, {"x", "y"}, {"z", "w"}});
  const auto e = expand(g);
  CHECK(e.map.triangles[0].corners[0] == "a.T0_");
  CHECK(e.graph.vertex_count() == 4);
}

TEST_CASE("contraction of the three-petal bouquet") {
  const auto g = hexagon_bouquet({{"1", "2"}, {"3", "4"}, {"5", "6"}});
  for (int variant : {1, 2}) {
    const auto e = expand(g, variant);
    int planar = 0;
    for (const auto& rho : all_orientations(e.graph)) {
      if (!planar_compatible(e.graph, rho)) continue;
      ++planar;
      const auto out = contract_planar_rotation(g, e.graph, e.map, rho);
      CHECK(planar_compatible(g, out));
      CHECK(CyclicOrder(out.rotations[0]) == CyclicOrder({0, 1, 2, 3, 4, 5}));
    }
    CHECK(planar > 0);
  }
}

TEST_CASE("contraction without 6-vertices is the identity") {
  const auto g = nested_bouquet();
  const auto e = expand(g);
  const auto rho = find_planar_star_embedding(g)->rotation;
  CHECK(contract_planar_rotation(g, e.graph, e.map, rho).rotations == rho.rotations);
}

TEST_CASE("contraction over every planar orientation of small expansions") {
  int checked = 0;
  for (int seed = 0; seed < 120; ++seed) {
    const auto g = gen_random(seed % 3, 1 + seed % 2, 500 + seed);
    for (int variant : {1, 2}) {
      const auto e = expand(g, variant);
      if (e.graph.vertex_count() > 12) continue;
      for (const auto& rho : all_orientations(e.graph)) {
        if (!planar_compatible(e.graph, rho)) continue;
        ++checked;
        const auto out = contract_planar_rotation(g, e.graph, e.map, rho);
        CHECK(planar_compatible(g, out));
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("contraction errors") {
  const auto g = hexagon_bouquet({{"1", "2"}, {"3", "4"}, {"5", "6"}});
  const auto e = expand(g);
  std::optional<RotationSystem> bad;
  for (const auto& rho : all_orientations(e.graph)) {
    if (!planar_compatible(e.graph, rho)) bad = rho;
  }
  if (bad) CHECK_THROWS_AS(contract_planar_rotation(g, e.graph, e.map, *bad), NotPlanar);
  auto scrambled = forward_rotation(e.graph);
  std::swap(scrambled.rotations[0][0], scrambled.rotations[0][1]);
  CHECK_THROWS_AS(contract_planar_rotation(g, e.graph, e.map, scrambled), NotPlanar);
}

TEST_CASE("flip bound and fallback") {
  // Find an input that needs at least one flip.
  for (int seed = 0; seed < 200; ++seed) {
    const auto g = gen_random(1, 1, 900 + seed);
    const auto e = expand(g);
    for (const auto& rho : all_orientations(e.graph)) {
      if (!planar_compatible(e.graph, rho)) continue;
      ContractOptions none;
      none.max_flips = 0;
      bool needed_flip = false;
      try {
        contract_planar_rotation(g, e.graph, e.map, rho, none);
      } catch (const ContractionFailed&) {
        needed_flip = true;
      }
      if (!needed_flip) continue;
      none.fallback = true;
      std::ostringstream captured;
      auto* old = std::cerr.rdbuf(captured.rdbuf());
      const auto out = contract_planar_rotation(g, e.graph, e.map, rho, none);
      std::cerr.rdbuf(old);
      CHECK(planar_compatible(g, out));
      CHECK_FALSE(captured.str().empty());
      CHECK(planar_compatible(g, contract_planar_rotation(g, e.graph, e.map, rho)));
      return;
    }
  }
  FAIL("no input needed a flip");
}
