#pragma once

// Shared graphs and brute-force oracles for the unit and acceptance suites.
// The oracles deliberately avoid the library's search code paths.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "starplanar/cycles.hpp"
#include "starplanar/graph_io.hpp"
#include "starplanar/star_graph.hpp"

namespace starplanar::testing {

inline StarGraph crossed_bouquet() {
  return StarGraph::build({{"v", {"h1", "h2", "h3", "h4"}}}, {{"h1", "h3"}, {"h2", "h4"}});
}

inline StarGraph nested_bouquet() {
  return StarGraph::build({{"v", {"h1", "h2", "h3", "h4"}}}, {{"h1", "h2"}, {"h3", "h4"}});
}

// One 6-vertex `a` with order (1..6) and the given loops.
inline StarGraph hexagon_bouquet(const std::vector<std::pair<std::string, std::string>>& loops) {
  return StarGraph::build({{"a", {"1", "2", "3", "4", "5", "6"}}}, loops);
}

inline StarGraph double_crossing_graph() { return hexagon_bouquet({{"1", "4"}, {"3", "5"}, {"2", "6"}}); }

inline int half(const StarGraph& g, const std::string& name) { return *g.find_half_edge(name); }

// Walk from its departure half-edge names.
inline ClosedWalk walk(const StarGraph& g, const std::vector<std::string>& departures) {
  std::vector<int> ids;
  for (const auto& d : departures) ids.push_back(half(g, d));
  return ClosedWalk::from_departures(g, ids);
}

// A walk identified by its set of unordered pass pairs.
using PassSet = std::set<std::pair<int, int>>;

inline PassSet pass_set(const ClosedWalk& w) {
  PassSet s;
  for (const auto& p : w.passes()) s.insert({std::min(p.first, p.second), std::max(p.first, p.second)});
  return s;
}

// All perfect matchings of `items`.
inline void for_each_matching(std::vector<int> items,
                              const std::function<void(const std::vector<std::pair<int, int>>&)>& f,
                              std::vector<std::pair<int, int>>& acc) {
  if (items.empty()) {
    f(acc);
    return;
  }
  const int first = items.front();
  for (std::size_t i = 1; i < items.size(); ++i) {
    std::vector<int> rest;
    for (std::size_t j = 1; j < items.size(); ++j) {
      if (j != i) rest.push_back(items[j]);
    }
    acc.emplace_back(first, items[i]);
    for_each_matching(rest, f, acc);
    acc.pop_back();
  }
}

// Brute force: a closed walk is an edge subset S plus a perfect matching of
// S's half-edges at every vertex whose induced walks form a single cycle.
inline std::set<PassSet> brute_force_walks(const StarGraph& g) {
  std::set<PassSet> walks;
  const int edges = g.edge_count();
  for (std::uint32_t mask = 1; mask < (1U << edges); ++mask) {
    std::vector<std::vector<int>> at_vertex(g.vertex_count());
    int used_edges = 0;
    for (int e = 0; e < edges; ++e) {
      if (!(mask >> e & 1U)) continue;
      ++used_edges;
      at_vertex[g.vertex_of(g.edge(e).first)].push_back(g.edge(e).first);
      at_vertex[g.vertex_of(g.edge(e).second)].push_back(g.edge(e).second);
    }
    bool even = std::all_of(at_vertex.begin(), at_vertex.end(),
                            [](const auto& hs) { return hs.size() % 2 == 0; });
    if (!even) continue;

    std::vector<std::pair<int, int>> chosen;
    std::function<void(int)> per_vertex = [&](int v) {
      if (v == g.vertex_count()) {
        std::vector<int> mate(g.half_edge_count(), -1);
        for (auto [a, b] : chosen) {
          mate[a] = b;
          mate[b] = a;
        }
        const int start = g.edge(std::countr_zero(mask)).first;
        int length = 0;
        int h = start;
        do {
          ++length;
          h = mate[g.partner(h)];
        } while (h != start && length <= used_edges);
        if (length == used_edges) {
          PassSet s;
          for (auto [a, b] : chosen) s.insert({std::min(a, b), std::max(a, b)});
          walks.insert(s);
        }
        return;
      }
      std::vector<std::pair<int, int>> acc;
      for_each_matching(at_vertex[v], [&](const std::vector<std::pair<int, int>>& m) {
        const auto size = chosen.size();
        chosen.insert(chosen.end(), m.begin(), m.end());
        per_vertex(v + 1);
        chosen.resize(size);
      }, acc);
    };
    per_vertex(0);
  }
  return walks;
}

// Crossings between two pass sets using only the alternation primitive.
inline int brute_force_crossings(const StarGraph& g, const PassSet& a, const PassSet& b) {
  int count = 0;
  for (auto [a1, a2] : a) {
    for (auto [b1, b2] : b) {
      const int v = g.vertex_of(a1);
      if (v != g.vertex_of(b1)) continue;
      if (alternates(g.cyclic_order(v), {a1, a2}, {b1, b2})) ++count;
    }
  }
  return count;
}

inline std::set<int> edge_set(const StarGraph& g, const PassSet& s) {
  std::set<int> edges;
  for (auto [a, b] : s) {
    edges.insert(g.edge_of(a));
    edges.insert(g.edge_of(b));
  }
  return edges;
}

inline bool brute_force_has_obstruct(const StarGraph& g) {
  const auto walks = brute_force_walks(g);
  for (auto i = walks.begin(); i != walks.end(); ++i) {
    const auto ei = edge_set(g, *i);
    for (auto j = std::next(i); j != walks.end(); ++j) {
      const auto ej = edge_set(g, *j);
      std::vector<int> common;
      std::set_intersection(ei.begin(), ei.end(), ej.begin(), ej.end(), std::back_inserter(common));
      if (common.empty() && brute_force_crossings(g, *i, *j) == 1) return true;
    }
  }
  return false;
}

// Every one-vertex bouquet of degree 4 or 6 on order (1..n).
inline std::vector<StarGraph> one_vertex_bouquets(int degree) {
  std::vector<std::string> names;
  std::vector<int> items;
  for (int i = 1; i <= degree; ++i) {
    names.push_back(std::to_string(i));
    items.push_back(i - 1);
  }
  std::vector<StarGraph> out;
  std::vector<std::pair<int, int>> acc;
  for_each_matching(items, [&](const std::vector<std::pair<int, int>>& m) {
    std::vector<std::pair<std::string, std::string>> loops;
    for (auto [a, b] : m) loops.emplace_back(names[a], names[b]);
    out.push_back(StarGraph::build({{"a", names}}, loops));
  }, acc);
  return out;
}

// Random rotation system: every vertex gets a random permutation.
inline RotationSystem random_rotation(const StarGraph& g, std::mt19937_64& rng) {
  RotationSystem rho;
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> rot(g.order(v).begin(), g.order(v).end());
    std::shuffle(rot.begin(), rot.end(), rng);
    rho.rotations.push_back(rot);
  }
  return rho;
}

// Random transition system: a uniform perfect matching at every vertex.
inline TransitionSystem random_transition(const StarGraph& g, std::mt19937_64& rng) {
  TransitionSystem t;
  t.mate.assign(g.half_edge_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> hs(g.order(v).begin(), g.order(v).end());
    std::shuffle(hs.begin(), hs.end(), rng);
    for (std::size_t i = 0; i + 1 < hs.size(); i += 2) {
      t.mate[hs[i]] = hs[i + 1];
      t.mate[hs[i + 1]] = hs[i];
    }
  }
  return t;
}

struct CrossingTally {
  int walks = 0;
  int pairwise = 0;
  int self = 0;
};

inline CrossingTally tally(const StarGraph& g, const std::vector<ClosedWalk>& walks) {
  CrossingTally t;
  t.walks = static_cast<int>(walks.size());
  for (std::size_t i = 0; i < walks.size(); ++i) {
    t.self += self_crossings(g, walks[i]);
    for (std::size_t j = i + 1; j < walks.size(); ++j) {
      t.pairwise += crossings(g, walks[i], walks[j]).count;
    }
  }
  return t;
}

// Lifting fixtures on a single 6-vertex with order (1..6), expanded with
// variant 1. Each corner of the triangle gets a matching of the given class;
// the graph's loops are the pairing the triangle lifts to.
struct CaseFixture {
  int number = 0;
  std::array<CornerClass, 3> classes{};
  std::vector<std::pair<std::string, std::string>> lifted;
};

inline std::vector<CaseFixture> case_fixtures() {
  using C = CornerClass;
  const C o = C::open, c = C::closed, x = C::crossing;
  return {
      {1, {o, o, o}, {{"2", "3"}, {"4", "5"}, {"6", "1"}}},
      {2, {c, c, c}, {{"1", "2"}, {"3", "4"}, {"5", "6"}}},
      {3, {x, x, x}, {{"1", "4"}, {"2", "5"}, {"3", "6"}}},
      {4, {o, o, c}, {{"1", "4"}, {"2", "3"}, {"5", "6"}}},
      {5, {x, o, o}, {{"1", "3"}, {"2", "6"}, {"4", "5"}}},
      {6, {c, c, o}, {{"1", "2"}, {"3", "4"}, {"5", "6"}}},
      {7, {x, c, c}, {{"1", "2"}, {"3", "4"}, {"5", "6"}}},
      {8, {x, x, o}, {{"1", "4"}, {"2", "6"}, {"3", "5"}}},
      {9, {c, x, x}, {{"1", "2"}, {"3", "6"}, {"4", "5"}}},
      {10, {x, o, c}, {{"1", "3"}, {"2", "4"}, {"5", "6"}}},
  };
}

// Transition system on the expansion realizing the fixture's corner classes.
// Open pairs {prev, a}, {b, next}; closed {prev, next}, {a, b}; crossing
// {prev, b}, {a, next}.
inline TransitionSystem corner_transition(const StarGraph& g, const Expansion& e,
                                          const std::array<CornerClass, 3>& classes) {
  const auto idx = resolve(g, e.graph, e.map).at(0);
  TransitionSystem t;
  t.mate.assign(e.graph.half_edge_count(), -1);
  auto pair = [&](int a, int b) {
    t.mate[a] = b;
    t.mate[b] = a;
  };
  for (int k = 0; k < 3; ++k) {
    const int p = idx.prev[k], a = idx.external[k][0], b = idx.external[k][1], n = idx.next[k];
    switch (classes[k]) {
      case CornerClass::open:
        pair(p, a);
        pair(b, n);
        break;
      case CornerClass::closed:
        pair(p, n);
        pair(a, b);
        break;
      case CornerClass::crossing:
        pair(p, b);
        pair(a, n);
        break;
    }
  }
  return t;
}

}  // namespace starplanar::testing
