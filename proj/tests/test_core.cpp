#include "doctest.h"

#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "starplanar/error.hpp"

using namespace starplanar;
using namespace starplanar::testing;

TEST_CASE("cyclic order equality is rotation and reflection") {
  const CyclicOrder base({0, 1, 2, 3, 4, 5});
  CHECK(base == CyclicOrder({2, 3, 4, 5, 0, 1}));
  CHECK(base == CyclicOrder({5, 4, 3, 2, 1, 0}));
  CHECK(base == CyclicOrder({1, 0, 5, 4, 3, 2}));
  CHECK_FALSE(base == CyclicOrder({0, 2, 1, 3, 4, 5}));
  CHECK(base.canonical() == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(CyclicOrder({3, 1, 2}).canonical() == std::vector<int>{1, 2, 3});
  CHECK(CyclicOrder({3, 2, 1}).canonical() == std::vector<int>{1, 2, 3});
  CHECK_THROWS_AS(CyclicOrder({1, 2, 1}), std::invalid_argument);
}

TEST_CASE("a cyclic order has exactly 2n representative sequences") {
  std::mt19937_64 rng(11);
  for (int n = 3; n <= 6; ++n) {
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    std::set<std::vector<int>> representatives;
    for (int r = 0; r < n; ++r) {
      std::vector<int> rotated(n);
      for (int i = 0; i < n; ++i) rotated[i] = base[(i + r) % n];
      representatives.insert(rotated);
      representatives.insert(std::vector<int>(rotated.rbegin(), rotated.rend()));
    }
    CHECK(static_cast<int>(representatives.size()) == 2 * n);
    std::vector<int> perm = base;
    do {
      CHECK((CyclicOrder(perm) == CyclicOrder(base)) == representatives.contains(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("validate reports every violation") {
  GraphDescription ok{{{"v", {"h1", "h2", "h3", "h4"}, 1}}, {{"h1", "h2", 2}, {"h3", "h4", 3}}};
  CHECK(validate(ok).empty());

  GraphDescription unmatched{{{"v", {"h1", "h2", "h3", "h4"}, 1}}, {{"h1", "h2", 2}}};
  auto violations = validate(unmatched);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].kind == ViolationKind::unmatched_half_edge);
  CHECK(violations[0].ids == std::vector<std::string>{"h3", "h4"});
  CHECK(violations[0].message() == "line 1: h3, h4 unmatched");

  GraphDescription duplicate{{{"v", {"h1", "h2"}, 1}, {"w", {"h2", "h3"}, 2}},
                             {{"h1", "h2", 3}, {"h3", "h1", 4}}};
  violations = validate(duplicate);
  REQUIRE_FALSE(violations.empty());
  CHECK(violations[0].kind == ViolationKind::duplicate_half_edge);
  CHECK(violations[0].ids == std::vector<std::string>{"h2"});

  GraphDescription unknown{{{"v", {"h1", "h2"}, 1}}, {{"h1", "zz", 2}, {"h2", "h2", 3}}};
  violations = validate(unknown);
  REQUIRE(violations.size() == 3);
  CHECK(violations[0].kind == ViolationKind::unknown_half_edge);
  CHECK(violations[1].kind == ViolationKind::self_paired_half_edge);
  CHECK(violations[2].kind == ViolationKind::unmatched_half_edge);

  GraphDescription bad{{{"v v", {"h#"}, 1}}, {}};
  CHECK(validate(bad)[0].kind == ViolationKind::bad_identifier);

  CHECK_THROWS_AS(StarGraph::from_description(unmatched), InvalidGraph);
}

TEST_CASE("graph indices follow name order and orders are canonical") {
  const auto g = StarGraph::build({{"b", {"z", "y", "x", "w"}}, {"a", {"d", "c", "b", "a"}}},
                                  {{"a", "w"}, {"b", "x"}, {"c", "y"}, {"d", "z"}});
  CHECK(g.vertex_name(0) == "a");
  CHECK(g.half_edge_name(0) == "a");
  CHECK(g.order(0)[0] == half(g, "a"));
  CHECK(g.order(0)[1] == half(g, "b"));
  CHECK(g.edge_count() == 4);
  CHECK(g.partner(half(g, "a")) == half(g, "w"));
  CHECK(g.edge_of(half(g, "a")) == g.edge_of(half(g, "w")));
  CHECK(g.position(half(g, "c")) == 2);
}

TEST_CASE("degrees_ok_46") {
  CHECK(degrees_ok_46(nested_bouquet()));
  CHECK(degrees_ok_46(hexagon_bouquet({{"1", "2"}, {"3", "4"}, {"5", "6"}})));
  const auto two = StarGraph::build({{"v", {"h1", "h2", "h3", "h4"}}, {"w", {"g1", "g2"}}},
                                    {{"h1", "h2"}, {"h3", "g1"}, {"h4", "g2"}});
  CHECK_FALSE(degrees_ok_46(two));
  CHECK_FALSE(theorem_degrees_ok(two));
  const auto isolated = StarGraph::build({{"v", {"h1", "h2", "h3", "h4"}}, {"w", {}}},
                                         {{"h1", "h2"}, {"h3", "h4"}});
  CHECK_FALSE(degrees_ok_46(isolated));
  CHECK(theorem_degrees_ok(isolated));
}

TEST_CASE("opposite half-edge") {
  const auto g4 = nested_bouquet();
  CHECK(opposite_half_edge(g4, half(g4, "h1")) == half(g4, "h3"));
  const auto g6 = hexagon_bouquet({{"1", "2"}, {"3", "4"}, {"5", "6"}});
  CHECK(opposite_half_edge(g6, half(g6, "2")) == half(g6, "5"));
  const auto reversed = StarGraph::build({{"v", {"h4", "h3", "h2", "h1"}}}, {{"h1", "h2"}, {"h3", "h4"}});
  CHECK(opposite_half_edge(reversed, half(reversed, "h1")) == half(reversed, "h3"));
  for (int h = 0; h < g6.half_edge_count(); ++h) {
    CHECK(opposite_half_edge(g6, opposite_half_edge(g6, h)) == h);
  }
  const auto odd = StarGraph::build({{"v", {"a", "b", "c"}}, {"w", {"d", "e", "f"}}},
                                    {{"a", "d"}, {"b", "e"}, {"c", "f"}});
  CHECK_THROWS_AS(opposite_half_edge(odd, 0), std::invalid_argument);
}

TEST_CASE("alternation") {
  // A1=0 B1=1 A2=2 B2=3
  const CyclicOrder order({0, 1, 2, 3});
  CHECK(alternates(order, {0, 2}, {1, 3}));
  const CyclicOrder apart({0, 2, 1, 3});  // A1, A2, B1, B2
  CHECK_FALSE(alternates(apart, {0, 2}, {1, 3}));
  const CyclicOrder hexagon({1, 2, 3, 4, 5, 6});
  CHECK(alternates(hexagon, {1, 4}, {2, 5}));
  CHECK_FALSE(alternates(hexagon, {1, 4}, {2, 3}));
  CHECK_THROWS_AS(alternates(hexagon, {1, 4}, {4, 5}), std::invalid_argument);
  CHECK_THROWS_AS(alternates(hexagon, {1, 4}, {2, 9}), std::invalid_argument);
}

TEST_CASE("alternation is invariant under reversal and pair swap") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 5);
    std::vector<int> seq(n);
    std::iota(seq.begin(), seq.end(), 0);
    std::shuffle(seq.begin(), seq.end(), rng);
    std::vector<int> pick = seq;
    std::shuffle(pick.begin(), pick.end(), rng);
    const std::pair<int, int> p{pick[0], pick[1]};
    const std::pair<int, int> q{pick[2], pick[3]};
    const CyclicOrder order(seq);
    const bool result = alternates(order, p, q);
    CHECK(result == alternates(order.reversed(), p, q));
    CHECK(result == alternates(order, q, p));
    CHECK(result == alternates(order, {p.second, p.first}, q));
  }
}

TEST_CASE("connected components and rotation compatibility") {
  const auto g = StarGraph::build(
      {{"u", {"a", "b", "c", "d"}}, {"w", {"e", "f", "g", "h"}}, {"z", {}}},
      {{"a", "b"}, {"c", "d"}, {"e", "g"}, {"f", "h"}});
  const auto comps = connected_components(g);
  CHECK(comps.count() == 3);
  CHECK(comps.of_vertex[0] != comps.of_vertex[1]);

  auto rho = forward_rotation(g);
  CHECK(is_compatible(g, rho));
  std::reverse(rho.rotations[0].begin(), rho.rotations[0].end());
  CHECK(is_compatible(g, rho));
  std::swap(rho.rotations[0][0], rho.rotations[0][1]);
  CHECK_FALSE(is_compatible(g, rho));
  CHECK(is_rotation_system_for(g, rho));
}
