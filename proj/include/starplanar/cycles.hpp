#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "starplanar/expansion.hpp"
#include "starplanar/star_graph.hpp"

namespace starplanar {

// A walk traverses `vertex` arriving through `first` and leaving through
// `second`. For crossing purposes the pair is unordered.
struct Pass {
  int vertex = -1;
  int first = -1;
  int second = -1;

  std::pair<int, int> pair() const { return {first, second}; }
  friend auto operator<=>(const Pass&, const Pass&) = default;
};

// Edge-simple closed walk as a cyclic sequence of passes, where
// partner(passes[i].second) == passes[i+1].first. Vertices may repeat.
class ClosedWalk {
 public:
  ClosedWalk() = default;

  // Checks the walk against `g` and stores its canonical form: the least pass
  // sequence over all rotations and reversals. Throws std::invalid_argument.
  static ClosedWalk from_passes(const StarGraph& g, std::vector<Pass> passes);
  // Walk given by its sequence of departure half-edges.
  static ClosedWalk from_departures(const StarGraph& g, const std::vector<int>& departures);
  // Stores `passes` as given, for certificates that are checked later.
  static ClosedWalk unchecked(std::vector<Pass> passes);

  std::span<const Pass> passes() const { return passes_; }
  std::size_t length() const { return passes_.size(); }
  std::vector<int> edges(const StarGraph& g) const;

  friend auto operator<=>(const ClosedWalk&, const ClosedWalk&) = default;

 private:
  std::vector<Pass> passes_;
};

// Ceiling on the number of walks an enumeration may produce: 10^6, or the
// value of STARPLANAR_WALK_CEILING when set.
std::size_t walk_ceiling();

// Every edge-simple closed walk with at most `max_edges` edges (all of them
// when negative), canonical and sorted. Throws ResourceLimitExceeded past
// `ceiling`.
std::vector<ClosedWalk> enumerate_closed_walks(const StarGraph& g, int max_edges = -1,
                                               std::size_t ceiling = walk_ceiling());

struct Crossing {
  int vertex = -1;
  Pass pass_a;
  Pass pass_b;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct CrossingReport {
  int count = 0;
  std::vector<Crossing> crossings;
};

// Pass pairs of `a` and `b` at a common vertex whose half-edges alternate,
// counted with multiplicity. Throws std::invalid_argument if the walks share
// an edge.
CrossingReport crossings(const StarGraph& g, const ClosedWalk& a, const ClosedWalk& b);

// Unordered pairs of distinct passes of `a` at a common vertex that alternate.
int self_crossings(const StarGraph& g, const ClosedWalk& a);

struct ObstructCertificate {
  ClosedWalk walk_a;
  ClosedWalk walk_b;
  int vertex = -1;
  Pass pass_a;
  Pass pass_b;

  friend bool operator==(const ObstructCertificate&, const ObstructCertificate&) = default;
};

// First pair (a, b), a < b in canonical walk order, of edge-disjoint closed
// walks with exactly one crossing. Throws ResourceLimitExceeded if the walk
// enumeration exceeds its ceiling.
std::optional<ObstructCertificate> find_obstruct(const StarGraph& g);

namespace reference {
// Serial form of the pair scan; same result as the parallel kernel.
std::optional<ObstructCertificate> find_obstruct(const StarGraph& g);
}  // namespace reference

// Re-checks a certificate from scratch: walks valid in `g`, edge-disjoint,
// exactly one crossing, located at the recorded vertex and passes.
bool verify_obstruct(const StarGraph& g, const ObstructCertificate& cert);

// Perfect matching of the half-edges at every vertex, stored as a mate table
// indexed by half-edge.
struct TransitionSystem {
  std::vector<int> mate;

  friend bool operator==(const TransitionSystem&, const TransitionSystem&) = default;
};

bool is_valid_transition_system(const StarGraph& g, const TransitionSystem& t);

// Matching induced by `walks` (which must be pairwise edge-disjoint), with the
// remaining half-edges at each vertex paired greedily: scanning the canonical
// order, an unmatched half-edge takes the next unmatched one cyclically after
// it.
TransitionSystem complete_transition_system(const StarGraph& g,
                                            const std::vector<ClosedWalk>& walks);

// Partition of all edges into the closed walks that follow `t`; sorted.
std::vector<ClosedWalk> cycles_of_transition_system(const StarGraph& g,
                                                    const TransitionSystem& t);

enum class CornerClass { open, closed, crossing };

const char* to_string(CornerClass c);

// Closed: the two triangle half-edges are matched together. Crossing: every
// half-edge is matched with its opposite. Open: otherwise. Throws
// std::invalid_argument if `v` is not a triangle corner.
CornerClass classify_triangle_vertex(const StarGraph& expanded, const ExpansionMap& map,
                                     const TransitionSystem& t, int v);

// Case 1..10 for the multiset of corner classes:
//  1 ooo, 2 ccc (closed), 3 xxx (crossing), 4 oo+closed, 5 oo+crossing,
//  6 closed,closed+open, 7 closed,closed+crossing, 8 xx+open, 9 xx+closed,
//  10 one of each.
int classify_corner_classes(std::span<const CornerClass, 3> classes);
int classify_triangle_case(const StarGraph& expanded, const ExpansionMap& map,
                           const TransitionSystem& t, std::size_t triangle);

// Transition system of `g` whose matching at each 6-vertex pairs the external
// half-edges joined by following `t_expanded` through the triangle; other
// vertices copy their matching. Walks lying entirely on a triangle vanish.
TransitionSystem lift_transition_system(const StarGraph& g, const StarGraph& expanded,
                                        const ExpansionMap& map,
                                        const TransitionSystem& t_expanded);

// Carries an obstruct of the expansion back to `g`. Throws
// std::invalid_argument if `cert` does not verify on the expansion, and
// LiftingFailed (with the lifted partition) if no pair of lifted walks has
// exactly one crossing.
ObstructCertificate lift_obstruct(const StarGraph& g, const StarGraph& expanded,
                                  const ExpansionMap& map, const ObstructCertificate& cert);

// Human-readable walk, e.g. "v:h2>h3 v:h4>h1".
std::string describe_walk(const StarGraph& g, const ClosedWalk& w);

}  // namespace starplanar
