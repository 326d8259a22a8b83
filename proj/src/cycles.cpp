#include "starplanar/cycles.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include "starplanar/error.hpp"

namespace starplanar {

namespace {

std::vector<Pass> reversed_walk(const std::vector<Pass>& passes) {
  std::vector<Pass> out;
  out.reserve(passes.size());
  for (auto it = passes.rbegin(); it != passes.rend(); ++it) {
    out.push_back({it->vertex, it->second, it->first});
  }
  return out;
}

std::vector<Pass> canonical_walk(const std::vector<Pass>& passes) {
  const auto reversed = reversed_walk(passes);
  return std::min(least_rotation(std::span<const Pass>(passes)),
                  least_rotation(std::span<const Pass>(reversed)));
}

}  // namespace

ClosedWalk ClosedWalk::from_passes(const StarGraph& g, std::vector<Pass> passes) {
  if (passes.empty()) throw std::invalid_argument("closed walk has no passes");
  std::set<int> used;
  const std::size_t n = passes.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Pass& p = passes[i];
    if (p.first < 0 || p.second < 0 || p.first >= g.half_edge_count() ||
        p.second >= g.half_edge_count() || p.first == p.second ||
        g.vertex_of(p.first) != p.vertex || g.vertex_of(p.second) != p.vertex) {
      throw std::invalid_argument("malformed pass in closed walk");
    }
    if (g.partner(p.second) != passes[(i + 1) % n].first) {
      throw std::invalid_argument("consecutive passes are not joined by an edge");
    }
    if (!used.insert(g.edge_of(p.second)).second) {
      throw std::invalid_argument("closed walk repeats an edge");
    }
  }
  ClosedWalk w;
  w.passes_ = canonical_walk(passes);
  return w;
}

ClosedWalk ClosedWalk::from_departures(const StarGraph& g,
                                       const std::vector<int>& departures) {
  std::vector<Pass> passes;
  const std::size_t n = departures.size();
  for (std::size_t i = 0; i < n; ++i) {
    const int arrival = g.partner(departures[(i + n - 1) % n]);
    passes.push_back({g.vertex_of(departures[i]), arrival, departures[i]});
  }
  return from_passes(g, std::move(passes));
}

ClosedWalk ClosedWalk::unchecked(std::vector<Pass> passes) {
  ClosedWalk w;
  w.passes_ = std::move(passes);
  return w;
}

std::vector<int> ClosedWalk::edges(const StarGraph& g) const {
  std::vector<int> out;
  for (const auto& p : passes_) out.push_back(g.edge_of(p.second));
  return out;
}

std::size_t walk_ceiling() {
  if (const char* env = std::getenv("STARPLANAR_WALK_CEILING")) {
    char* end = nullptr;
    const auto value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
  }
  return 1'000'000;
}

namespace {

// Depth-first search for closed trails whose least edge is `min_edge`,
// traversed first from its lower half-edge. Each trail is found exactly once.
class TrailSearch {
 public:
  TrailSearch(const StarGraph& g, int max_edges, std::size_t ceiling,
              std::vector<ClosedWalk>& out)
      : g_(g), max_edges_(max_edges), ceiling_(ceiling), out_(out),
        used_(g.edge_count(), 0) {}

  void run() {
    for (int e = 0; e < g_.edge_count(); ++e) {
      min_edge_ = e;
      start_ = g_.edge(e).first;
      used_[e] = 1;
      departures_.assign(1, start_);
      extend(g_.partner(start_));
      used_[e] = 0;
    }
  }

 private:
  void extend(int arrival) {
    const int v = g_.vertex_of(arrival);
    if (v == g_.vertex_of(start_)) {
      if (out_.size() >= ceiling_) {
        throw ResourceLimitExceeded("closed-walk enumeration exceeded the ceiling of " +
                                    std::to_string(ceiling_) + " walks");
      }
      out_.push_back(ClosedWalk::from_departures(g_, departures_));
    }
    if (max_edges_ >= 0 && static_cast<int>(departures_.size()) >= max_edges_) return;
    for (int h : g_.order(v)) {
      const int e = g_.edge_of(h);
      if (h == arrival || e <= min_edge_ || used_[e]) continue;
      used_[e] = 1;
      departures_.push_back(h);
      extend(g_.partner(h));
      departures_.pop_back();
      used_[e] = 0;
    }
  }

  const StarGraph& g_;
  int max_edges_;
  std::size_t ceiling_;
  std::vector<ClosedWalk>& out_;
  std::vector<char> used_;
  std::vector<int> departures_;
  int min_edge_ = 0;
  int start_ = 0;
};

}  // namespace

std::vector<ClosedWalk> enumerate_closed_walks(const StarGraph& g, int max_edges,
                                               std::size_t ceiling) {
  std::vector<ClosedWalk> walks;
  TrailSearch(g, max_edges, ceiling, walks).run();
  std::sort(walks.begin(), walks.end());
  return walks;
}

namespace {

bool share_edge(const StarGraph& g, const ClosedWalk& a, const ClosedWalk& b) {
  auto ea = a.edges(g);
  auto eb = b.edges(g);
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  std::vector<int> common;
  std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(),
                        std::back_inserter(common));
  return !common.empty();
}

bool passes_alternate(const StarGraph& g, const Pass& p, const Pass& q) {
  return alternating_positions(g.position(p.first), g.position(p.second),
                               g.position(q.first), g.position(q.second));
}

}  // namespace

CrossingReport crossings(const StarGraph& g, const ClosedWalk& a, const ClosedWalk& b) {
  if (share_edge(g, a, b)) {
    throw std::invalid_argument("crossings requires edge-disjoint walks");
  }
  CrossingReport report;
  for (const auto& pa : a.passes()) {
    for (const auto& pb : b.passes()) {
      if (pa.vertex == pb.vertex && passes_alternate(g, pa, pb)) {
        report.crossings.push_back({pa.vertex, pa, pb});
      }
    }
  }
  report.count = static_cast<int>(report.crossings.size());
  return report;
}

int self_crossings(const StarGraph& g, const ClosedWalk& a) {
  const auto passes = a.passes();
  int count = 0;
  for (std::size_t i = 0; i < passes.size(); ++i) {
    for (std::size_t j = i + 1; j < passes.size(); ++j) {
      if (passes[i].vertex == passes[j].vertex && passes_alternate(g, passes[i], passes[j])) {
        ++count;
      }
    }
  }
  return count;
}

namespace {

// Flattened per-walk data for the pair scan: edge and vertex bitsets plus
// passes as position pairs sorted by vertex.
class PairScan {
 public:
  PairScan(const StarGraph& g, const std::vector<ClosedWalk>& walks)
      : count_(walks.size()),
        edge_words_((g.edge_count() + 63) / 64),
        vertex_words_((g.vertex_count() + 63) / 64),
        edge_bits_(count_ * edge_words_, 0),
        vertex_bits_(count_ * vertex_words_, 0),
        pass_begin_(count_ + 1, 0) {
    for (std::size_t i = 0; i < count_; ++i) {
      std::vector<Slot> slots;
      for (const auto& p : walks[i].passes()) {
        const int e = g.edge_of(p.second);
        edge_bits_[i * edge_words_ + e / 64] |= std::uint64_t{1} << (e % 64);
        vertex_bits_[i * vertex_words_ + p.vertex / 64] |= std::uint64_t{1} << (p.vertex % 64);
        slots.push_back({p.vertex, g.position(p.first), g.position(p.second)});
      }
      std::sort(slots.begin(), slots.end());
      slots_.insert(slots_.end(), slots.begin(), slots.end());
      pass_begin_[i + 1] = slots_.size();
    }
  }

  std::size_t size() const { return count_; }

  // Least j > i such that (i, j) is an obstruct, or -1.
  std::int64_t first_partner(std::size_t i) const {
    for (std::size_t j = i + 1; j < count_; ++j) {
      if (intersects(edge_bits_, edge_words_, i, j)) continue;
      if (!intersects(vertex_bits_, vertex_words_, i, j)) continue;
      if (crossings_capped(i, j) == 1) return static_cast<std::int64_t>(j);
    }
    return -1;
  }

 private:
  struct Slot {
    int vertex;
    int p;
    int q;
    friend auto operator<=>(const Slot&, const Slot&) = default;
  };

  static bool intersects(const std::vector<std::uint64_t>& bits, std::size_t words,
                         std::size_t i, std::size_t j) {
    for (std::size_t w = 0; w < words; ++w) {
      if (bits[i * words + w] & bits[j * words + w]) return true;
    }
    return false;
  }

  // Crossing count between walks i and j, stopping at 2.
  int crossings_capped(std::size_t i, std::size_t j) const {
    int count = 0;
    std::size_t a = pass_begin_[i];
    std::size_t b = pass_begin_[j];
    const std::size_t a_end = pass_begin_[i + 1];
    const std::size_t b_end = pass_begin_[j + 1];
    while (a < a_end && b < b_end) {
      if (slots_[a].vertex < slots_[b].vertex) {
        ++a;
      } else if (slots_[b].vertex < slots_[a].vertex) {
        ++b;
      } else {
        const int v = slots_[a].vertex;
        std::size_t b_group = b;
        for (; a < a_end && slots_[a].vertex == v; ++a) {
          for (std::size_t k = b_group; k < b_end && slots_[k].vertex == v; ++k) {
            const auto& x = slots_[a];
            const auto& y = slots_[k];
            if (alternating_positions(x.p, x.q, y.p, y.q) && ++count >= 2) return count;
          }
        }
        while (b < b_end && slots_[b].vertex == v) ++b;
      }
    }
    return count;
  }

  std::size_t count_;
  std::size_t edge_words_;
  std::size_t vertex_words_;
  std::vector<std::uint64_t> edge_bits_;
  std::vector<std::uint64_t> vertex_bits_;
  std::vector<Slot> slots_;
  std::vector<std::size_t> pass_begin_;
};

ObstructCertificate make_certificate(const StarGraph& g, const ClosedWalk& a,
                                     const ClosedWalk& b) {
  const auto report = crossings(g, a, b);
  if (report.count != 1) throw std::logic_error("pair scan disagrees with crossings()");
  const auto& c = report.crossings.front();
  return {a, b, c.vertex, c.pass_a, c.pass_b};
}

}  // namespace

std::optional<ObstructCertificate> find_obstruct(const StarGraph& g) {
  const auto walks = enumerate_closed_walks(g);
  const PairScan scan(g, walks);
  const auto n = static_cast<std::int64_t>(scan.size());
  constexpr std::int64_t kBlock = 256;
  std::vector<std::int64_t> hit(kBlock);
  for (std::int64_t block = 0; block < n; block += kBlock) {
    const std::int64_t end = std::min(n, block + kBlock);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = block; i < end; ++i) {
      hit[i - block] = scan.first_partner(static_cast<std::size_t>(i));
    }
    for (std::int64_t i = block; i < end; ++i) {
      if (hit[i - block] >= 0) return make_certificate(g, walks[i], walks[hit[i - block]]);
    }
  }
  return std::nullopt;
}

namespace reference {
std::optional<ObstructCertificate> find_obstruct(const StarGraph& g) {
  const auto walks = enumerate_closed_walks(g);
  const PairScan scan(g, walks);
  for (std::size_t i = 0; i < scan.size(); ++i) {
    if (const auto j = scan.first_partner(i); j >= 0) {
      return make_certificate(g, walks[i], walks[j]);
    }
  }
  return std::nullopt;
}
}  // namespace reference

namespace {

// Edge indices of `passes` if they form an edge-simple closed walk of `g`.
std::optional<std::vector<int>> checked_walk_edges(const StarGraph& g,
                                                   std::span<const Pass> passes) {
  if (passes.empty()) return std::nullopt;
  const int half_count = g.half_edge_count();
  std::vector<int> edges;
  for (std::size_t i = 0; i < passes.size(); ++i) {
    const Pass& p = passes[i];
    const Pass& next = passes[(i + 1) % passes.size()];
    if (p.vertex < 0 || p.vertex >= g.vertex_count()) return std::nullopt;
    if (p.first < 0 || p.first >= half_count || p.second < 0 || p.second >= half_count) {
      return std::nullopt;
    }
    if (p.first == p.second) return std::nullopt;
    if (g.vertex_of(p.first) != p.vertex || g.vertex_of(p.second) != p.vertex) {
      return std::nullopt;
    }
    if (g.partner(p.second) != next.first) return std::nullopt;
    edges.push_back(g.edge_of(p.second));
  }
  std::vector<int> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
  return sorted;
}

}  // namespace

bool verify_obstruct(const StarGraph& g, const ObstructCertificate& cert) {
  const auto edges_a = checked_walk_edges(g, cert.walk_a.passes());
  const auto edges_b = checked_walk_edges(g, cert.walk_b.passes());
  if (!edges_a || !edges_b) return false;
  std::vector<int> common;
  std::set_intersection(edges_a->begin(), edges_a->end(), edges_b->begin(), edges_b->end(),
                        std::back_inserter(common));
  if (!common.empty()) return false;

  int count = 0;
  const Pass* at_a = nullptr;
  const Pass* at_b = nullptr;
  for (const auto& pa : cert.walk_a.passes()) {
    for (const auto& pb : cert.walk_b.passes()) {
      if (pa.vertex != pb.vertex) continue;
      const CyclicOrder order = g.cyclic_order(pa.vertex);
      if (alternates(order, {pa.first, pa.second}, {pb.first, pb.second})) {
        ++count;
        at_a = &pa;
        at_b = &pb;
      }
    }
  }
  return count == 1 && cert.vertex == at_a->vertex && cert.pass_a == *at_a &&
         cert.pass_b == *at_b;
}

bool is_valid_transition_system(const StarGraph& g, const TransitionSystem& t) {
  if (static_cast<int>(t.mate.size()) != g.half_edge_count()) return false;
  for (int h = 0; h < g.half_edge_count(); ++h) {
    const int m = t.mate[h];
    if (m < 0 || m >= g.half_edge_count() || m == h) return false;
    if (t.mate[m] != h || g.vertex_of(m) != g.vertex_of(h)) return false;
  }
  return true;
}

TransitionSystem complete_transition_system(const StarGraph& g,
                                            const std::vector<ClosedWalk>& walks) {
  TransitionSystem t;
  t.mate.assign(g.half_edge_count(), -1);
  for (const auto& w : walks) {
    for (const auto& p : w.passes()) {
      if (t.mate[p.first] >= 0 || t.mate[p.second] >= 0) {
        throw std::invalid_argument("walks to complete are not edge-disjoint");
      }
      t.mate[p.first] = p.second;
      t.mate[p.second] = p.first;
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto order = g.order(v);
    const std::size_t n = order.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (t.mate[order[i]] >= 0) continue;
      for (std::size_t step = 1; step < n; ++step) {
        const int other = order[(i + step) % n];
        if (t.mate[other] < 0) {
          t.mate[order[i]] = other;
          t.mate[other] = order[i];
          break;
        }
      }
    }
  }
  return t;
}

std::vector<ClosedWalk> cycles_of_transition_system(const StarGraph& g,
                                                    const TransitionSystem& t) {
  if (!is_valid_transition_system(g, t)) {
    throw std::invalid_argument("transition system is not a perfect matching at every vertex");
  }
  std::vector<char> done(g.half_edge_count(), 0);
  std::vector<ClosedWalk> walks;
  for (int start = 0; start < g.half_edge_count(); ++start) {
    if (done[start]) continue;
    std::vector<int> departures;
    int h = start;
    do {
      done[h] = 1;
      done[g.partner(h)] = 1;
      departures.push_back(h);
      h = t.mate[g.partner(h)];
    } while (h != start);
    walks.push_back(ClosedWalk::from_departures(g, departures));
  }
  std::sort(walks.begin(), walks.end());
  return walks;
}

const char* to_string(CornerClass c) {
  switch (c) {
    case CornerClass::open:
      return "open";
    case CornerClass::closed:
      return "closed";
    case CornerClass::crossing:
      return "crossing";
  }
  return "?";
}

CornerClass classify_triangle_vertex(const StarGraph& expanded, const ExpansionMap& map,
                                     const TransitionSystem& t, int v) {
  for (const auto& tri : map.triangles) {
    for (int k = 0; k < 3; ++k) {
      if (expanded.find_vertex(tri.corners[k]) != v) continue;
      const int prev = *expanded.find_half_edge(tri.prev[k]);
      const int next = *expanded.find_half_edge(tri.next[k]);
      if (t.mate[prev] == next) return CornerClass::closed;
      const int corner_half_edges[] = {prev, next};
      const bool all_opposite = std::all_of(
          std::begin(corner_half_edges), std::end(corner_half_edges),
          [&](int h) { return t.mate[h] == opposite_half_edge(expanded, h); });
      return all_opposite ? CornerClass::crossing : CornerClass::open;
    }
  }
  throw std::invalid_argument("vertex " + std::to_string(v) + " is not a triangle corner");
}

int classify_corner_classes(std::span<const CornerClass, 3> classes) {
  int open = 0;
  int closed = 0;
  int crossing = 0;
  for (auto c : classes) {
    open += c == CornerClass::open;
    closed += c == CornerClass::closed;
    crossing += c == CornerClass::crossing;
  }
  if (open == 3) return 1;
  if (closed == 3) return 2;
  if (crossing == 3) return 3;
  if (open == 2) return closed == 1 ? 4 : 5;
  if (closed == 2) return open == 1 ? 6 : 7;
  if (crossing == 2) return open == 1 ? 8 : 9;
  return 10;
}

int classify_triangle_case(const StarGraph& expanded, const ExpansionMap& map,
                           const TransitionSystem& t, std::size_t triangle) {
  if (triangle >= map.triangles.size()) {
    throw std::invalid_argument("no such triangle in the expansion map");
  }
  std::array<CornerClass, 3> classes{};
  for (int k = 0; k < 3; ++k) {
    const auto v = expanded.find_vertex(map.triangles[triangle].corners[k]);
    if (!v) throw std::invalid_argument("expansion map names an unknown corner");
    classes[k] = classify_triangle_vertex(expanded, map, t, *v);
  }
  return classify_corner_classes(classes);
}

TransitionSystem lift_transition_system(const StarGraph& g, const StarGraph& expanded,
                                        const ExpansionMap& map,
                                        const TransitionSystem& t_expanded) {
  if (!is_valid_transition_system(expanded, t_expanded)) {
    throw std::invalid_argument("transition system is not valid for the expansion");
  }
  auto to_original = [&](int h) {
    auto found = g.find_half_edge(expanded.half_edge_name(h));
    if (!found) throw std::invalid_argument("half-edge missing from the original graph");
    return *found;
  };
  TransitionSystem t;
  t.mate.assign(g.half_edge_count(), -1);
  std::vector<char> lifted(g.vertex_count(), 0);
  for (const auto& tri : resolve(g, expanded, map)) {
    lifted[tri.original] = 1;
    std::vector<char> on_triangle(expanded.half_edge_count(), 0);
    for (int k = 0; k < 3; ++k) on_triangle[tri.prev[k]] = on_triangle[tri.next[k]] = 1;
    for (const auto& pair : tri.external) {
      for (int x : pair) {
        int y = t_expanded.mate[x];
        for (int guard = 0; on_triangle[y]; ++guard) {
          if (guard > 3) throw std::logic_error("through-trace did not leave the triangle");
          y = t_expanded.mate[expanded.partner(y)];
        }
        t.mate[to_original(x)] = to_original(y);
      }
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (lifted[v]) continue;
    for (int h : g.order(v)) {
      const int h_expanded = *expanded.find_half_edge(g.half_edge_name(h));
      t.mate[h] = to_original(t_expanded.mate[h_expanded]);
    }
  }
  return t;
}

std::string describe_walk(const StarGraph& g, const ClosedWalk& w) {
  std::string out;
  for (const auto& p : w.passes()) {
    if (!out.empty()) out += ' ';
    out += g.vertex_name(p.vertex) + ":" + g.half_edge_name(p.first) + ">" +
           g.half_edge_name(p.second);
  }
  return out;
}

ObstructCertificate lift_obstruct(const StarGraph& g, const StarGraph& expanded,
                                  const ExpansionMap& map, const ObstructCertificate& cert) {
  if (!verify_obstruct(expanded, cert)) {
    throw std::invalid_argument("obstruct certificate does not verify on the expansion");
  }
  const auto t_expanded = complete_transition_system(expanded, {cert.walk_a, cert.walk_b});
  const auto t = lift_transition_system(g, expanded, map, t_expanded);
  const auto walks = cycles_of_transition_system(g, t);

  std::vector<int> walk_of_edge(g.edge_count(), -1);
  for (std::size_t i = 0; i < walks.size(); ++i) {
    for (int e : walks[i].edges(g)) walk_of_edge[e] = static_cast<int>(i);
  }
  auto image = [&](const ClosedWalk& w) {
    for (const auto& p : w.passes()) {
      if (auto h = g.find_half_edge(expanded.half_edge_name(p.second))) {
        return walk_of_edge[g.edge_of(*h)];
      }
    }
    return -1;
  };

  std::optional<ObstructCertificate> lifted;
  const int ia = image(cert.walk_a);
  const int ib = image(cert.walk_b);
  if (ia >= 0 && ib >= 0 && ia != ib) {
    const auto& a = walks[std::min(ia, ib)];
    const auto& b = walks[std::max(ia, ib)];
    if (crossings(g, a, b).count == 1) lifted = make_certificate(g, a, b);
  }
  for (std::size_t i = 0; !lifted && i < walks.size(); ++i) {
    for (std::size_t j = i + 1; j < walks.size(); ++j) {
      if (crossings(g, walks[i], walks[j]).count == 1) {
        lifted = make_certificate(g, walks[i], walks[j]);
        break;
      }
    }
  }

  std::string partition;
  for (const auto& w : walks) partition += describe_walk(g, w) + "\n";
  if (!lifted) {
    throw LiftingFailed("lifting failed: no lifted walk pair has exactly one crossing",
                        partition);
  }
  if (!verify_obstruct(g, *lifted)) {
    throw LiftingFailed("lifting failed: lifted certificate does not verify", partition);
  }
  return *lifted;
}

}  // namespace starplanar
