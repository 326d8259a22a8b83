#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace starplanar {

// Lexicographically least rotation of `seq`.
template <class T>
std::vector<T> least_rotation(std::span<const T> seq) {
  const std::size_t n = seq.size();
  std::vector<T> best(seq.begin(), seq.end());
  std::vector<T> candidate(n);
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) candidate[i] = seq[(r + i) % n];
    if (candidate < best) best = candidate;
  }
  return best;
}

// Least sequence among all rotations and reversed rotations.
template <class T>
std::vector<T> canonical_unoriented(std::span<const T> seq) {
  const std::vector<T> reversed(seq.rbegin(), seq.rend());
  auto forward = least_rotation(seq);
  auto backward = least_rotation(std::span<const T>(reversed));
  return std::min(forward, backward);
}

// A cyclic order of distinct half-edge indices, considered up to rotation and
// reversal. The stored sequence is kept as given; equality goes through the
// canonical form.
class CyclicOrder {
 public:
  CyclicOrder() = default;
  explicit CyclicOrder(std::vector<int> sequence);

  std::span<const int> sequence() const { return sequence_; }
  std::size_t size() const { return sequence_.size(); }
  bool contains(int h) const;
  // Index of `h` in the stored sequence; throws std::invalid_argument if absent.
  std::size_t position(int h) const;

  CyclicOrder reversed() const;
  std::vector<int> canonical() const;

  friend bool operator==(const CyclicOrder& a, const CyclicOrder& b) {
    return a.size() == b.size() && a.canonical() == b.canonical();
  }

 private:
  std::vector<int> sequence_;
};

// True iff positions q1, q2 lie on different arcs cut out by p1, p2 on a
// cycle. All four positions must be distinct.
constexpr bool alternating_positions(std::size_t p1, std::size_t p2,
                                     std::size_t q1, std::size_t q2) {
  const auto lo = std::min(p1, p2);
  const auto hi = std::max(p1, p2);
  const bool q1_inside = lo < q1 && q1 < hi;
  const bool q2_inside = lo < q2 && q2 < hi;
  return q1_inside != q2_inside;
}

// Whether the pairs `p` and `q` interleave in `order`. Throws
// std::invalid_argument unless the four half-edges are distinct members.
bool alternates(const CyclicOrder& order, std::pair<int, int> p,
                std::pair<int, int> q);

}  // namespace starplanar
