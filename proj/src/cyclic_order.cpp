#include "starplanar/cyclic_order.hpp"

#include <stdexcept>
#include <string>
#include <unordered_set>

namespace starplanar {

CyclicOrder::CyclicOrder(std::vector<int> sequence)
    : sequence_(std::move(sequence)) {
  std::unordered_set<int> seen;
  for (int h : sequence_) {
    if (!seen.insert(h).second) {
      throw std::invalid_argument("cyclic order repeats half-edge " +
                                  std::to_string(h));
    }
  }
}

bool CyclicOrder::contains(int h) const {
  return std::find(sequence_.begin(), sequence_.end(), h) != sequence_.end();
}

std::size_t CyclicOrder::position(int h) const {
  auto it = std::find(sequence_.begin(), sequence_.end(), h);
  if (it == sequence_.end()) {
    throw std::invalid_argument("half-edge " + std::to_string(h) +
                                " not in cyclic order");
  }
  return static_cast<std::size_t>(it - sequence_.begin());
}

CyclicOrder CyclicOrder::reversed() const {
  return CyclicOrder(std::vector<int>(sequence_.rbegin(), sequence_.rend()));
}

std::vector<int> CyclicOrder::canonical() const {
  return canonical_unoriented(std::span<const int>(sequence_));
}

bool alternates(const CyclicOrder& order, std::pair<int, int> p,
                std::pair<int, int> q) {
  const int ids[] = {p.first, p.second, q.first, q.second};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (ids[i] == ids[j]) {
        throw std::invalid_argument("alternation needs four distinct half-edges");
      }
    }
  }
  return alternating_positions(order.position(p.first), order.position(p.second),
                               order.position(q.first), order.position(q.second));
}

}  // namespace starplanar
