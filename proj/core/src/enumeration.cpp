#include "chordal/enumeration.hpp"

#include <algorithm>
#include <string>

#include "chordal/error.hpp"

namespace chordal {
namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// k-th (0-based) lexicographic permutation of `items` (sorted).
std::vector<VertexId> unrank(std::vector<VertexId> items, std::uint64_t k) {
  std::vector<VertexId> out;
  while (!items.empty()) {
    std::uint64_t f = factorial(static_cast<int>(items.size()) - 1);
    auto idx = static_cast<std::size_t>(k / f);
    k %= f;
    out.push_back(items[idx]);
    items.erase(items.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return out;
}

}  // namespace

CircularOrderEnumerator::CircularOrderEnumerator(const Graph& g, int cap)
    : graph_(g), vertices_(g.vertices().begin(), g.vertices().end()) {
  if (g.num_vertices() > cap) {
    throw Error(ErrorKind::kTooLargeInstance,
                "enumeration: " + std::to_string(g.num_vertices()) + " vertices exceeds cap " + std::to_string(cap));
  }
  rank_space_ = vertices_.empty() ? 1 : factorial(static_cast<int>(vertices_.size()) - 1);
}

std::uint64_t CircularOrderEnumerator::count() const {
  const auto n = vertices_.size();
  if (n < 3) return 1;
  return rank_space_ / 2;
}

std::pair<std::uint64_t, std::uint64_t> CircularOrderEnumerator::chunk(int index, int chunks) const {
  if (chunks < 1 || index < 0 || index >= chunks) throw Error(ErrorKind::kInvalidParameter, "bad chunk index");
  auto c = static_cast<std::uint64_t>(chunks);
  auto i = static_cast<std::uint64_t>(index);
  return {rank_space_ * i / c, rank_space_ * (i + 1) / c};
}

void CircularOrderEnumerator::for_each_order(std::uint64_t begin, std::uint64_t end,
                                             const std::function<void(const std::vector<VertexId>&)>& fn) const {
  end = std::min(end, rank_space_);
  if (begin >= end) return;
  if (vertices_.empty()) {
    fn({});
    return;
  }
  std::vector<VertexId> rest(vertices_.begin() + 1, vertices_.end());
  std::vector<VertexId> perm = unrank(rest, begin);
  std::vector<VertexId> order(vertices_.size());
  order[0] = vertices_[0];
  for (std::uint64_t r = begin; r < end; ++r) {
    if (perm.size() < 2 || perm.front() < perm.back()) {
      std::copy(perm.begin(), perm.end(), order.begin() + 1);
      fn(order);
    }
    std::next_permutation(perm.begin(), perm.end());
  }
}

void CircularOrderEnumerator::for_each_drawing(std::uint64_t begin, std::uint64_t end,
                                               const std::function<void(const CircularDrawing&)>& fn) const {
  for_each_order(begin, end, [&](const std::vector<VertexId>& order) { fn(make_circular(graph_, order)); });
}

}  // namespace chordal
