#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "chordal/caps.hpp"
#include "chordal/drawing.hpp"
#include "chordal/graph.hpp"

namespace chordal {

/// Circular orders of V(g) up to rotation and reflection: the smallest vertex
/// is fixed first, the rest run through lexicographic permutations, and a
/// permutation is kept only if its first element is smaller than its last.
/// For n >= 3 this yields (n-1)!/2 orders. Work is split by permutation rank:
/// chunk k of c covers ranks [k*(n-1)!/c, (k+1)*(n-1)!/c).
class CircularOrderEnumerator {
 public:
  /// Throws Error(kTooLargeInstance) above `cap` vertices.
  explicit CircularOrderEnumerator(const Graph& g, int cap = Caps{}.enumeration);

  /// Number of orders emitted over all chunks.
  std::uint64_t count() const;
  /// (n-1)!, the rank space that chunks partition.
  std::uint64_t rank_space() const { return rank_space_; }

  /// Calls fn(order) for each kept order with rank in [begin, end), in rank order.
  void for_each_order(std::uint64_t begin, std::uint64_t end,
                      const std::function<void(const std::vector<VertexId>&)>& fn) const;
  void for_each_order(const std::function<void(const std::vector<VertexId>&)>& fn) const {
    for_each_order(0, rank_space_, fn);
  }
  /// Same stream as drawings (anchors from make_circular).
  void for_each_drawing(std::uint64_t begin, std::uint64_t end,
                        const std::function<void(const CircularDrawing&)>& fn) const;

  std::pair<std::uint64_t, std::uint64_t> chunk(int index, int chunks) const;

 private:
  Graph graph_;
  std::vector<VertexId> vertices_;
  std::uint64_t rank_space_ = 1;
};

}  // namespace chordal
