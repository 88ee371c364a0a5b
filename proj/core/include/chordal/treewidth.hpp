#pragma once

#include "chordal/caps.hpp"
#include "chordal/decomposition.hpp"
#include "chordal/graph.hpp"

namespace chordal {

struct TreewidthResult {
  int width = -1;
  /// Optimal decomposition; validate_decomposition returns `width` on it.
  TreeDecomposition decomposition;
};

/// Exact treewidth by dynamic programming over vertex subsets
/// (TW(S) = min over v in S of max(TW(S - v), |Q(S - v, v)|)). The empty graph
/// has treewidth -1. Throws Error(kTooLargeInstance) above `cap` vertices.
TreewidthResult treewidth_exact(const Graph& g, int cap = Caps{}.treewidth);

/// Exact treewidth for larger sparse graphs (up to 256 vertices): safe
/// simplicial/almost-simplicial reductions, a contraction lower bound and a
/// min-fill upper bound, then a memoised search over (component, separator)
/// pairs for each candidate width. Exponential in the worst case.
TreewidthResult treewidth_sparse_exact(const Graph& g);

/// Uses the subset DP up to `dp_cap` vertices, the sparse search beyond.
TreewidthResult treewidth_auto(const Graph& g, int dp_cap = Caps{}.treewidth);

/// Contraction degeneracy lower bound (minor-min-width).
int treewidth_lower_bound(const Graph& g);

/// Greedy min-fill elimination; an upper bound with its decomposition.
TreewidthResult treewidth_min_fill(const Graph& g);

}  // namespace chordal
