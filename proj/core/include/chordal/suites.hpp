#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "chordal/caps.hpp"
#include "chordal/drawing.hpp"
#include "chordal/serialize.hpp"

namespace chordal {

struct SuiteFailure {
  std::string instance;
  std::string name;
  long lhs = 0;
  long rhs = 0;
  std::string detail;
};

struct VerificationReport {
  std::string suite;
  long instances = 0;
  std::vector<SuiteFailure> failures;
  /// Checks not run because an instance exceeded a cap.
  long skipped = 0;
  /// Suite-specific tallies, e.g. enumerated circular orders.
  std::map<std::string, long> counts;
  std::vector<std::string> notes;
  std::optional<long> wall_time_ms;

  bool ok() const { return failures.empty(); }
};

/// Failures, counts and notes in a fixed key order; wall_time_ms only when set.
Json to_json(const VerificationReport& r);

struct SuiteOptions {
  std::uint64_t seed = 0;
  /// Number of random drawings for the random-drawing suites.
  int seeds = 200;
  int max_vertices = 9;
  int max_edges = 14;
  /// Parameter list overriding the suite default (t, k or n values).
  std::vector<int> params;
  /// Second parameter list (m values for "product").
  std::vector<int> params2;
  int max_division = 2;
  int jobs = 1;
  Caps caps;
  bool force = false;
  /// Hadwiger/Hajos chains inside "width-bounds".
  bool minor_chain = true;
};

/// Names accepted by run_suite, in a fixed order.
const std::vector<std::string>& suite_names();

/// Throws Error(kInvalidParameter) for unknown names or bad parameters.
VerificationReport run_suite(const std::string& name, const SuiteOptions& options = {});

/// Connected drawing: n uniform in [3, max_n], a random spanning tree topped
/// up with random extra edges to a uniform edge count of at most max_edges,
/// vertices in a random circular order.
CircularDrawing random_circular_drawing(std::mt19937_64& rng, int max_n, int max_edges);

/// All trees on n vertices (ids 0..n-1) up to isomorphism.
std::vector<Graph> nonisomorphic_trees(int n);

/// Every component is a single vertex or a star.
bool is_star_forest(const Graph& g);

/// Nested polygon fixture with rad(M_D) >= 2t: the measured (2,5), (4,4),
/// (7,4) drawings for t = 1, 2, 3, and for larger t the first 4-chord ring
/// stack that reaches the radius.
CircularDrawing cycle_layer_fixture(int t);

}  // namespace chordal
