#include <gtest/gtest.h>

#include <random>
#include <set>

#include "chordal/algorithms.hpp"
#include "chordal/dominance.hpp"
#include "chordal/error.hpp"
#include "chordal/extremal.hpp"
#include "chordal/planarisation.hpp"

using namespace chordal;

namespace {

// Independent predicate: does the ray p + s w (s > 0) meet the open segment (a, b)?
bool ray_hits_segment(const Point& p, const Point& w, const Point& a, const Point& b) {
  Point ab = b - a;
  Rational den = cross(w, ab);
  if (den == 0) return false;
  Point ap = a - p;
  Rational s = cross(ap, ab) / den;
  Rational u = cross(ap, w) / den;
  return s > 0 && u > 0 && u < 1;
}

const CircularDrawing& circular(const LabeledConstruction& c) { return std::get<CircularDrawing>(c.drawing); }

std::vector<EdgeId> all_edges(const CircularDrawing& d) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < d.graph().num_edges(); ++e) out.push_back(e);
  return out;
}

std::vector<AngularInterval> intervals(const CircularDrawing& d, const Point& p, const std::vector<EdgeId>& es) {
  std::vector<AngularInterval> out;
  for (EdgeId e : es) out.push_back(edge_interval(d, p, e));
  return out;
}

CircularDrawing triangle() { return circular(nested_polygon_drawing(1, 3)); }

CircularDrawing random_drawing(std::mt19937_64& rng, int n) {
  std::bernoulli_distribution coin(0.5);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  Graph g = Graph::on_range(n, std::move(edges));
  std::vector<VertexId> order(g.vertices().begin(), g.vertices().end());
  std::shuffle(order.begin(), order.end(), rng);
  return make_circular(g, order);
}

}  // namespace

TEST(EdgeInterval, SymmetricChordAboveCentre) {
  Graph g = Graph::on_range(2, {{0, 1}});
  CircularDrawing d(g, {0, 1}, {{0, Rational(1, 2)}, {1, Rational(2)}});
  AngularInterval iv = edge_interval(d, Point{0, 0}, 0);
  EXPECT_TRUE(iv.contains(Point{0, 1}));
  EXPECT_FALSE(iv.contains(Point{0, -1}));
  EXPECT_EQ(iv.start, (Point{Rational(3, 5), Rational(4, 5)}));
  EXPECT_EQ(iv.end, (Point{Rational(-3, 5), Rational(4, 5)}));
  EXPECT_FALSE(iv.contains(iv.start));
  EXPECT_FALSE(iv.contains(iv.end));
}

TEST(EdgeInterval, PointOnChordIsRejected) {
  Graph g = Graph::on_range(2, {{0, 1}});
  CircularDrawing d(g, {0, 1}, {{0, Rational(-1)}, {1, Rational(1)}});
  EXPECT_THROW(
      {
        try {
          edge_interval(d, Point{0, 0}, 0);
        } catch (const Error& e) {
          EXPECT_EQ(e.kind(), ErrorKind::kPointOnChord);
          throw;
        }
      },
      Error);
}

TEST(EdgeInterval, MembershipMatchesRayPredicate) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coord(-40, 40);
  int checked = 0;
  int hits = 0;
  while (checked < 1000) {
    CircularDrawing d = random_drawing(rng, 6);
    if (d.graph().num_edges() == 0) continue;
    Point p{Rational(coord(rng), 97), Rational(coord(rng), 89)};
    for (EdgeId e = 0; e < d.graph().num_edges() && checked < 1000; ++e) {
      const Edge& ed = d.graph().edge(e);
      if (orientation(d.position(ed.u), d.position(ed.v), p) == 0) continue;
      AngularInterval iv = edge_interval(d, p, e);
      Point w{coord(rng), coord(rng)};
      if (w.x == 0 && w.y == 0) continue;
      bool expected = ray_hits_segment(p, w, d.position(ed.u), d.position(ed.v));
      EXPECT_EQ(iv.contains(w), expected);
      hits += expected ? 1 : 0;
      ++checked;
    }
  }
  EXPECT_GT(hits, 50);
}

TEST(Dominance, EmptyAndSingleChordAreNotDominant) {
  EXPECT_FALSE(is_dominant({}));
  Graph g = Graph::on_range(2, {{0, 1}});
  CircularDrawing d(g, {0, 1}, {{0, Rational(1, 2)}, {1, Rational(2)}});
  std::vector<AngularInterval> one{edge_interval(d, Point{0, 0}, 0)};
  EXPECT_FALSE(is_dominant(one));
  EXPECT_EQ(min_ray_coverage(d, Point{0, 0}), 0);
}

TEST(Dominance, TriangleAroundCentre) {
  CircularDrawing d = triangle();
  ReferencePoint rp = reference_point(d);
  auto ivs = intervals(d, rp.point, all_edges(d));
  for (std::size_t i = 0; i < ivs.size(); ++i) {
    for (std::size_t j = i + 1; j < ivs.size(); ++j) {
      bool overlap = ivs[i].contains(ivs[j].start) || ivs[i].contains(ivs[j].end) ||
                     ivs[j].contains(ivs[i].start) || ivs[j].contains(ivs[i].end);
      EXPECT_TRUE(overlap);
    }
  }
  EXPECT_TRUE(is_dominant(ivs));
  EXPECT_EQ(min_ray_coverage(d, rp.point), 1);
  EXPECT_EQ(peel_layer(all_edges(d), d, rp.point), all_edges(d));

  // sampled directions agree with the sweep
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coord(-50, 50);
  for (int k = 0; k < 300; ++k) {
    Point w{coord(rng), coord(rng)};
    if (w.x == 0 && w.y == 0) continue;
    int n = 0;
    for (EdgeId e = 0; e < 3; ++e) {
      const Edge& ed = d.graph().edge(e);
      n += ray_hits_segment(rp.point, w, d.position(ed.u), d.position(ed.v)) ? 1 : 0;
    }
    EXPECT_GE(n, 1);
  }
}

TEST(PeelLayer, NestedChordIsNotMaximal) {
  // three pairwise crossing diagonals on points 0..5, plus a short chord 6-7
  // on the arc between 5 and 0
  Graph g = Graph::on_range(8, {{0, 3}, {1, 4}, {2, 5}, {6, 7}});
  std::vector<VertexId> order{0, 1, 2, 3, 4, 5, 6, 7};
  CircularDrawing d = make_circular(g, order);
  ReferencePoint rp = reference_point(d);
  std::vector<EdgeId> tri{*g.edge_id(0, 3), *g.edge_id(1, 4), *g.edge_id(2, 5)};
  EdgeId short_chord = *g.edge_id(6, 7);
  AngularInterval s = edge_interval(d, rp.point, short_chord);
  bool nested = false;
  for (EdgeId e : tri) nested = nested || s.subset_of(edge_interval(d, rp.point, e));
  EXPECT_TRUE(nested);
  EXPECT_EQ(peel_layer(all_edges(d), d, rp.point), tri);
}

TEST(PeelLayer, ResultIsMinimalMaximalAndIdempotent) {
  std::mt19937_64 rng(11);
  int tried = 0;
  for (int round = 0; round < 200 && tried < 40; ++round) {
    CircularDrawing d = random_drawing(rng, 7);
    ReferencePoint rp;
    try {
      rp = reference_point(d);
    } catch (const Error&) {
      continue;
    }
    auto es = all_edges(d);
    if (!is_dominant(intervals(d, rp.point, es))) {
      EXPECT_THROW(peel_layer(es, d, rp.point), Error);
      continue;
    }
    ++tried;
    auto layer = peel_layer(es, d, rp.point);
    auto ivs = intervals(d, rp.point, layer);
    ASSERT_TRUE(is_dominant(ivs));
    for (std::size_t i = 0; i < layer.size(); ++i) {
      auto fewer = ivs;
      fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
      EXPECT_FALSE(is_dominant(fewer));
      for (EdgeId f : es) {
        if (f != layer[i]) EXPECT_FALSE(ivs[i].subset_of(edge_interval(d, rp.point, f)));
      }
    }
    EXPECT_EQ(peel_layer(layer, d, rp.point), layer);
  }
  EXPECT_GE(tried, 10);
}

TEST(ReferencePoint, DeepestFaceAndInterior) {
  for (auto [layers, m] : std::vector<std::pair<int, int>>{{1, 3}, {2, 3}, {2, 5}, {3, 4}}) {
    CircularDrawing d = circular(nested_polygon_drawing(layers, m));
    Planarisation p = planarise(d);
    MapGraph mg = map_graph(p);
    ReferencePoint rp = reference_point(p, mg);
    // BFS by hand over face vertex sets
    std::vector<std::set<VertexId>> fv;
    for (const Face& f : p.faces) {
      auto vs = f.vertices();
      fv.emplace_back(vs.begin(), vs.end());
    }
    std::vector<int> dist(p.faces.size(), -1);
    dist[0] = 0;
    for (std::size_t level = 0; level < p.faces.size(); ++level) {
      bool grew = false;
      for (std::size_t a = 0; a < fv.size(); ++a) {
        if (dist[a] != static_cast<int>(level)) continue;
        for (std::size_t b = 0; b < fv.size(); ++b) {
          if (dist[b] >= 0) continue;
          for (VertexId v : fv[a]) {
            if (fv[b].count(v)) {
              dist[b] = static_cast<int>(level) + 1;
              grew = true;
              break;
            }
          }
        }
      }
      if (!grew) break;
    }
    int best = *std::max_element(dist.begin(), dist.end());
    EXPECT_EQ(dist[static_cast<std::size_t>(rp.face)], best);
    for (std::size_t f = 0; f < dist.size(); ++f) {
      if (dist[f] == best) {
        EXPECT_EQ(rp.face, static_cast<int>(f));
        break;
      }
    }
    std::vector<Point> poly;
    for (const Dart& dt : p.faces[static_cast<std::size_t>(rp.face)].walks.front().darts) poly.push_back(p.coords.at(dt.from));
    EXPECT_TRUE(strictly_inside(rp.point, poly));
  }
}

TEST(ReferencePoint, SingleChordHasNoInteriorFace) {
  Graph g = Graph::on_range(2, {{0, 1}});
  CircularDrawing d = make_circular(g, {0, 1});
  try {
    reference_point(d);
    FAIL() << "expected no-interior-face";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNoInteriorFace);
  }
}

TEST(ExtractCycleLayers, NestedPolygonFixtures) {
  for (auto [layers, m, t] : std::vector<std::tuple<int, int, int>>{{2, 5, 1}, {4, 4, 2}, {7, 4, 3}}) {
    LabeledConstruction c = nested_polygon_drawing(layers, m);
    ASSERT_GE(c.values.at("map_radius"), 2 * t);
    const CircularDrawing& d = circular(c);
    CycleLayers cl = extract_cycle_layers(d, t);
    ASSERT_EQ(static_cast<int>(cl.layers.size()), t);
    Report r = validate_cycle_layers(crossing_graph(d), cl);
    EXPECT_TRUE(r.ok()) << (r.first_failure() ? r.first_failure()->name : "");

    int coverage = min_ray_coverage(d, cl.center);
    EXPECT_GE(coverage, 2 * t - 1);
    int reach = (coverage + 1) / 2;
    std::set<EdgeId> residual;
    for (EdgeId e = 0; e < d.graph().num_edges(); ++e) residual.insert(e);
    for (int i = 0; i < t; ++i) {
      auto ivs = intervals(d, cl.center, cl.layers[static_cast<std::size_t>(i)]);
      EXPECT_LE(coverage_range(ivs).second, 2);
      EXPECT_TRUE(is_dominant(ivs));
      for (EdgeId e : cl.layers[static_cast<std::size_t>(i)]) residual.erase(e);
      std::vector<EdgeId> rest(residual.begin(), residual.end());
      EXPECT_GE(min_ray_coverage(d, cl.center, rest), 2 * (reach - i - 1) - 1);
    }
  }
}

TEST(ExtractCycleLayers, LargerT) {
  LabeledConstruction c = nested_polygon_drawing(4, 4);
  const CircularDrawing& d = circular(c);
  EXPECT_EQ(extract_cycle_layers(d, 0).layers.size(), 0u);
  try {
    extract_cycle_layers(d, 3);
    FAIL() << "expected radius-too-small";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kRadiusTooSmall);
  }
}

TEST(ValidateCycleLayers, TriangleAndBrokenCycle) {
  CircularDrawing d = triangle();
  CrossingGraph x = crossing_graph(d);
  CycleLayers ok;
  ok.layers = {{0, 1, 2}};
  EXPECT_TRUE(validate_cycle_layers(x, ok).ok());

  LabeledConstruction c = nested_polygon_drawing(1, 5);
  CrossingGraph x5 = crossing_graph(circular(c));
  CycleLayers broken;
  auto ring = std::get<IdSets>(c.witnesses.at("rings")).front();
  ring.pop_back();
  broken.layers = {ring};
  Report r = validate_cycle_layers(x5, broken);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.first_failure()->name, "layer-1-induces-cycle");
}

TEST(CycleLayers, JsonRoundTrip) {
  CircularDrawing d = circular(nested_polygon_drawing(2, 5));
  CycleLayers cl = extract_cycle_layers(d, 1);
  CycleLayers back = cycle_layers_from_json(to_json(cl));
  EXPECT_EQ(back.center, cl.center);
  EXPECT_EQ(back.deepest_face, cl.deepest_face);
  EXPECT_EQ(back.layers, cl.layers);
  EXPECT_TRUE(to_json(cl).at("center").at(0).is_string());
}
