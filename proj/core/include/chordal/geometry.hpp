#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace chordal {

using Rational = mpq_class;

/// "p/q" (or "p" for integers), always in lowest terms.
std::string to_string(const Rational& q);
/// Accepts "p/q", "p" and finite decimals such as "-0.125". Throws
/// Error(kParseError) otherwise or on a zero denominator.
Rational parse_rational(std::string_view text);

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const Point& a, const Point& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; }
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Rational& s, const Point& a);

Rational cross(const Point& a, const Point& b);
Rational dot(const Point& a, const Point& b);
/// Sign of cross(b - a, c - a): +1 for a left turn.
int orientation(const Point& a, const Point& b, const Point& c);

/// Point of the unit circle with rational parameter t.
Point circle_point(const Rational& t);

/// True iff `p` lies in the open segment (a, b).
bool in_open_segment(const Point& p, const Point& a, const Point& b);

/// Intersection of the open segments (a, b) and (c, d) when they cross at a
/// single interior point of both. Collinear overlaps and touching endpoints
/// return nullopt; callers that must reject overlaps check collinearity first.
std::optional<Point> proper_intersection(const Point& a, const Point& b, const Point& c, const Point& d);

bool collinear_overlap(const Point& a, const Point& b, const Point& c, const Point& d);

/// Parameter s with p = a + s (b - a), for p on the line through a, b.
Rational segment_parameter(const Point& p, const Point& a, const Point& b);

/// Half-plane angular comparison of direction vectors, starting at the
/// positive x-axis and increasing counterclockwise.
bool angle_less(const Point& u, const Point& v);

/// 2x the signed area of a closed polygon.
Rational twice_signed_area(const std::vector<Point>& polygon);

/// Strict interior test (points on the boundary return false).
bool strictly_inside(const Point& p, const std::vector<Point>& polygon);

double to_double(const Rational& q);

}  // namespace chordal
