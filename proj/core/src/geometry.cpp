#include "chordal/geometry.hpp"

#include <vector>

#include "chordal/error.hpp"

namespace chordal {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return Error(ErrorKind::kParseError, "not a rational: '" + s + "'"); };
  if (s.empty()) throw bad();
  try {
    auto dot_pos = s.find('.');
    if (dot_pos != std::string::npos) {
      std::string whole = s.substr(0, dot_pos);
      std::string frac = s.substr(dot_pos + 1);
      bool negative = !whole.empty() && whole[0] == '-';
      if (negative || (!whole.empty() && whole[0] == '+')) whole = whole.substr(1);
      if ((whole.empty() && frac.empty()) || frac.find_first_not_of("0123456789") != std::string::npos ||
          whole.find_first_not_of("0123456789") != std::string::npos) {
        throw bad();
      }
      mpz_class num(whole.empty() ? "0" : whole, 10);
      mpz_class den = 1;
      for (char ch : frac) {
        num = num * 10 + (ch - '0');
        den *= 10;
      }
      Rational q(num, den);
      q.canonicalize();
      return negative ? Rational(-q) : q;
    }
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto digits_ok = [](const std::string& x, bool allow_sign) {
      std::size_t start = allow_sign && !x.empty() && (x[0] == '-' || x[0] == '+') ? 1 : 0;
      return x.size() > start && x.find_first_not_of("0123456789", start) == std::string::npos;
    };
    if (!digits_ok(num, true) || !digits_ok(den, false)) throw bad();
    if (num[0] == '+') num = num.substr(1);
    mpz_class d(den, 10);
    if (d == 0) throw bad();
    Rational q(mpz_class(num, 10), d);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw bad();
  }
}

Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
Point operator*(const Rational& s, const Point& a) { return {s * a.x, s * a.y}; }

Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

int orientation(const Point& a, const Point& b, const Point& c) { return sgn(cross(b - a, c - a)); }

Point circle_point(const Rational& t) {
  Rational d = 1 + t * t;
  Point p{(1 - t * t) / d, 2 * t / d};
  p.x.canonicalize();
  p.y.canonicalize();
  return p;
}

bool in_open_segment(const Point& p, const Point& a, const Point& b) {
  if (orientation(a, b, p) != 0) return false;
  Point ab = b - a;
  Rational s = dot(p - a, ab);
  return s > 0 && s < dot(ab, ab);
}

std::optional<Point> proper_intersection(const Point& a, const Point& b, const Point& c, const Point& d) {
  int o1 = orientation(a, b, c);
  int o2 = orientation(a, b, d);
  int o3 = orientation(c, d, a);
  int o4 = orientation(c, d, b);
  if (o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0) return std::nullopt;
  if (o1 == o2 || o3 == o4) return std::nullopt;
  Point r = b - a;
  Point s = d - c;
  Rational t = cross(c - a, s) / cross(r, s);
  Point p = a + t * r;
  p.x.canonicalize();
  p.y.canonicalize();
  return p;
}

bool collinear_overlap(const Point& a, const Point& b, const Point& c, const Point& d) {
  if (orientation(a, b, c) != 0 || orientation(a, b, d) != 0) return false;
  Point ab = b - a;
  Rational len = dot(ab, ab);
  Rational sc = dot(c - a, ab);
  Rational sd = dot(d - a, ab);
  Rational lo = sc < sd ? sc : sd;
  Rational hi = sc < sd ? sd : sc;
  // positive-length overlap of [0, len] and [lo, hi]
  Rational start = lo > 0 ? lo : Rational(0);
  Rational end = hi < len ? hi : len;
  return start < end;
}

Rational segment_parameter(const Point& p, const Point& a, const Point& b) {
  Point ab = b - a;
  return dot(p - a, ab) / dot(ab, ab);
}

bool angle_less(const Point& u, const Point& v) {
  auto half = [](const Point& w) { return (w.y > 0 || (w.y == 0 && w.x > 0)) ? 0 : 1; };
  int hu = half(u);
  int hv = half(v);
  if (hu != hv) return hu < hv;
  return cross(u, v) > 0;
}

Rational twice_signed_area(const std::vector<Point>& polygon) {
  Rational area = 0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    area += cross(polygon[i], polygon[(i + 1) % polygon.size()]);
  }
  return area;
}

bool strictly_inside(const Point& p, const std::vector<Point>& polygon) {
  const std::size_t n = polygon.size();
  if (n < 3) return false;
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = polygon[i];
    const Point& b = polygon[(i + 1) % n];
    if (a == p || in_open_segment(p, a, b)) return false;
    // crossing-number test on the half-open edge
    if ((a.y > p.y) != (b.y > p.y)) {
      Rational x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace chordal
