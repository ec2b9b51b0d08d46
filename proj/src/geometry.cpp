// SPDX-License-Identifier: Apache-2.0
#include "spout/geometry.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <string>

#include "spout/error.hpp"

namespace spout {

using std::numbers::pi;

namespace {

double cross(Point o, Point a, Point b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_segment(Point a, Point b, Point p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_intersect(Point a, Point b, Point c, Point d) {
  const double d1 = cross(c, d, a);
  const double d2 = cross(c, d, b);
  const double d3 = cross(a, b, c);
  const double d4 = cross(a, b, d);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
    return true;
  }
  if (d1 == 0 && on_segment(c, d, a)) return true;
  if (d2 == 0 && on_segment(c, d, b)) return true;
  if (d3 == 0 && on_segment(a, b, c)) return true;
  if (d4 == 0 && on_segment(a, b, d)) return true;
  return false;
}

double segment_distance_to_origin(Point a, Point b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0 ? -(a.x * dx + a.y * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(a.x + t * dx, a.y + t * dy);
}

// Rejects rings whose edges cross themselves or any other ring's edges.
void check_simple(const std::vector<Ring>& rings) {
  struct Edge {
    Point a, b;
    std::size_t ring, index;
  };
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < rings.size(); ++r) {
    const Ring& ring = rings[r];
    for (std::size_t i = 0; i < ring.size(); ++i) {
      edges.push_back({ring[i], ring[(i + 1) % ring.size()], r, i});
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& e = edges[i];
      const Edge& f = edges[j];
      if (e.ring == f.ring) {
        const std::size_t n = rings[e.ring].size();
        const bool adjacent = (e.index + 1) % n == f.index || (f.index + 1) % n == e.index;
        if (adjacent) continue;
      }
      if (segments_intersect(e.a, e.b, f.a, f.b)) {
        throw DomainError("multipolygon: ring " + std::to_string(e.ring) + " edge " +
                          std::to_string(e.index) + " intersects ring " +
                          std::to_string(f.ring) + " edge " + std::to_string(f.index));
      }
    }
  }
}

bool polygon_contains(const RegularPolygon& poly, Point p) {
  const double r = p.norm();
  if (r < poly.r_in() || r > poly.r_out()) return false;
  const int sides = poly.sides();
  const double rc = poly.r_c();
  // Edge k has outward normal at angle pi/2 + (2k + 1) pi / L.
  for (int k = 0; k < sides; ++k) {
    const double angle = pi / 2 + (2.0 * k + 1.0) * pi / sides;
    if (p.x * std::cos(angle) + p.y * std::sin(angle) > rc) return false;
  }
  return true;
}

bool multipolygon_contains(const MultiPolygon& mp, Point p) {
  const BoundingBox& bb = mp.bounds();
  if (p.x < bb.xmin || p.x > bb.xmax || p.y < bb.ymin || p.y > bb.ymax) return false;
  bool inside = false;
  for (const Ring& ring : mp.rings()) {
    if (ring_contains(ring, p)) inside = !inside;
  }
  return inside;
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

Annulus::Annulus(double r_in, double r_out) : r_in_(r_in), r_out_(r_out) {
  if (!(std::isfinite(r_in) && std::isfinite(r_out) && r_in >= 0.0 && r_in < r_out)) {
    throw DomainError("annulus requires 0 <= r_in < r_out");
  }
}

RegularPolygon::RegularPolygon(int sides, double r_out, double r_in)
    : sides_(sides), r_out_(r_out), r_in_(r_in) {
  if (sides < 3) throw DomainError("regular polygon requires L >= 3");
  if (!(std::isfinite(r_out) && r_out > 0.0)) {
    throw DomainError("regular polygon requires r_out > 0");
  }
  if (!(std::isfinite(r_in) && r_in >= 0.0 && r_in <= r_c())) {
    throw DomainError("regular polygon requires 0 <= r_in <= r_c");
  }
  if (!(area(Region(*this)) > 0.0)) throw DomainError("regular polygon has zero area");
}

double RegularPolygon::r_c() const { return corner_break_radius(*this); }

MultiPolygon::MultiPolygon(std::vector<Ring> rings) : rings_(std::move(rings)) {
  if (rings_.empty()) throw DomainError("multipolygon requires at least one ring");
  bounds_ = {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
             -std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (const Ring& ring : rings_) {
    if (ring.size() < 3) throw DomainError("multipolygon ring needs at least 3 vertices");
    for (const Point& v : ring) {
      if (!(std::isfinite(v.x) && std::isfinite(v.y))) {
        throw DomainError("multipolygon vertex is not finite");
      }
      bounds_.xmin = std::min(bounds_.xmin, v.x);
      bounds_.ymin = std::min(bounds_.ymin, v.y);
      bounds_.xmax = std::max(bounds_.xmax, v.x);
      bounds_.ymax = std::max(bounds_.ymax, v.y);
    }
  }
  check_simple(rings_);
  // With no crossings, a ring nested inside an odd number of others is a hole.
  for (std::size_t i = 0; i < rings_.size(); ++i) {
    int depth = 0;
    for (std::size_t j = 0; j < rings_.size(); ++j) {
      if (i != j && ring_contains(rings_[j], rings_[i].front())) ++depth;
    }
    const double a = std::abs(ring_signed_area(rings_[i]));
    area_ += depth % 2 == 0 ? a : -a;
  }
  if (!(area_ > 0.0)) throw DomainError("multipolygon has zero area");
}

const char* to_string(RegionKind kind) {
  switch (kind) {
    case RegionKind::annulus:
      return "annulus";
    case RegionKind::polygon:
      return "polygon";
    case RegionKind::multipolygon:
      return "multipolygon";
  }
  return "unknown";
}

double ring_signed_area(const Ring& ring) {
  double twice = 0.0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % ring.size()];
    twice += a.x * b.y - b.x * a.y;
  }
  return 0.5 * twice;
}

bool ring_contains(const Ring& ring, Point p) {
  bool inside = false;
  for (std::size_t i = 0, j = ring.size() - 1; i < ring.size(); j = i++) {
    const Point& a = ring[i];
    const Point& b = ring[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x_cross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x_cross) inside = !inside;
    }
  }
  return inside;
}

double area(const Region& region) {
  return std::visit(
      overloaded{
          [](const Annulus& a) { return pi * (a.r_out() * a.r_out() - a.r_in() * a.r_in()); },
          [](const RegularPolygon& p) {
            const double L = p.sides();
            return 0.5 * L * p.r_out() * p.r_out() * std::sin(2 * pi / L) -
                   pi * p.r_in() * p.r_in();
          },
          [](const MultiPolygon& m) { return m.area(); }},
      region.shape());
}

double corner_break_radius(const RegularPolygon& polygon) {
  const double L = polygon.sides();
  return polygon.r_out() * std::sin(pi * (L - 2) / (2 * L));
}

BoundingBox bounding_box(const Region& region) {
  return std::visit(overloaded{[](const Annulus& a) {
                                 const double r = a.r_out();
                                 return BoundingBox{-r, -r, r, r};
                               },
                               [](const RegularPolygon& p) {
                                 const double r = p.r_out();
                                 return BoundingBox{-r, -r, r, r};
                               },
                               [](const MultiPolygon& m) { return m.bounds(); }},
                    region.shape());
}

DistanceSupport distance_support(const Region& region) {
  return std::visit(
      overloaded{[](const Annulus& a) { return DistanceSupport{a.r_in(), a.r_out()}; },
                 [](const RegularPolygon& p) { return DistanceSupport{p.r_in(), p.r_out()}; },
                 [](const MultiPolygon& m) {
                   double r_min = multipolygon_contains(m, Point{0, 0})
                                      ? 0.0
                                      : std::numeric_limits<double>::infinity();
                   double r_max = 0.0;
                   for (const Ring& ring : m.rings()) {
                     for (std::size_t i = 0; i < ring.size(); ++i) {
                       const Point& a = ring[i];
                       const Point& b = ring[(i + 1) % ring.size()];
                       r_min = std::min(r_min, segment_distance_to_origin(a, b));
                       r_max = std::max(r_max, a.norm());
                     }
                   }
                   return DistanceSupport{r_min, r_max};
                 }},
      region.shape());
}

double distance_pdf(const Region& region, double r) {
  return std::visit(
      overloaded{
          [r](const Annulus& a) {
            if (r < a.r_in() || r > a.r_out()) return 0.0;
            return 2 * pi * r / area(Region(a));
          },
          [r](const RegularPolygon& p) {
            if (r < p.r_in() || r > p.r_out()) return 0.0;
            const double A = area(Region(p));
            const double rc = p.r_c();
            if (r <= rc) return 2 * pi * r / A;
            const double density =
                (2 * pi * r - 2.0 * p.sides() * r * std::acos(std::min(1.0, rc / r))) / A;
            return std::max(0.0, density);
          },
          [](const MultiPolygon&) -> double {
            throw UnsupportedOperation(
                "distance_pdf has no closed form for a multipolygon; use sampling or a grid");
          }},
      region.shape());
}

bool contains(const Region& region, Point p) {
  return std::visit(overloaded{[p](const Annulus& a) {
                                 const double r = p.norm();
                                 return r >= a.r_in() && r <= a.r_out();
                               },
                               [p](const RegularPolygon& poly) { return polygon_contains(poly, p); },
                               [p](const MultiPolygon& m) { return multipolygon_contains(m, p); }},
                    region.shape());
}

Point sample_point(const Region& region, CounterRng& rng) {
  if (const Annulus* a = region.get_if<Annulus>()) {
    const double lo = a->r_in() * a->r_in();
    const double hi = a->r_out() * a->r_out();
    const double r = std::sqrt(lo + rng.uniform() * (hi - lo));
    const double theta = 2 * pi * rng.uniform();
    return Point{r * std::cos(theta), r * std::sin(theta)};
  }
  const BoundingBox bb = bounding_box(region);
  for (std::size_t attempt = 0; attempt < max_rejections; ++attempt) {
    const Point p{bb.xmin + rng.uniform() * bb.width(), bb.ymin + rng.uniform() * bb.height()};
    if (contains(region, p)) return p;
  }
  throw SamplingError("rejection sampling missed the region " +
                      std::to_string(max_rejections) + " times in a row");
}

double sample_distance(const Region& region, CounterRng& rng) {
  if (const Annulus* a = region.get_if<Annulus>()) {
    const double lo = a->r_in() * a->r_in();
    const double hi = a->r_out() * a->r_out();
    return std::sqrt(lo + rng.uniform() * (hi - lo));
  }
  return sample_point(region, rng).norm();
}

Region scale_to_area(const Region& region, double target) {
  if (!(target > 0.0 && std::isfinite(target))) throw DomainError("target area must be > 0");
  const double s = std::sqrt(target / area(region));
  return std::visit(overloaded{[s](const Annulus& a) {
                                 return Region(Annulus(s * a.r_in(), s * a.r_out()));
                               },
                               [s](const RegularPolygon& p) {
                                 return Region(RegularPolygon(p.sides(), s * p.r_out(),
                                                              s * p.r_in()));
                               },
                               [s](const MultiPolygon& m) {
                                 std::vector<Ring> rings = m.rings();
                                 for (Ring& ring : rings) {
                                   for (Point& v : ring) {
                                     v.x *= s;
                                     v.y *= s;
                                   }
                                 }
                                 return Region(MultiPolygon(std::move(rings)));
                               }},
                    region.shape());
}

std::vector<Point> grid_points(const Region& region, std::size_t count_target) {
  if (count_target == 0) throw DomainError("grid count_target must be >= 1");
  const double h = std::sqrt(area(region) / static_cast<double>(count_target));
  const BoundingBox bb = bounding_box(region);
  const auto nx = static_cast<std::size_t>(std::ceil(bb.width() / h));
  const auto ny = static_cast<std::size_t>(std::ceil(bb.height() / h));
  std::vector<Point> points;
  points.reserve(count_target + count_target / 10);
  for (std::size_t j = 0; j < ny; ++j) {
    const double y = bb.ymin + (static_cast<double>(j) + 0.5) * h;
    for (std::size_t i = 0; i < nx; ++i) {
      const Point p{bb.xmin + (static_cast<double>(i) + 0.5) * h, y};
      if (contains(region, p)) points.push_back(p);
    }
  }
  if (points.empty()) {
    throw DomainError("grid has no points inside the region; increase count_target");
  }
  return points;
}

}  // namespace spout
