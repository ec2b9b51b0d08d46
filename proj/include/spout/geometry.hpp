// SPDX-License-Identifier: Apache-2.0
//
// Interferer regions around a receiver fixed at the origin. The reference
// transmitter sits at unit distance, so every length here is in units of the
// reference-link distance.
#pragma once

#include <cmath>
#include <cstddef>
#include <variant>
#include <vector>

#include "spout/random.hpp"

namespace spout {

struct Point {
  double x = 0.0;
  double y = 0.0;

  double norm() const { return std::hypot(x, y); }
};

struct BoundingBox {
  double xmin = 0.0;
  double ymin = 0.0;
  double xmax = 0.0;
  double ymax = 0.0;

  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
};

/// Ring r_in <= |p| <= r_out. A disk is an annulus with r_in = 0.
class Annulus {
 public:
  Annulus(double r_in, double r_out);

  double r_in() const { return r_in_; }
  double r_out() const { return r_out_; }

 private:
  double r_in_;
  double r_out_;
};

/// Regular L-gon with circumradius r_out, centred on the receiver, with a
/// disk of radius r_in removed. One vertex points along +y.
class RegularPolygon {
 public:
  RegularPolygon(int sides, double r_out, double r_in = 0.0);

  int sides() const { return sides_; }
  double r_out() const { return r_out_; }
  double r_in() const { return r_in_; }
  /// Apothem r_out * cos(pi / L): radius where the distance pdf changes branch.
  double r_c() const;

 private:
  int sides_;
  double r_out_;
  double r_in_;
};

using Ring = std::vector<Point>;

/// Union of simple rings under the even-odd rule, so a ring nested inside
/// another is a hole and disjoint rings are separate parts.
class MultiPolygon {
 public:
  explicit MultiPolygon(std::vector<Ring> rings);

  const std::vector<Ring>& rings() const { return rings_; }
  double area() const { return area_; }
  const BoundingBox& bounds() const { return bounds_; }

 private:
  std::vector<Ring> rings_;
  double area_ = 0.0;
  BoundingBox bounds_;
};

enum class RegionKind { annulus, polygon, multipolygon };

/// Immutable interferer region.
class Region {
 public:
  using Shape = std::variant<Annulus, RegularPolygon, MultiPolygon>;

  Region(Annulus a) : shape_(std::move(a)) {}         // NOLINT(google-explicit-constructor)
  Region(RegularPolygon p) : shape_(std::move(p)) {}  // NOLINT(google-explicit-constructor)
  Region(MultiPolygon m) : shape_(std::move(m)) {}    // NOLINT(google-explicit-constructor)

  RegionKind kind() const { return static_cast<RegionKind>(shape_.index()); }
  const Shape& shape() const { return shape_; }

  template <class T>
  const T* get_if() const {
    return std::get_if<T>(&shape_);
  }

 private:
  Shape shape_;
};

const char* to_string(RegionKind kind);

double area(const Region& region);
double corner_break_radius(const RegularPolygon& polygon);
BoundingBox bounding_box(const Region& region);

struct DistanceSupport {
  double r_min;
  double r_max;
};

/// Range of |p| over the region.
DistanceSupport distance_support(const Region& region);

/// Density of the distance from the origin to a uniform point in the region.
/// Throws UnsupportedOperation for multi-polygons.
double distance_pdf(const Region& region, double r);

/// Interior test. Points exactly on an edge or exclusion circle may resolve
/// either way; the set is of measure zero.
bool contains(const Region& region, Point p);

/// Consecutive rejection-sampling misses tolerated before SamplingError.
inline constexpr std::size_t max_rejections = 1'000'000;

Point sample_point(const Region& region, CounterRng& rng);
double sample_distance(const Region& region, CounterRng& rng);

/// Uniform scaling about the origin so that area(result) == target.
Region scale_to_area(const Region& region, double target);

/// Square lattice with spacing sqrt(area / count_target), aligned to the
/// bounding box at half-spacing offsets; returns the lattice points inside.
std::vector<Point> grid_points(const Region& region, std::size_t count_target);

/// Even-odd point-in-ring test.
bool ring_contains(const Ring& ring, Point p);
/// Signed shoelace area; positive for counter-clockwise rings.
double ring_signed_area(const Ring& ring);

}  // namespace spout
