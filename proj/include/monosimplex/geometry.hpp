#pragma once

// Rational points, standard simplices and the positive diagonal-affine
// group that contains hyperbolic rotations and translations.

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "monosimplex/rational.hpp"

namespace monosimplex {

class Point {
 public:
  explicit Point(std::vector<Rational> coords);
  Point(std::initializer_list<Rational> coords) : Point(std::vector<Rational>(coords)) {}
  static Point zero(std::size_t dim);

  std::size_t dim() const noexcept { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Rational> coords() const noexcept { return coords_; }

  // Copy with coordinate `axis` shifted by `delta`.
  Point shifted(std::size_t axis, const Rational& delta) const;

  friend bool operator==(const Point&, const Point&) = default;
  // Lexicographic by coordinate.
  friend std::strong_ordering operator<=>(const Point& a, const Point& b);

  // "(x,y,...)" with each coordinate as num/den.
  std::string str() const;
  // Accepts "x,y,..." or "(x,y,...)".
  static Point parse(std::string_view text);

  std::size_t hash() const noexcept;

 private:
  std::vector<Rational> coords_;
};

std::ostream& operator<<(std::ostream& os, const Point& p);

// origin plus one vertex displaced along each axis by a positive edge.
class StandardSimplex {
 public:
  StandardSimplex(Point origin, std::vector<Rational> edges);

  std::size_t dim() const noexcept { return origin_.dim(); }
  const Point& origin() const noexcept { return origin_; }
  std::span<const Rational> edges() const noexcept { return edges_; }

  // origin first, then origin + edge_i e_i for i = 0..n-1.
  std::vector<Point> vertices() const;

  friend bool operator==(const StandardSimplex&, const StandardSimplex&) = default;
  friend std::strong_ordering operator<=>(const StandardSimplex& a, const StandardSimplex& b);

  std::string str() const;

 private:
  Point origin_;
  std::vector<Rational> edges_;
};

Rational edge_product(const StandardSimplex& s);
// Lebesgue volume: edge product / n!.
Rational euclidean_volume(const StandardSimplex& s);

// x_i -> scale_i * x_i + shift_i with every scale_i > 0.
class DiagonalAffineMap {
 public:
  DiagonalAffineMap(std::vector<Rational> scale, std::vector<Rational> shift);

  static DiagonalAffineMap identity(std::size_t dim);
  static DiagonalAffineMap translation(std::vector<Rational> shift);
  static DiagonalAffineMap scaling(std::vector<Rational> scale);
  // (x,y) -> (x0 + k(x - x0), y0 + (y - y0)/k).
  static DiagonalAffineMap hyperbolic_rotation(const Point& center, const Rational& k);
  // x_i -> c_i + k_i (x_i - c_i).
  static DiagonalAffineMap centered_scaling(const Point& center, std::vector<Rational> k);

  std::size_t dim() const noexcept { return scale_.size(); }
  std::span<const Rational> scale() const noexcept { return scale_; }
  std::span<const Rational> shift() const noexcept { return shift_; }

  Rational scale_product() const;
  // Member of the volume-preserving group (scale product exactly 1).
  bool is_volume_preserving() const { return scale_product() == Rational(1); }

  DiagonalAffineMap inverse() const;

  friend bool operator==(const DiagonalAffineMap&, const DiagonalAffineMap&) = default;

  std::string str() const;

 private:
  std::vector<Rational> scale_;
  std::vector<Rational> shift_;
};

Point apply_map(const DiagonalAffineMap& m, const Point& p);
StandardSimplex apply_map(const DiagonalAffineMap& m, const StandardSimplex& s);
// apply_map(compose(outer, inner), p) == apply_map(outer, apply_map(inner, p)).
DiagonalAffineMap compose(const DiagonalAffineMap& outer, const DiagonalAffineMap& inner);

// The volume-preserving map carrying A's vertices onto B's, vertex by vertex.
// Throws NoWitness when the edge products differ.
DiagonalAffineMap orbit_witness(const StandardSimplex& a, const StandardSimplex& b);

}  // namespace monosimplex

template <>
struct std::hash<monosimplex::Point> {
  std::size_t operator()(const monosimplex::Point& p) const noexcept { return p.hash(); }
};
