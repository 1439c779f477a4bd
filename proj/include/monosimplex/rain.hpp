#pragma once

/**
 * @file rain.hpp
 * @brief Slanted rains: a base progression plus the layers of apexes of
 * edge-product-1 standard simplices standing on that base.
 *
 * A planar rain of length L and step b with origin (x0, y0) is
 *
 *     base     {(x0 + j b, y0)              : 0 <= j <= L-1}
 *     layer k  {(x0 + j b, y0 + 1/(k b))    : 0 <= j <= L-1-k},  1 <= k <= L-1
 *
 * so layer k holds L-k points and the whole rain L + L(L-1)/2 points.
 *
 * An n-dimensional rain has its base in the hyperplane x = x0 (axis 0 is
 * the height axis) as the grid origin + {0} x {0..L-1}s_1 x ... x {0..L-1}s_{n-1},
 * and layer points (x0 + 1/(w s_1...s_{n-1}), base coordinates at kappa) for
 * every integer w >= 1 with prod (L-1-kappa_i) >= w. With n = 2 this is the
 * planar rain with its two axes swapped.
 *
 * Rains are parametric; nothing is materialized unless enumerate_points is
 * called, and that is guarded by a point-count limit.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "monosimplex/geometry.hpp"
#include "monosimplex/rational.hpp"

namespace monosimplex {

inline constexpr std::uint64_t kDefaultPointLimit = 10'000'000;

class Rain2D {
 public:
  Rain2D(Point origin, Rational step, std::uint64_t length);

  const Point& origin() const noexcept { return origin_; }
  const Rational& step() const noexcept { return step_; }
  std::uint64_t length() const noexcept { return length_; }

  friend bool operator==(const Rain2D&, const Rain2D&) = default;
  // "rain(origin (0,1/6), step 6, length 3)"
  std::string str() const;

 private:
  Point origin_;
  Rational step_;
  std::uint64_t length_;
};

class RainND {
 public:
  RainND(Point origin, std::vector<Rational> steps, std::uint64_t length);

  std::size_t dim() const noexcept { return origin_.dim(); }
  const Point& origin() const noexcept { return origin_; }
  std::span<const Rational> steps() const noexcept { return steps_; }
  std::uint64_t length() const noexcept { return length_; }
  Rational step_product() const;

  friend bool operator==(const RainND&, const RainND&) = default;
  std::string str() const;

 private:
  Point origin_;
  std::vector<Rational> steps_;
  std::uint64_t length_;
};

// Where a point sits in a rain. `layer` is k (planar) or w (n-D); 0 means base.
struct RainCoord {
  std::vector<std::uint64_t> kappa;
  std::uint64_t layer = 0;
  bool in_base() const noexcept { return layer == 0; }
  friend bool operator==(const RainCoord&, const RainCoord&) = default;
};

// Axis swap between the planar convention (base horizontal) and the n = 2
// case of the n-D convention (base in the line x = x0).
Point transpose2(const Point& p);
RainND to_nd(const Rain2D& r);
Rain2D to_2d(const RainND& r);

// ---- planar rains ----------------------------------------------------------

std::optional<RainCoord> locate(const Rain2D& r, const Point& p);
bool rain_contains(const Rain2D& r, const Point& p);
BigInt point_count(const Rain2D& r);
Point point_at(const Rain2D& r, std::uint64_t kappa, std::uint64_t layer);
// Base left to right, then layers k = 1..L-1 each left to right.
std::vector<Point> enumerate_points(const Rain2D& r, std::uint64_t limit = kDefaultPointLimit);
// The edge-product-1 standard triangle with apex p and both lower vertices in
// the base. Throws InvalidArgument when p is not a layer point.
std::vector<StandardSimplex> apex_triangles(const Rain2D& r, const Point& p);
// Rain of length `target` inside the layers of r; needs r.length() >= f_len(target).
Rain2D subrain2d(const Rain2D& r, std::uint64_t target);

// ---- n-D rains -------------------------------------------------------------

std::optional<RainCoord> locate(const RainND& r, const Point& p);
bool rain_nd_contains(const RainND& r, const Point& p);
BigInt point_count(const RainND& r);
Point point_at(const RainND& r, std::span<const std::uint64_t> kappa, std::uint64_t w);
// Largest layer index w that occurs: (L-1)^(n-1).
BigInt max_layer(const RainND& r);
// Base in lexicographic kappa order, then layers by w ascending, each in
// lexicographic kappa order. Stops early when `visit` returns false.
void for_each_point(const RainND& r, const std::function<bool(const Point&, const RainCoord&)>& visit);
void for_each_layer_point(const RainND& r, const std::function<bool(const Point&, const RainCoord&)>& visit);
std::vector<Point> enumerate_points(const RainND& r, std::uint64_t limit = kDefaultPointLimit);
// Standard simplex of edge product 1 with apex p whose base face lies in the
// base grid of r, or nullopt when w has no factorization fitting the grid.
// Among fitting factorizations the lexicographically smallest is used.
std::optional<StandardSimplex> apex_simplex(const RainND& r, const Point& p);
// Rain of length `target` inside the layers of r; needs r.length() >= F_len(n, target).
RainND subrain_nd(const RainND& r, std::uint64_t target);

// Image of a rain under a volume-preserving diagonal map (throws otherwise).
Rain2D apply_map(const DiagonalAffineMap& m, const Rain2D& r);
RainND apply_map(const DiagonalAffineMap& m, const RainND& r);

// ---- arithmetic --------------------------------------------------------------

// n with 1/m + 1/q = 1/n, which exists iff (m + q) divides m q.
std::optional<BigInt> egyptian_step(const BigInt& m, const BigInt& q);
// l! l + 1
BigInt f_len(std::uint64_t l);
// ((t-1)^(n-1) + 1)! t + 1
BigInt F_len(std::uint64_t n, std::uint64_t t);
BigInt F_len(std::uint64_t n, const BigInt& t);
// Largest target t with F_len(n, t) <= length, or 0 if even t = 1 does not fit.
std::uint64_t max_subrain_length(std::uint64_t n, std::uint64_t length);

}  // namespace monosimplex
