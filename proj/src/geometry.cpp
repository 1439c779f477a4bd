#include "monosimplex/geometry.hpp"

#include <algorithm>
#include <ostream>

#include "monosimplex/errors.hpp"

namespace monosimplex {

namespace {

void require_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": dimension " + std::to_string(a) + " vs " +
                            std::to_string(b));
  }
}

std::string join(std::span<const Rational> xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += xs[i].str();
  }
  return out + ")";
}

}  // namespace

Point::Point(std::vector<Rational> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw InvalidArgument("point must have positive dimension");
}

Point Point::zero(std::size_t dim) { return Point(std::vector<Rational>(dim)); }

Point Point::shifted(std::size_t axis, const Rational& delta) const {
  Point out = *this;
  out.coords_.at(axis) += delta;
  return out;
}

std::strong_ordering operator<=>(const Point& a, const Point& b) {
  return std::lexicographical_compare_three_way(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                                b.coords_.end());
}

std::string Point::str() const { return join(coords_); }

Point Point::parse(std::string_view text) {
  std::size_t offset = text.find_first_not_of(" \t");
  if (offset == std::string_view::npos) throw ParseError("empty point", 0);
  text = text.substr(offset, text.find_last_not_of(" \t") + 1 - offset);
  if (text.front() == '(') {
    if (text.back() != ')') throw ParseError("unbalanced parenthesis in point", text.size());
    text = text.substr(1, text.size() - 2);
    offset += 1;
  }
  std::vector<Rational> coords;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    try {
      coords.push_back(Rational::parse(piece));
    } catch (const ParseError& e) {
      throw ParseError("bad coordinate '" + std::string(piece) + "'", offset + start + e.position());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Point(std::move(coords));
}

std::size_t Point::hash() const noexcept {
  std::size_t h = coords_.size();
  for (const auto& c : coords_) h = h * 1000003u ^ c.hash();
  return h;
}

std::ostream& operator<<(std::ostream& os, const Point& p) { return os << p.str(); }

StandardSimplex::StandardSimplex(Point origin, std::vector<Rational> edges)
    : origin_(std::move(origin)), edges_(std::move(edges)) {
  require_dim(origin_.dim(), edges_.size(), "standard simplex edges");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].sign() <= 0) {
      throw InvalidArgument("standard simplex edge " + std::to_string(i) + " is not positive");
    }
  }
}

std::vector<Point> StandardSimplex::vertices() const {
  std::vector<Point> out;
  out.reserve(dim() + 1);
  out.push_back(origin_);
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(origin_.shifted(i, edges_[i]));
  return out;
}

std::strong_ordering operator<=>(const StandardSimplex& a, const StandardSimplex& b) {
  if (auto c = a.origin_ <=> b.origin_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.edges_.begin(), a.edges_.end(), b.edges_.begin(),
                                                b.edges_.end());
}

std::string StandardSimplex::str() const { return "simplex(origin " + origin_.str() + ", edges " + join(edges_) + ")"; }

Rational edge_product(const StandardSimplex& s) {
  Rational p(1);
  for (const auto& e : s.edges()) p *= e;
  return p;
}

Rational euclidean_volume(const StandardSimplex& s) { return edge_product(s) / Rational(factorial(s.dim())); }

DiagonalAffineMap::DiagonalAffineMap(std::vector<Rational> scale, std::vector<Rational> shift)
    : scale_(std::move(scale)), shift_(std::move(shift)) {
  require_dim(scale_.size(), shift_.size(), "affine map scale/shift");
  if (scale_.empty()) throw InvalidArgument("affine map must have positive dimension");
  for (const auto& k : scale_) {
    if (k.sign() <= 0) throw InvalidArgument("diagonal scale factors must be positive");
  }
}

DiagonalAffineMap DiagonalAffineMap::identity(std::size_t dim) {
  return DiagonalAffineMap(std::vector<Rational>(dim, Rational(1)), std::vector<Rational>(dim));
}

DiagonalAffineMap DiagonalAffineMap::translation(std::vector<Rational> shift) {
  std::vector<Rational> ones(shift.size(), Rational(1));
  return DiagonalAffineMap(std::move(ones), std::move(shift));
}

DiagonalAffineMap DiagonalAffineMap::scaling(std::vector<Rational> scale) {
  std::vector<Rational> zeros(scale.size());
  return DiagonalAffineMap(std::move(scale), std::move(zeros));
}

DiagonalAffineMap DiagonalAffineMap::hyperbolic_rotation(const Point& center, const Rational& k) {
  require_dim(center.dim(), 2, "hyperbolic rotation center");
  if (k.sign() <= 0) throw InvalidArgument("hyperbolic rotation factor must be positive");
  return centered_scaling(center, {k, k.reciprocal()});
}

DiagonalAffineMap DiagonalAffineMap::centered_scaling(const Point& center, std::vector<Rational> k) {
  require_dim(center.dim(), k.size(), "centered scaling");
  std::vector<Rational> shift;
  shift.reserve(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) shift.push_back(center[i] - k[i] * center[i]);
  return DiagonalAffineMap(std::move(k), std::move(shift));
}

Rational DiagonalAffineMap::scale_product() const {
  Rational p(1);
  for (const auto& k : scale_) p *= k;
  return p;
}

DiagonalAffineMap DiagonalAffineMap::inverse() const {
  std::vector<Rational> scale, shift;
  for (std::size_t i = 0; i < dim(); ++i) {
    scale.push_back(scale_[i].reciprocal());
    shift.push_back(-shift_[i] / scale_[i]);
  }
  return DiagonalAffineMap(std::move(scale), std::move(shift));
}

std::string DiagonalAffineMap::str() const { return "map(scale " + join(scale_) + ", shift " + join(shift_) + ")"; }

Point apply_map(const DiagonalAffineMap& m, const Point& p) {
  require_dim(m.dim(), p.dim(), "apply_map");
  std::vector<Rational> out;
  out.reserve(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) out.push_back(m.scale()[i] * p[i] + m.shift()[i]);
  return Point(std::move(out));
}

StandardSimplex apply_map(const DiagonalAffineMap& m, const StandardSimplex& s) {
  std::vector<Rational> edges;
  edges.reserve(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) edges.push_back(m.scale()[i] * s.edges()[i]);
  return StandardSimplex(apply_map(m, s.origin()), std::move(edges));
}

DiagonalAffineMap compose(const DiagonalAffineMap& outer, const DiagonalAffineMap& inner) {
  require_dim(outer.dim(), inner.dim(), "compose");
  std::vector<Rational> scale, shift;
  for (std::size_t i = 0; i < outer.dim(); ++i) {
    scale.push_back(outer.scale()[i] * inner.scale()[i]);
    shift.push_back(outer.scale()[i] * inner.shift()[i] + outer.shift()[i]);
  }
  return DiagonalAffineMap(std::move(scale), std::move(shift));
}

DiagonalAffineMap orbit_witness(const StandardSimplex& a, const StandardSimplex& b) {
  require_dim(a.dim(), b.dim(), "orbit_witness");
  const Rational pa = edge_product(a);
  const Rational pb = edge_product(b);
  if (pa != pb) {
    throw NoWitness("edge products differ (" + pa.str() + " vs " + pb.str() + "); simplices lie in different orbits");
  }
  std::vector<Rational> scale, shift;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Rational k = b.edges()[i] / a.edges()[i];
    shift.push_back(b.origin()[i] - k * a.origin()[i]);
    scale.push_back(std::move(k));
  }
  return DiagonalAffineMap(std::move(scale), std::move(shift));
}

}  // namespace monosimplex
