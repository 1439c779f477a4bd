#include "monosimplex/rain.hpp"

#include <limits>

#include "monosimplex/errors.hpp"

namespace monosimplex {

namespace {

// Largest factorial argument we are willing to materialize.
constexpr unsigned long kFactorialLimit = 1'000'000;

std::optional<std::uint64_t> as_index(const Rational& v, std::uint64_t upper_inclusive) {
  if (!v.is_integer() || v.sign() < 0) return std::nullopt;
  if (!mpz_fits_ulong_p(v.num().get_mpz_t())) return std::nullopt;
  const std::uint64_t out = v.num().get_ui();
  if (out > upper_inclusive) return std::nullopt;
  return out;
}

BigInt to_big(std::uint64_t v) {
  BigInt out;
  mpz_set_ui(out.get_mpz_t(), static_cast<unsigned long>(v));
  return out;
}

void require_length(std::uint64_t length) {
  if (length < 2) throw InvalidArgument("rain length must be at least 2");
}

BigInt checked_factorial(const BigInt& n) {
  if (sgn(n) < 0) throw InvalidArgument("factorial of a negative number");
  if (n > kFactorialLimit) {
    throw LimitExceeded("factorial argument " + to_string(n) + " exceeds the materialization limit " +
                        std::to_string(kFactorialLimit));
  }
  return factorial(n.get_ui());
}

// Product over base axes of (L-1-kappa_i).
std::uint64_t free_room(std::uint64_t length, std::span<const std::uint64_t> kappa) {
  std::uint64_t p = 1;
  for (auto k : kappa) p *= (length - 1 - k);
  return p;
}

bool next_tuple(std::vector<std::uint64_t>& kappa, std::uint64_t side) {
  for (std::size_t i = kappa.size(); i-- > 0;) {
    if (++kappa[i] < side) return true;
    kappa[i] = 0;
  }
  return false;
}

bool factor_into(std::uint64_t remaining, std::span<const std::uint64_t> caps, std::size_t i,
                 std::vector<std::uint64_t>& out) {
  if (i + 1 == caps.size()) {
    if (remaining > caps[i]) return false;
    out[i] = remaining;
    return true;
  }
  for (std::uint64_t e = 1; e <= caps[i] && e <= remaining; ++e) {
    if (remaining % e) continue;
    out[i] = e;
    if (factor_into(remaining / e, caps, i + 1, out)) return true;
  }
  return false;
}

}  // namespace

// ---- types ---------------------------------------------------------------------

Rain2D::Rain2D(Point origin, Rational step, std::uint64_t length)
    : origin_(std::move(origin)), step_(std::move(step)), length_(length) {
  if (origin_.dim() != 2) throw DimensionMismatch("planar rain origin must be 2-dimensional");
  if (step_.sign() <= 0) throw InvalidArgument("rain step must be positive");
  require_length(length_);
}

std::string Rain2D::str() const {
  return "rain(origin " + origin_.str() + ", step " + step_.str() + ", length " + std::to_string(length_) + ")";
}

RainND::RainND(Point origin, std::vector<Rational> steps, std::uint64_t length)
    : origin_(std::move(origin)), steps_(std::move(steps)), length_(length) {
  if (origin_.dim() < 2) throw DimensionMismatch("rain dimension must be at least 2");
  if (steps_.size() + 1 != origin_.dim()) {
    throw DimensionMismatch("an n-D rain needs n-1 steps, got " + std::to_string(steps_.size()) + " for n = " +
                            std::to_string(origin_.dim()));
  }
  for (const auto& s : steps_) {
    if (s.sign() <= 0) throw InvalidArgument("rain steps must be positive");
  }
  require_length(length_);
}

Rational RainND::step_product() const {
  Rational p(1);
  for (const auto& s : steps_) p *= s;
  return p;
}

std::string RainND::str() const {
  std::string steps = "(";
  for (std::size_t i = 0; i < steps_.size(); ++i) steps += (i ? "," : "") + steps_[i].str();
  return "rain" + std::to_string(dim()) + "d(origin " + origin_.str() + ", steps " + steps + "), length " +
         std::to_string(length_) + ")";
}

Point transpose2(const Point& p) {
  if (p.dim() != 2) throw DimensionMismatch("transpose2 needs a planar point");
  return Point{p[1], p[0]};
}

RainND to_nd(const Rain2D& r) { return RainND(transpose2(r.origin()), {r.step()}, r.length()); }

Rain2D to_2d(const RainND& r) {
  if (r.dim() != 2) throw DimensionMismatch("to_2d needs a 2-dimensional rain");
  return Rain2D(transpose2(r.origin()), r.steps()[0], r.length());
}

// ---- planar --------------------------------------------------------------------

std::optional<RainCoord> locate(const Rain2D& r, const Point& p) {
  if (p.dim() != 2) throw DimensionMismatch("planar rain membership needs a 2-dimensional point");
  const std::uint64_t last = r.length() - 1;
  auto kappa = as_index((p[0] - r.origin()[0]) / r.step(), last);
  if (!kappa) return std::nullopt;
  const Rational dy = p[1] - r.origin()[1];
  if (dy.sign() == 0) return RainCoord{{*kappa}, 0};
  if (dy.sign() < 0) return std::nullopt;
  auto k = as_index((dy * r.step()).reciprocal(), last);
  if (!k || *k == 0 || *kappa > last - *k) return std::nullopt;
  return RainCoord{{*kappa}, *k};
}

bool rain_contains(const Rain2D& r, const Point& p) { return locate(r, p).has_value(); }

BigInt point_count(const Rain2D& r) {
  const BigInt l = to_big(r.length());
  return l + l * (l - 1) / 2;
}

Point point_at(const Rain2D& r, std::uint64_t kappa, std::uint64_t layer) {
  Rational x = r.origin()[0] + Rational(to_big(kappa)) * r.step();
  if (layer == 0) return Point{std::move(x), r.origin()[1]};
  return Point{std::move(x), r.origin()[1] + (Rational(to_big(layer)) * r.step()).reciprocal()};
}

std::vector<Point> enumerate_points(const Rain2D& r, std::uint64_t limit) {
  const BigInt count = point_count(r);
  if (count > to_big(limit)) {
    throw LimitExceeded("rain has " + to_string(count) + " points, above the enumeration limit " +
                        std::to_string(limit));
  }
  std::vector<Point> out;
  out.reserve(count.get_ui());
  const std::uint64_t l = r.length();
  for (std::uint64_t j = 0; j < l; ++j) out.push_back(point_at(r, j, 0));
  for (std::uint64_t k = 1; k < l; ++k) {
    for (std::uint64_t j = 0; j + k < l; ++j) out.push_back(point_at(r, j, k));
  }
  return out;
}

std::vector<StandardSimplex> apex_triangles(const Rain2D& r, const Point& p) {
  auto where = locate(r, p);
  if (!where || where->in_base()) throw InvalidArgument("point " + p.str() + " is not a layer point of " + r.str());
  const Rational leg = Rational(to_big(where->layer)) * r.step();
  return {StandardSimplex(point_at(r, where->kappa[0], 0), {leg, leg.reciprocal()})};
}

Rain2D subrain2d(const Rain2D& r, std::uint64_t target) {
  if (target < 2) throw InvalidArgument("sub-rain length must be at least 2");
  const BigInt needed = f_len(target);
  if (to_big(r.length()) < needed) {
    throw InvalidArgument("rain of length " + std::to_string(r.length()) + " is too short for a sub-rain of length " +
                          std::to_string(target) + " (needs " + to_string(needed) + ")");
  }
  const Rational step = Rational(factorial(target)) * r.step();
  return Rain2D(r.origin().shifted(1, step.reciprocal()), step, target);
}

// ---- n-D -----------------------------------------------------------------------

std::optional<RainCoord> locate(const RainND& r, const Point& p) {
  if (p.dim() != r.dim()) {
    throw DimensionMismatch("rain membership: point of dimension " + std::to_string(p.dim()) + " vs rain " +
                            std::to_string(r.dim()));
  }
  const std::uint64_t last = r.length() - 1;
  RainCoord out;
  out.kappa.reserve(r.dim() - 1);
  for (std::size_t i = 1; i < r.dim(); ++i) {
    auto k = as_index((p[i] - r.origin()[i]) / r.steps()[i - 1], last);
    if (!k) return std::nullopt;
    out.kappa.push_back(*k);
  }
  const Rational dx = p[0] - r.origin()[0];
  if (dx.sign() == 0) return out;
  if (dx.sign() < 0) return std::nullopt;
  const Rational w = (dx * r.step_product()).reciprocal();
  if (!w.is_integer() || !mpz_fits_ulong_p(w.num().get_mpz_t())) return std::nullopt;
  out.layer = w.num().get_ui();
  // the room product can overflow only for absurd lengths; compare in big integers
  BigInt room = 1;
  for (auto k : out.kappa) room *= to_big(last - k);
  if (room < to_big(out.layer)) return std::nullopt;
  return out;
}

bool rain_nd_contains(const RainND& r, const Point& p) { return locate(r, p).has_value(); }

BigInt point_count(const RainND& r) {
  const BigInt l = to_big(r.length());
  BigInt base, layers;
  mpz_pow_ui(base.get_mpz_t(), l.get_mpz_t(), r.dim() - 1);
  const BigInt tri = l * (l - 1) / 2;
  mpz_pow_ui(layers.get_mpz_t(), tri.get_mpz_t(), r.dim() - 1);
  return base + layers;
}

BigInt max_layer(const RainND& r) {
  BigInt out;
  const BigInt side = to_big(r.length() - 1);
  mpz_pow_ui(out.get_mpz_t(), side.get_mpz_t(), r.dim() - 1);
  return out;
}

Point point_at(const RainND& r, std::span<const std::uint64_t> kappa, std::uint64_t w) {
  if (kappa.size() + 1 != r.dim()) throw DimensionMismatch("point_at: kappa has the wrong length");
  std::vector<Rational> c;
  c.reserve(r.dim());
  c.push_back(w == 0 ? r.origin()[0] : r.origin()[0] + (Rational(to_big(w)) * r.step_product()).reciprocal());
  for (std::size_t i = 0; i < kappa.size(); ++i) c.push_back(r.origin()[i + 1] + Rational(to_big(kappa[i])) * r.steps()[i]);
  return Point(std::move(c));
}

void for_each_layer_point(const RainND& r, const std::function<bool(const Point&, const RainCoord&)>& visit) {
  const std::uint64_t l = r.length();
  const BigInt top = max_layer(r);
  if (!mpz_fits_ulong_p(top.get_mpz_t())) throw LimitExceeded("rain too large to scan its layers");
  const std::uint64_t max_w = top.get_ui();
  // kappa tuples in lexicographic order with their room product
  std::vector<std::pair<std::vector<std::uint64_t>, std::uint64_t>> grid;
  std::vector<std::uint64_t> kappa(r.dim() - 1, 0);
  do {
    const std::uint64_t room = free_room(l, kappa);
    if (room > 0) grid.emplace_back(kappa, room);
  } while (next_tuple(kappa, l));
  for (std::uint64_t w = 1; w <= max_w; ++w) {
    for (const auto& [k, room] : grid) {
      if (room < w) continue;
      RainCoord coord{k, w};
      if (!visit(point_at(r, k, w), coord)) return;
    }
  }
}

void for_each_point(const RainND& r, const std::function<bool(const Point&, const RainCoord&)>& visit) {
  std::vector<std::uint64_t> kappa(r.dim() - 1, 0);
  do {
    if (!visit(point_at(r, kappa, 0), RainCoord{kappa, 0})) return;
  } while (next_tuple(kappa, r.length()));
  for_each_layer_point(r, visit);
}

std::vector<Point> enumerate_points(const RainND& r, std::uint64_t limit) {
  const BigInt count = point_count(r);
  if (count > to_big(limit)) {
    throw LimitExceeded("rain has " + to_string(count) + " points, above the enumeration limit " +
                        std::to_string(limit));
  }
  std::vector<Point> out;
  out.reserve(count.get_ui());
  for_each_point(r, [&](const Point& p, const RainCoord&) {
    out.push_back(p);
    return true;
  });
  return out;
}

std::optional<StandardSimplex> apex_simplex(const RainND& r, const Point& p) {
  auto where = locate(r, p);
  if (!where || where->in_base()) throw InvalidArgument("point " + p.str() + " is not a layer point of " + r.str());
  std::vector<std::uint64_t> caps;
  for (auto k : where->kappa) caps.push_back(r.length() - 1 - k);
  std::vector<std::uint64_t> factors(caps.size());
  if (!factor_into(where->layer, caps, 0, factors)) return std::nullopt;
  std::vector<Rational> edges;
  edges.push_back(p[0] - r.origin()[0]);
  for (std::size_t i = 0; i < factors.size(); ++i) edges.push_back(Rational(to_big(factors[i])) * r.steps()[i]);
  return StandardSimplex(point_at(r, where->kappa, 0), std::move(edges));
}

RainND subrain_nd(const RainND& r, std::uint64_t target) {
  if (target < 2) throw InvalidArgument("sub-rain length must be at least 2");
  const std::size_t n = r.dim();
  const BigInt needed = F_len(n, target);
  if (to_big(r.length()) < needed) {
    throw InvalidArgument("rain of length " + std::to_string(r.length()) + " is too short for a sub-rain of length " +
                          std::to_string(target) + " (needs " + to_string(needed) + ")");
  }
  // Normalize to unit steps with a volume-preserving map centred at the origin.
  std::vector<Rational> k;
  k.push_back(r.step_product());
  for (const auto& s : r.steps()) k.push_back(s.reciprocal());
  const auto normalize = DiagonalAffineMap::centered_scaling(r.origin(), std::move(k));

  BigInt side = to_big(target - 1), room;
  mpz_pow_ui(room.get_mpz_t(), side.get_mpz_t(), n - 1);
  const BigInt s = checked_factorial(room + 1);
  BigInt s_pow;
  mpz_pow_ui(s_pow.get_mpz_t(), s.get_mpz_t(), n - 1);

  const Point small_origin = r.origin().shifted(0, Rational(1, s_pow));
  RainND small(small_origin, std::vector<Rational>(n - 1, Rational(s)), target);
  return apply_map(normalize.inverse(), small);
}

Rain2D apply_map(const DiagonalAffineMap& m, const Rain2D& r) {
  if (m.dim() != 2) throw DimensionMismatch("planar rain needs a planar map");
  if (!m.is_volume_preserving()) throw InvalidArgument("only volume-preserving maps carry rains to rains");
  return Rain2D(apply_map(m, r.origin()), m.scale()[0] * r.step(), r.length());
}

RainND apply_map(const DiagonalAffineMap& m, const RainND& r) {
  if (m.dim() != r.dim()) throw DimensionMismatch("rain and map dimensions differ");
  if (!m.is_volume_preserving()) throw InvalidArgument("only volume-preserving maps carry rains to rains");
  std::vector<Rational> steps;
  for (std::size_t i = 0; i < r.steps().size(); ++i) steps.push_back(m.scale()[i + 1] * r.steps()[i]);
  return RainND(apply_map(m, r.origin()), std::move(steps), r.length());
}

// ---- arithmetic ------------------------------------------------------------------

std::optional<BigInt> egyptian_step(const BigInt& m, const BigInt& q) {
  if (sgn(m) <= 0 || sgn(q) <= 0) throw InvalidArgument("egyptian_step needs positive integers");
  const BigInt sum = m + q;
  const BigInt prod = m * q;
  if (!mpz_divisible_p(prod.get_mpz_t(), sum.get_mpz_t())) return std::nullopt;
  BigInt n;
  mpz_divexact(n.get_mpz_t(), prod.get_mpz_t(), sum.get_mpz_t());
  return n;
}

BigInt f_len(std::uint64_t l) {
  if (l < 1) throw InvalidArgument("f_len needs l >= 1");
  return F_len(2, l);
}

BigInt F_len(std::uint64_t n, std::uint64_t t) { return F_len(n, to_big(t)); }

BigInt F_len(std::uint64_t n, const BigInt& t) {
  if (n < 2) throw InvalidArgument("F_len needs n >= 2");
  if (t < 1) throw InvalidArgument("F_len needs t >= 1");
  const BigInt side = t - 1;
  if (side > kFactorialLimit && n > 1) {
    throw LimitExceeded("F_" + std::to_string(n) + "(" + to_string(t) + ") is too large to materialize");
  }
  BigInt room;
  mpz_pow_ui(room.get_mpz_t(), side.get_mpz_t(), n - 1);
  return checked_factorial(room + 1) * t + 1;
}

std::uint64_t max_subrain_length(std::uint64_t n, std::uint64_t length) {
  std::uint64_t best = 0;
  for (std::uint64_t t = 1;; ++t) {
    if (F_len(n, t) > to_big(length)) return best;
    best = t;
  }
}

}  // namespace monosimplex
