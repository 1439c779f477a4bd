#include "monosimplex/finder.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "monosimplex/errors.hpp"

namespace monosimplex {

namespace {

struct Exhausted {
  std::string reason;
};

using Found = std::pair<StandardSimplex, Color>;

BigInt to_big(std::uint64_t v) {
  BigInt out;
  mpz_set_ui(out.get_mpz_t(), static_cast<unsigned long>(v));
  return out;
}

std::uint64_t to_u64(const BigInt& v, const char* what) {
  if (sgn(v) < 0 || !mpz_fits_ulong_p(v.get_mpz_t())) throw LimitExceeded(std::string(what) + " does not fit in 64 bits");
  return v.get_ui();
}

// Runs one search. Internally everything lives in the n-D frame (axis 0 is
// the height); for n = 2 points are transposed on the way out.
class Search {
 public:
  Search(const ColoringSpec& spec, std::size_t n, Rational frame_scale, const SearchBudget& budget,
         const SearchOptions& options)
      : spec_(spec),
        n_(n),
        frame_scale_(std::move(frame_scale)),
        budget_(budget),
        options_(options),
        start_(std::chrono::steady_clock::now()) {
    if (n_ < 2) throw InvalidArgument("simplex dimension must be at least 2");
    if (frame_scale_.sign() <= 0) throw InvalidArgument("target edge product must be positive");
    if (budget_.max_base_length < 2 || budget_.max_depth < 1 || budget_.max_queries < 1 ||
        budget_.max_time.count() <= 0) {
      throw InvalidArgument("search budget limits must all be positive (base length at least 2)");
    }
    if (options_.initial_length < 2) throw InvalidArgument("initial base length must be at least 2");
  }

  Certificate run() {
    std::vector<Color> all(static_cast<std::size_t>(spec_.colors()));
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Color>(i);
    std::optional<Found> found;
    try {
      found = options_.faithful ? run_faithful(all) : run_deepening(all);
    } catch (const Exhausted& e) {
      throw BudgetExhausted(e.reason, deepest_);
    }
    Certificate c{embed(found->first), found->second, spec_, frame_scale_, frame_scale_, trace_};
    c.simplex = stretch(c.simplex);
    return c;
  }

 private:
  // ---- frames ----------------------------------------------------------------

  Point embed(const Point& p) const { return n_ == 2 ? transpose2(p) : p; }

  StandardSimplex embed(const StandardSimplex& s) const {
    if (n_ != 2) return s;
    return StandardSimplex(transpose2(s.origin()), {s.edges()[1], s.edges()[0]});
  }

  StandardSimplex stretch(const StandardSimplex& s) const {
    std::vector<Rational> k(n_, Rational(1));
    k[0] = frame_scale_;
    return apply_map(DiagonalAffineMap::scaling(std::move(k)), s);
  }

  std::variant<Rain2D, RainND> outward(const RainND& r) const {
    if (n_ == 2) return to_2d(r);
    return r;
  }

  RainND ambient(std::uint64_t length) const {
    std::vector<Rational> origin(n_);
    origin[0] = options_.height_offset;
    return RainND(Point(std::move(origin)), std::vector<Rational>(n_ - 1, Rational(1)), length);
  }

  // ---- oracle ------------------------------------------------------------------

  void check_time() const {
    if (std::chrono::steady_clock::now() - start_ > budget_.max_time) throw Exhausted{"wall-clock limit reached"};
  }

  Color color(const Point& p) {
    auto it = cache_.find(p);
    if (it != cache_.end()) return it->second;
    if (++queries_ > budget_.max_queries) throw Exhausted{"oracle query limit reached"};
    if ((queries_ & 0x3FF) == 0) check_time();
    Point actual = embed(p);
    if (frame_scale_ != Rational(1)) {
      std::vector<Rational> c(actual.coords().begin(), actual.coords().end());
      c[0] *= frame_scale_;
      actual = Point(std::move(c));
    }
    const Color c = color_at(spec_, actual);
    cache_.emplace(p, c);
    return c;
  }

  ColorCube base_colors(const RainND& r) {
    const BigInt cells = [&] {
      BigInt out;
      const BigInt side = to_big(r.length());
      mpz_pow_ui(out.get_mpz_t(), side.get_mpz_t(), n_ - 1);
      return out;
    }();
    if (cells > to_big(budget_.max_queries)) throw Exhausted{"base grid larger than the oracle query limit"};
    std::vector<Color> colors;
    colors.reserve(cells.get_ui());
    std::vector<std::uint64_t> kappa(n_ - 1, 0);
    while (true) {
      colors.push_back(color(point_at(r, kappa, 0)));
      std::size_t i = kappa.size();
      while (i-- > 0 && ++kappa[i] == r.length()) kappa[i] = 0;
      if (i == static_cast<std::size_t>(-1)) break;
    }
    return ColorCube(n_ - 1, r.length(), std::move(colors));
  }

  // ---- trace -------------------------------------------------------------------

  void push(TraceStep step) {
    trace_.push_back(std::move(step));
    if (trace_.size() > deepest_.size()) deepest_ = trace_;
  }

  void pop(std::size_t to) { trace_.resize(to); }

  // ---- shared steps ------------------------------------------------------------

  RainND rain_on(const RainND& r, const GridWitness& w) const {
    std::vector<Rational> steps;
    for (const auto& s : r.steps()) steps.push_back(Rational(to_big(w.scale)) * s);
    return RainND(point_at(r, w.origin, 0), std::move(steps), w.side);
  }

  // First layer point of r, in canonical order, carrying `c` and realizing a
  // unit simplex on r's base.
  std::optional<Found> scan_layers(const RainND& r, Color c) {
    std::optional<Found> hit;
    std::uint64_t visited = 0;
    for_each_layer_point(r, [&](const Point& p, const RainCoord&) {
      if ((++visited & 0xFFF) == 0) check_time();
      if (color(p) != c) return true;
      auto simplex = apex_simplex(r, p);
      if (!simplex) return true;
      push(trace::LayerHit{embed(p)});
      hit.emplace(std::move(*simplex), c);
      return false;
    });
    return hit;
  }

  // Every point of r has a color in `allowed` and only one is left.
  Found base_case(const RainND& r) {
    const Point apex = point_at(r, std::vector<std::uint64_t>(n_ - 1, 0), 1);
    auto simplex = apex_simplex(r, apex);
    const Color c = color(r.origin());
    for (const auto& v : simplex->vertices()) {
      if (color(v) != c) throw std::logic_error("single-color sub-rain is not monochromatic");
    }
    push(trace::LayerHit{embed(apex)});
    return {std::move(*simplex), c};
  }

  static std::vector<Color> without(std::vector<Color> colors, Color c) {
    colors.erase(std::remove(colors.begin(), colors.end(), c), colors.end());
    return colors;
  }

  // ---- iterative deepening ---------------------------------------------------------

  std::optional<Found> run_deepening(const std::vector<Color>& all) {
    if (all.size() == 1) return base_case(ambient(2));
    std::uint64_t length = std::min(options_.initial_length, budget_.max_base_length);
    while (true) {
      trace_.clear();
      if (auto found = level(ambient(length), all, 0)) return found;
      if (length >= budget_.max_base_length) {
        throw Exhausted{"no monochromatic simplex found with ambient base length up to " + std::to_string(length)};
      }
      length = std::min(length * 2, budget_.max_base_length);
    }
  }

  std::optional<Found> level(const RainND& r, const std::vector<Color>& allowed, std::uint64_t depth) {
    if (allowed.size() == 1) return base_case(r);
    if (depth >= budget_.max_depth) return std::nullopt;
    const ColorCube cube = base_colors(r);
    const std::uint64_t longest = longest_mono_side(cube);
    const std::uint64_t min_recursive = to_u64(F_len(n_, 2), "F_n(2)");
    std::uint64_t tried = 0;
    std::optional<Found> result;
    for (std::uint64_t side = longest; side >= 2 && !result && tried < options_.max_candidates; --side) {
      for_each_mono_cube(cube, side, [&](const GridWitness& w) {
        if (++tried > options_.max_candidates) return false;
        const std::size_t mark = trace_.size();
        const RainND sub = rain_on(r, w);
        push(trace::APFound{w});
        push(trace::RainBuilt{outward(sub)});
        if ((result = scan_layers(sub, w.color))) return false;
        if (side >= min_recursive) {
          const RainND inner = subrain_nd(sub, max_subrain_length(n_, side));
          const auto rest = without(allowed, w.color);
          push(trace::Recursed{rest});
          if ((result = level(inner, rest, depth + 1))) return false;
        }
        pop(mark);
        return true;
      });
    }
    return result;
  }

  // ---- faithful lengths -------------------------------------------------------

  std::uint64_t sr_length(std::size_t colors) {
    static const VdwTable empty;
    const VdwTable& table = options_.table ? *options_.table : empty;
    const SRExpr e = sr_n_expr(static_cast<unsigned>(n_), static_cast<unsigned>(colors));
    std::optional<BigInt> v;
    try {
      v = eval_expr(e, table);
    } catch (const LimitExceeded&) {
      throw Exhausted{"faithful length " + e.str() + " is too large to materialize"};
    }
    if (!v) {
      throw Exhausted{"faithful mode needs " + first_missing(e, table)->str() + " (for " + e.str() +
                      "), which the vdW table does not provide"};
    }
    if (*v > to_big(budget_.max_base_length)) {
      throw Exhausted{"faithful length " + e.str() + " = " + to_string(*v) + " exceeds the base length limit"};
    }
    return v->get_ui();
  }

  std::optional<Found> run_faithful(const std::vector<Color>& all) {
    return level_faithful(ambient(sr_length(all.size())), all);
  }

  std::optional<Found> level_faithful(const RainND& r, const std::vector<Color>& allowed) {
    if (allowed.size() == 1) return base_case(r);
    const std::uint64_t inner_length = sr_length(allowed.size() - 1);
    const std::uint64_t side = to_u64(F_len(n_, inner_length), "F_n(SR)");
    const ColorCube cube = base_colors(r);
    auto w = find_mono_cube(cube, side);
    if (!w) {
      throw InvalidArgument("no monochromatic grid of side " + std::to_string(side) + " in a base of side " +
                            std::to_string(r.length()) + "; the vdW table value is wrong");
    }
    const RainND sub = rain_on(r, *w);
    push(trace::APFound{*w});
    push(trace::RainBuilt{outward(sub)});
    if (auto hit = scan_layers(sub, w->color)) return hit;
    const auto rest = without(allowed, w->color);
    push(trace::Recursed{rest});
    return level_faithful(subrain_nd(sub, inner_length), rest);
  }

  const ColoringSpec& spec_;
  std::size_t n_;
  Rational frame_scale_;
  SearchBudget budget_;
  SearchOptions options_;
  std::chrono::steady_clock::time_point start_;
  std::unordered_map<Point, Color> cache_;
  std::uint64_t queries_ = 0;
  std::vector<TraceStep> trace_;
  std::vector<TraceStep> deepest_;
};

}  // namespace

Certificate find_unit_triangle(const ColoringSpec& spec, const SearchBudget& budget, const SearchOptions& options) {
  return find_unit_simplex(spec, 2, budget, options);
}

Certificate find_unit_simplex(const ColoringSpec& spec, std::size_t n, const SearchBudget& budget,
                              const SearchOptions& options) {
  return Search(spec, n, Rational(1), budget, options).run();
}

Certificate find_scaled(const ColoringSpec& spec, std::size_t n, const Rational& target_product,
                        const SearchBudget& budget, const SearchOptions& options) {
  return Search(spec, n, target_product, budget, options).run();
}

std::vector<Certificate> find_many(const ColoringSpec& spec, std::size_t n, const Rational& target_product,
                                   std::size_t count, const SearchBudget& budget, SearchOptions options) {
  std::vector<Certificate> out;
  std::set<StandardSimplex> seen;
  const Rational base = options.height_offset;
  for (std::uint64_t shift = 0; out.size() < count; ++shift) {
    options.height_offset = base + Rational(to_big(shift));
    Certificate c = find_scaled(spec, n, target_product, budget, options);
    if (seen.insert(c.simplex).second) out.push_back(std::move(c));
  }
  return out;
}

Rational product_for_area(const Rational& area) {
  if (area.sign() <= 0) throw InvalidArgument("area must be positive");
  return Rational(2) * area;
}

Rational product_for_volume(std::size_t n, const Rational& volume) {
  if (volume.sign() <= 0) throw InvalidArgument("volume must be positive");
  return Rational(to_big(n)) * volume;
}

Verification verify_certificate(const Certificate& c) {
  Verification v;
  const auto& s = c.simplex;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (s.edges()[i].sign() <= 0) {
      return {false, Verification::Failure::NotStandard, -1, "edge " + std::to_string(i) + " is not positive"};
    }
  }
  const Rational product = edge_product(s);
  if (product != c.target_product) {
    return {false, Verification::Failure::WrongProduct, -1,
            "edge product " + product.str() + " differs from the declared " + c.target_product.str()};
  }
  if (c.color < 0 || c.color >= c.spec.colors()) {
    return {false, Verification::Failure::WrongColor, -1, "declared color is not a color of the coloring"};
  }
  const auto vertices = s.vertices();
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    Color got;
    try {
      got = color_at(c.spec, vertices[i]);
    } catch (const InvalidArgument& e) {
      return {false, Verification::Failure::WrongColor, static_cast<int>(i), std::string("vertex ") +
                                                                                 std::to_string(i) + ": " + e.what()};
    }
    if (got != c.color) {
      return {false, Verification::Failure::WrongColor, static_cast<int>(i),
              "vertex " + std::to_string(i) + " " + vertices[i].str() + " has color " + std::to_string(got) +
                  ", expected " + std::to_string(c.color)};
    }
  }
  v.diagnostic = "ok";
  return v;
}

std::optional<StandardSimplex> standard_simplex_from_vertices(const std::vector<Point>& vertices) {
  if (vertices.size() < 2) return std::nullopt;
  const Point& o = vertices[0];
  const std::size_t n = o.dim();
  if (vertices.size() != n + 1) return std::nullopt;
  std::vector<Rational> edges;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& v = vertices[i + 1];
    if (v.dim() != n) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i && v[j] != o[j]) return std::nullopt;
    }
    Rational e = v[i] - o[i];
    if (e.sign() <= 0) return std::nullopt;
    edges.push_back(std::move(e));
  }
  return StandardSimplex(o, std::move(edges));
}

std::vector<Certificate> brute_force_unit_simplices(const std::variant<Rain2D, RainND>& rain, const ColoringSpec& spec,
                                                    std::uint64_t limit) {
  std::vector<Point> points = std::visit([&](const auto& r) { return enumerate_points(r, limit); }, rain);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const std::size_t n = points.front().dim();
  std::unordered_map<Point, Color> colors;
  for (const auto& p : points) colors.emplace(p, color_at(spec, p));

  // For each axis, points sharing all other coordinates, sorted along the axis.
  std::vector<std::map<std::vector<Rational>, std::vector<Rational>>> lines(n);
  for (const auto& p : points) {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rational> key(p.coords().begin(), p.coords().end());
      key.erase(key.begin() + static_cast<std::ptrdiff_t>(i));
      lines[i][key].push_back(p[i]);
    }
  }
  for (auto& axis : lines) {
    for (auto& [key, xs] : axis) std::sort(xs.begin(), xs.end());
  }

  std::vector<Certificate> out;
  for (const auto& o : points) {
    const Color c = colors.at(o);
    // same-colored edge candidates per axis, ascending
    std::vector<std::vector<Rational>> options(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rational> key(o.coords().begin(), o.coords().end());
      key.erase(key.begin() + static_cast<std::ptrdiff_t>(i));
      for (const auto& x : lines[i].at(key)) {
        if (x <= o[i]) continue;
        Rational e = x - o[i];
        if (colors.at(o.shifted(i, e)) == c) options[i].push_back(std::move(e));
      }
    }
    if (std::any_of(options.begin(), options.end(), [](const auto& v) { return v.empty(); })) continue;
    std::vector<std::size_t> pick(n, 0);
    while (true) {
      std::vector<Rational> edges;
      Rational product(1);
      for (std::size_t i = 0; i < n; ++i) {
        edges.push_back(options[i][pick[i]]);
        product *= edges.back();
      }
      if (product == Rational(1)) {
        out.push_back(Certificate{StandardSimplex(o, std::move(edges)), c, spec, Rational(1), Rational(1), {}});
      }
      std::size_t i = n;
      while (i-- > 0 && ++pick[i] == options[i].size()) pick[i] = 0;
      if (i == static_cast<std::size_t>(-1)) break;
    }
  }
  return out;
}

std::optional<std::variant<Rain2D, RainND>> final_rain(const std::vector<TraceStep>& trace) {
  for (auto it = trace.rbegin(); it != trace.rend(); ++it) {
    if (const auto* built = std::get_if<trace::RainBuilt>(&*it)) return built->rain;
  }
  return std::nullopt;
}

}  // namespace monosimplex
