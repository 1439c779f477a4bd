#pragma once

/**
 * @file finder.hpp
 * @brief Certificate-producing search for monochromatic standard simplices.
 *
 * The search follows the inductive argument level by level:
 *   1. color the base of the current ambient rain and pick a monochromatic
 *      progression (n = 2) or grid homothet (n >= 3) in it;
 *   2. build the rain standing on that sub-base;
 *   3. scan its layers in canonical order for a point of the base color; the
 *      first one is the apex of a monochromatic simplex;
 *   4. otherwise every layer point avoids the base color, so recurse into the
 *      largest sub-rain that fits in the layers, with that color eliminated.
 *
 * The guaranteed lengths are astronomically large, so by default the ambient
 * base length is deepened geometrically (L, 2L, 4L, ...) and at every level
 * the mono sub-bases are tried longest first. Faithful mode instead
 * uses the exact lengths SR(h)/SR_n(h) from a table of vdW values and refuses
 * when they are unknown or too large.
 *
 * Planar results use the horizontal-base convention (base along x, apex above
 * it); for n >= 3 the base lies in the hyperplane x = x0 and axis 0 is the
 * height.
 */

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "monosimplex/coloring.hpp"
#include "monosimplex/geometry.hpp"
#include "monosimplex/rain.hpp"
#include "monosimplex/sr_expr.hpp"
#include "monosimplex/vdw.hpp"

namespace monosimplex {

struct SearchBudget {
  std::uint64_t max_base_length = 1024;
  std::uint64_t max_depth = 32;
  std::uint64_t max_queries = 20'000'000;
  std::chrono::milliseconds max_time{std::chrono::seconds(60)};
};

struct SearchOptions {
  std::uint64_t initial_length = 8;
  // Mono sub-bases tried per level before giving up on that level.
  std::uint64_t max_candidates = 64;
  bool faithful = false;
  // Needed by faithful mode for vdW values beyond the trivial ones.
  const VdwTable* table = nullptr;
  // Shift of the ambient base along the height axis (used by --count).
  Rational height_offset;
};

namespace trace {
struct APFound {
  GridWitness witness;  // indices into the ambient base
  friend bool operator==(const APFound&, const APFound&) = default;
};
struct RainBuilt {
  std::variant<Rain2D, RainND> rain;
  friend bool operator==(const RainBuilt&, const RainBuilt&) = default;
};
struct LayerHit {
  Point point;
  friend bool operator==(const LayerHit&, const LayerHit&) = default;
};
struct Recursed {
  std::vector<Color> colors_remaining;
  friend bool operator==(const Recursed&, const Recursed&) = default;
};
}  // namespace trace

using TraceStep = std::variant<trace::APFound, trace::RainBuilt, trace::LayerHit, trace::Recursed>;

struct Certificate {
  StandardSimplex simplex;
  Color color = 0;
  ColoringSpec spec;
  Rational target_product{1};
  // The search ran against the coloring pulled back through
  // x_0 -> frame_scale * x_0; trace coordinates are in that frame.
  Rational frame_scale{1};
  std::vector<TraceStep> trace;
};

class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted(const std::string& what, std::vector<TraceStep> partial)
      : std::runtime_error(what), trace_(std::move(partial)) {}
  const std::vector<TraceStep>& trace() const noexcept { return trace_; }

 private:
  std::vector<TraceStep> trace_;
};

Certificate find_unit_triangle(const ColoringSpec& spec, const SearchBudget& budget = {},
                               const SearchOptions& options = {});
Certificate find_unit_simplex(const ColoringSpec& spec, std::size_t n, const SearchBudget& budget = {},
                              const SearchOptions& options = {});
// Monochromatic standard simplex with edge product exactly `target_product`.
Certificate find_scaled(const ColoringSpec& spec, std::size_t n, const Rational& target_product,
                        const SearchBudget& budget = {}, const SearchOptions& options = {});
// `count` pairwise distinct certificates, restarting from shifted bases.
std::vector<Certificate> find_many(const ColoringSpec& spec, std::size_t n, const Rational& target_product,
                                   std::size_t count, const SearchBudget& budget = {},
                                   SearchOptions options = {});

// Edge products for geometric targets: area S of a triangle, and the
// 1/n-normalized volume V of an n-simplex.
Rational product_for_area(const Rational& area);
Rational product_for_volume(std::size_t n, const Rational& volume);

struct Verification {
  enum class Failure { None, NotStandard, WrongProduct, WrongColor };
  bool ok = true;
  Failure failure = Failure::None;
  int vertex = -1;  // first offending vertex for WrongColor
  std::string diagnostic;
  explicit operator bool() const noexcept { return ok; }
};

Verification verify_certificate(const Certificate& c);

// Standard simplex from its vertex list (origin first), or nullopt.
std::optional<StandardSimplex> standard_simplex_from_vertices(const std::vector<Point>& vertices);

// Every monochromatic edge-product-1 standard simplex with all vertices among
// the rain's points, ordered by origin then edges.
std::vector<Certificate> brute_force_unit_simplices(const std::variant<Rain2D, RainND>& rain, const ColoringSpec& spec,
                                                    std::uint64_t limit = 200'000);

// The rain of the last RainBuilt step, if any.
std::optional<std::variant<Rain2D, RainND>> final_rain(const std::vector<TraceStep>& trace);

}  // namespace monosimplex
