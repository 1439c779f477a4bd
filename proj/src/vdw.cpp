#include "monosimplex/vdw.hpp"

#include <algorithm>

#include "monosimplex/errors.hpp"

namespace monosimplex {

ColorCube::ColorCube(std::size_t dim, std::uint64_t side, std::vector<Color> colors)
    : dim_(dim), side_(side), colors_(std::move(colors)) {
  if (dim_ == 0) throw InvalidArgument("cube dimension must be positive");
  std::uint64_t expected = 1;
  for (std::size_t i = 0; i < dim_; ++i) expected *= side_;
  if (colors_.size() != expected) {
    throw DimensionMismatch("cube of side " + std::to_string(side_) + " and dimension " + std::to_string(dim_) +
                            " needs " + std::to_string(expected) + " colors, got " + std::to_string(colors_.size()));
  }
}

Color ColorCube::at(std::span<const std::uint64_t> index) const {
  std::uint64_t flat = 0;
  for (auto i : index) flat = flat * side_ + i;
  return colors_[flat];
}

std::optional<APWitness> find_mono_ap(std::span<const Color> colors, std::uint64_t length) {
  if (length < 1) throw InvalidArgument("progression length must be at least 1");
  const std::uint64_t n = colors.size();
  for (std::uint64_t start = 0; start < n; ++start) {
    if (length == 1) return APWitness{start, 1, 1, colors[start]};
    const std::uint64_t max_step = (n - 1 - start) / (length - 1);
    for (std::uint64_t step = 1; step <= max_step; ++step) {
      const Color c = colors[start];
      std::uint64_t i = 1;
      while (i < length && colors[start + i * step] == c) ++i;
      if (i == length) return APWitness{start, step, length, c};
    }
  }
  return std::nullopt;
}

bool is_mono(std::span<const Color> colors, const APWitness& w) {
  if (w.length == 0 || w.step == 0) return false;
  if (w.start + (w.length - 1) * w.step >= colors.size()) return false;
  for (std::uint64_t i = 0; i < w.length; ++i) {
    if (colors[w.start + i * w.step] != w.color) return false;
  }
  return true;
}

namespace {

bool next_index(std::vector<std::uint64_t>& v, std::uint64_t side) {
  for (std::size_t i = v.size(); i-- > 0;) {
    if (++v[i] < side) return true;
    v[i] = 0;
  }
  return false;
}

std::uint64_t flat_index(const std::vector<std::uint64_t>& origin, const std::vector<std::uint64_t>& v,
                         std::uint64_t scale, std::uint64_t side) {
  std::uint64_t flat = 0;
  for (std::size_t i = 0; i < origin.size(); ++i) flat = flat * side + origin[i] + scale * v[i];
  return flat;
}

bool grid_is_mono(const ColorCube& cube, const std::vector<std::uint64_t>& origin, std::uint64_t scale,
                  std::uint64_t side, Color c) {
  std::vector<std::uint64_t> v(cube.dim(), 0);
  const auto colors = cube.colors();
  do {
    if (colors[flat_index(origin, v, scale, cube.side())] != c) return false;
  } while (next_index(v, side));
  return true;
}

}  // namespace

void for_each_mono_cube(const ColorCube& cube, std::uint64_t side,
                        const std::function<bool(const GridWitness&)>& visit) {
  if (side < 1) throw InvalidArgument("grid side must be at least 1");
  const std::uint64_t l = cube.side();
  if (l == 0) return;
  std::vector<std::uint64_t> origin(cube.dim(), 0);
  do {
    const std::uint64_t reach = l - 1 - *std::max_element(origin.begin(), origin.end());
    const std::uint64_t max_scale = side == 1 ? 1 : reach / (side - 1);
    const Color c = cube.colors()[flat_index(origin, origin, 0, l)];
    for (std::uint64_t scale = 1; scale <= max_scale; ++scale) {
      if (grid_is_mono(cube, origin, scale, side, c)) {
        if (!visit(GridWitness{origin, scale, side, c})) return;
      }
    }
  } while (next_index(origin, l));
}

std::optional<GridWitness> find_mono_cube(const ColorCube& cube, std::uint64_t side) {
  std::optional<GridWitness> out;
  for_each_mono_cube(cube, side, [&](const GridWitness& w) {
    out = w;
    return false;
  });
  return out;
}

std::uint64_t longest_mono_side(const ColorCube& cube) {
  if (cube.side() == 0) return 0;
  // existence is monotone in the side, so bisect
  std::uint64_t lo = 1, hi = cube.side();
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (find_mono_cube(cube, mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

bool is_mono(const ColorCube& cube, const GridWitness& w) {
  if (w.origin.size() != cube.dim() || w.side == 0 || w.scale == 0) return false;
  for (auto o : w.origin) {
    if (o + (w.side - 1) * w.scale >= cube.side()) return false;
  }
  return grid_is_mono(cube, w.origin, w.scale, w.side, w.color);
}

namespace {

class VdwSearch {
 public:
  VdwSearch(int colors, std::uint64_t length, const VdwBudget& budget)
      : h_(colors), n_(length), budget_(budget), start_(std::chrono::steady_clock::now()) {}

  VdwResult run() {
    VdwResult out;
    col_.assign(1, 0);
    bool complete = true;
    try {
      dfs(0, -1);
    } catch (const Exhausted&) {
      complete = false;
    }
    out.status = complete ? VdwResult::Status::Exact : VdwResult::Status::Unknown;
    out.value = best_.size() + 1;
    out.extremal = best_;
    out.nodes = nodes_;
    return out;
  }

 private:
  struct Exhausted {};

  // Would color c at position p close a monochromatic N-term progression?
  bool closes(std::uint64_t p, Color c) const {
    const std::uint64_t max_d = p / (n_ - 1);
    for (std::uint64_t d = 1; d <= max_d; ++d) {
      std::uint64_t j = 1;
      while (j < n_ && col_[p - j * d] == c) ++j;
      if (j == n_) return true;
    }
    return false;
  }

  void tick() {
    if (++nodes_ > budget_.max_nodes) throw Exhausted{};
    if ((nodes_ & 0xFFFF) == 0 && std::chrono::steady_clock::now() - start_ > budget_.max_time) throw Exhausted{};
  }

  // Positions [0, p) are colored without a monochromatic progression.
  void dfs(std::uint64_t p, int max_used) {
    tick();
    if (p > best_.size()) best_.assign(col_.begin(), col_.begin() + static_cast<std::ptrdiff_t>(p));
    if (col_.size() <= p) col_.resize(p + 1);
    // colors are introduced in order: 0 first, then at most one new color per step
    const int top = std::min(h_ - 1, max_used + 1);
    for (Color c = 0; c <= top; ++c) {
      if (closes(p, c)) continue;
      col_[p] = c;
      dfs(p + 1, std::max(max_used, c));
    }
  }

  int h_;
  std::uint64_t n_;
  VdwBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::vector<Color> col_;
  std::vector<Color> best_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

VdwResult vdw_number(int colors, std::uint64_t length, const VdwBudget& budget) {
  if (colors < 1) throw InvalidArgument("number of colors must be at least 1");
  if (length < 1) throw InvalidArgument("progression length must be at least 1");
  if (length == 1) return VdwResult{VdwResult::Status::Exact, 1, {}, 0};
  return VdwSearch(colors, length, budget).run();
}

}  // namespace monosimplex
