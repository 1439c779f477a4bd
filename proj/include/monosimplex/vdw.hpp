#pragma once

// Monochromatic progressions and grid homothets, and exact van der Waerden
// numbers for desk-scale parameters.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace monosimplex {

using Color = int;

// Positions start + i*step, i < length, all carry `color`.
struct APWitness {
  std::uint64_t start = 0;
  std::uint64_t step = 1;
  std::uint64_t length = 0;
  Color color = 0;
  friend bool operator==(const APWitness&, const APWitness&) = default;
};

// Points origin + scale*v, v in {0..side-1}^d, all carry `color`.
struct GridWitness {
  std::vector<std::uint64_t> origin;
  std::uint64_t scale = 1;
  std::uint64_t side = 0;
  Color color = 0;
  friend bool operator==(const GridWitness&, const GridWitness&) = default;
};

// A colored cube {0..side-1}^dim stored row-major (last index fastest).
class ColorCube {
 public:
  ColorCube(std::size_t dim, std::uint64_t side, std::vector<Color> colors);

  std::size_t dim() const noexcept { return dim_; }
  std::uint64_t side() const noexcept { return side_; }
  std::span<const Color> colors() const noexcept { return colors_; }
  Color at(std::span<const std::uint64_t> index) const;

 private:
  std::size_t dim_;
  std::uint64_t side_;
  std::vector<Color> colors_;
};

// First witness by start ascending, then step ascending.
std::optional<APWitness> find_mono_ap(std::span<const Color> colors, std::uint64_t length);

// Witnesses of the given side by origin (lexicographic) ascending, then scale
// ascending. Stops when `visit` returns false. With dim 1 the order is that of
// find_mono_ap.
void for_each_mono_cube(const ColorCube& cube, std::uint64_t side, const std::function<bool(const GridWitness&)>& visit);
std::optional<GridWitness> find_mono_cube(const ColorCube& cube, std::uint64_t side);
// Longest side for which a witness exists (0 for an empty cube).
std::uint64_t longest_mono_side(const ColorCube& cube);

// Direct re-reading of the input; used to double-check witnesses.
bool is_mono(std::span<const Color> colors, const APWitness& w);
bool is_mono(const ColorCube& cube, const GridWitness& w);

struct VdwBudget {
  std::uint64_t max_nodes = 20'000'000'000ULL;
  std::chrono::milliseconds max_time{std::chrono::minutes(10)};
};

struct VdwResult {
  enum class Status { Exact, Unknown };
  Status status = Status::Unknown;
  // Exact: vdW_h(N). Unknown: the best lower bound established so far.
  std::uint64_t value = 0;
  // Longest coloring seen without a monochromatic N-term progression; for an
  // exact result its length is value - 1.
  std::vector<Color> extremal;
  std::uint64_t nodes = 0;
  bool exact() const noexcept { return status == Status::Exact; }
};

// Least L such that every h-coloring of {0..L-1} has a monochromatic
// progression of length N, by exhaustive backtracking with color-symmetry
// breaking and earliest-violation pruning.
VdwResult vdw_number(int colors, std::uint64_t length, const VdwBudget& budget = {});

}  // namespace monosimplex
