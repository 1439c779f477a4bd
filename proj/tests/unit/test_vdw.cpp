#include <map>

#include "doctest.h"
#include "gen.hpp"
#include "monosimplex/errors.hpp"
#include "monosimplex/vdw.hpp"

using namespace monosimplex;

namespace {

// Straight scan over (start, step) in canonical order.
std::optional<APWitness> brute_ap(const std::vector<Color>& c, std::uint64_t N) {
  const std::uint64_t L = c.size();
  for (std::uint64_t start = 0; start < L; ++start) {
    for (std::uint64_t step = 1; N <= 1 || start + (N - 1) * step < L; ++step) {
      bool mono = true;
      for (std::uint64_t i = 1; i < N && mono; ++i) mono = c[start + i * step] == c[start];
      if (mono) return APWitness{start, step, N, c[start]};
      if (N <= 1) break;
    }
  }
  return std::nullopt;
}

// Every h-coloring of [0, L) contains a monochromatic N-AP.
bool all_colorings_forced(int h, std::uint64_t L, std::uint64_t N) {
  std::vector<Color> c(L, 0);
  while (true) {
    if (!brute_ap(c, N)) return false;
    std::size_t i = 0;
    while (i < L && ++c[i] == h) c[i++] = 0;
    if (i == L) return true;
  }
}

}  // namespace

TEST_SUITE("vdw") {

TEST_CASE("find_mono_ap examples") {
  const std::vector<Color> zeros(5, 0);
  CHECK(find_mono_ap(zeros, 5) == APWitness{0, 1, 5, 0});
  const std::vector<Color> alt{0, 1, 0, 1, 0, 1, 0, 1, 0};
  CHECK(find_mono_ap(alt, 3) == APWitness{0, 2, 3, 0});
  const std::vector<Color> none{0, 1, 1, 0};
  CHECK_FALSE(find_mono_ap(none, 3));
  CHECK(find_mono_ap(none, 1) == APWitness{0, 1, 1, 0});
  CHECK_FALSE(find_mono_ap(std::vector<Color>{}, 1));
  CHECK_THROWS_AS(find_mono_ap(none, 0), InvalidArgument);
}

TEST_CASE("find_mono_ap agrees with brute force") {
  gen::Engine g(30);
  for (int i = 0; i < 2000; ++i) {
    const auto L = static_cast<std::size_t>(gen::integer(g, 0, 30));
    const int h = static_cast<int>(gen::integer(g, 1, 3));
    const auto N = static_cast<std::uint64_t>(gen::integer(g, 1, 6));
    const auto c = gen::colors(g, L, h);
    const auto got = find_mono_ap(c, N);
    CHECK(got == brute_ap(c, N));
    if (got) CHECK(is_mono(c, *got));
  }
}

TEST_CASE("find_mono_cube examples") {
  const ColorCube constant(2, 3, std::vector<Color>(9, 1));
  CHECK(find_mono_cube(constant, 3) == GridWitness{{0, 0}, 1, 3, 1});
  std::vector<Color> checker;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) checker.push_back((i + j) % 2);
  CHECK(find_mono_cube(ColorCube(2, 3, checker), 2) == GridWitness{{0, 0}, 2, 2, 0});
  CHECK_FALSE(find_mono_cube(ColorCube(2, 2, {0, 1, 1, 0}), 2));
  CHECK(longest_mono_side(ColorCube(2, 3, checker)) == 2);
  CHECK(longest_mono_side(constant) == 3);
  CHECK_THROWS_AS(ColorCube(2, 3, std::vector<Color>(8, 0)), InvalidArgument);
}

TEST_CASE("cube witnesses are monochromatic and first in canonical order") {
  gen::Engine g(31);
  for (int i = 0; i < 300; ++i) {
    const auto d = static_cast<std::size_t>(gen::integer(g, 1, 3));
    const auto L = static_cast<std::uint64_t>(gen::integer(g, 1, d == 3 ? 5 : 8));
    std::uint64_t cells = 1;
    for (std::size_t k = 0; k < d; ++k) cells *= L;
    const ColorCube cube(d, L, gen::colors(g, cells, static_cast<int>(gen::integer(g, 1, 3))));
    const auto side = static_cast<std::uint64_t>(gen::integer(g, 1, 3));
    const auto got = find_mono_cube(cube, side);
    std::optional<GridWitness> first;
    for_each_mono_cube(cube, side, [&](const GridWitness& w) {
      CHECK(is_mono(cube, w));
      if (!first) first = w;
      return true;
    });
    CHECK(got == first);
    if (got) CHECK(is_mono(cube, *got));
  }
}

TEST_CASE("one-dimensional cubes agree with progressions") {
  gen::Engine g(32);
  for (int i = 0; i < 100; ++i) {
    const auto L = static_cast<std::size_t>(gen::integer(g, 1, 30));
    const auto c = gen::colors(g, L, static_cast<int>(gen::integer(g, 1, 3)));
    const auto N = static_cast<std::uint64_t>(gen::integer(g, 1, 5));
    const auto ap = find_mono_ap(c, N);
    const auto cube = find_mono_cube(ColorCube(1, L, c), N);
    REQUIRE(ap.has_value() == cube.has_value());
    if (ap) {
      CHECK(cube->origin == std::vector<std::uint64_t>{ap->start});
      CHECK(cube->scale == ap->step);
      CHECK(cube->color == ap->color);
    }
  }
}

TEST_CASE("vdw_number trivial rows") {
  for (std::uint64_t N = 1; N <= 6; ++N) CHECK(vdw_number(1, N).value == N);
  for (int h = 1; h <= 5; ++h) CHECK(vdw_number(h, 2).value == static_cast<std::uint64_t>(h) + 1);
  CHECK(vdw_number(4, 1).value == 1);
  CHECK_THROWS_AS(vdw_number(0, 3), InvalidArgument);
  CHECK_THROWS_AS(vdw_number(2, 0), InvalidArgument);
}

TEST_CASE("vdw_number(2,3) = 9 against exhaustive colorings") {
  const auto r = vdw_number(2, 3);
  REQUIRE(r.exact());
  CHECK(r.value == 9);
  CHECK(all_colorings_forced(2, 9, 3));
  CHECK_FALSE(all_colorings_forced(2, 8, 3));
  CHECK(r.extremal.size() == 8);
  CHECK_FALSE(brute_ap(r.extremal, 3));
}

TEST_CASE("vdw_number witnesses and monotonicity") {
  std::map<std::pair<int, std::uint64_t>, std::uint64_t> values;
  for (int h = 1; h <= 3; ++h) {
    for (std::uint64_t N = 1; N <= 4; ++N) {
      if (h == 3 && N == 4) continue;
      const auto r = vdw_number(h, N);
      REQUIRE(r.exact());
      CHECK(r.extremal.size() == r.value - 1);
      CHECK_FALSE(brute_ap(r.extremal, N));
      for (auto c : r.extremal) CHECK((c >= 0 && c < h));
      values[{h, N}] = r.value;
    }
  }
  CHECK(values[{2, 4}] == 35);
  CHECK(values[{3, 3}] == 27);
  for (const auto& [key, v] : values) {
    const auto [h, N] = key;
    if (values.count({h, N + 1})) CHECK(v <= values[{h, N + 1}]);
    if (values.count({h + 1, N})) CHECK(v <= values[{h + 1, N}]);
  }
}

TEST_CASE("vdw_number reports exhaustion as a lower bound") {
  VdwBudget tiny;
  tiny.max_nodes = 50;
  const auto r = vdw_number(2, 5, tiny);
  CHECK_FALSE(r.exact());
  CHECK(r.value >= 1);
  CHECK(r.value <= 178);
  CHECK_FALSE(brute_ap(r.extremal, 5));
}

}
