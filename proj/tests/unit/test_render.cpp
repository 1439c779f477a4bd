#include <fstream>
#include <regex>
#include <sstream>

#include "doctest.h"
#include "monosimplex/errors.hpp"
#include "monosimplex/render.hpp"

using namespace monosimplex;

namespace {

Point P(const Rational& x, const Rational& y) { return Point{x, y}; }

RenderPlan sub3_plan(RenderFormat format) {
  const Rain2D big(P(0, 0), Rational(1), 19);
  return RenderPlan{big, enumerate_points(subrain2d(big, 3)), 10, 120, format};
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_SUITE("render") {

TEST_CASE("layer heights are strictly decreasing and positive") {
  const auto h = layer_heights(19, 120);
  const std::vector<std::int64_t> expect{120, 60, 40, 30, 24, 20, 17, 15, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4};
  CHECK(h == expect);
  for (std::uint64_t l : {2, 3, 50, 300}) {
    const auto hs = layer_heights(l, 120);
    CHECK(hs.size() == l - 1);
    for (std::size_t i = 1; i < hs.size(); ++i) CHECK(hs[i] < hs[i - 1]);
    CHECK(hs.back() >= 1);
  }
  CHECK(layer_heights(300, 120).front() > 120);
  CHECK_THROWS_AS(layer_heights(5, 0), InvalidArgument);
}

TEST_CASE("length-19 rain topology in SVG") {
  const std::string svg = render(sub3_plan(RenderFormat::Svg));
  CHECK(count(svg, "r=\"0.5\"") == 19);
  CHECK(count(svg, "r=\"0.35\"") == 171);
  CHECK(count(svg, "r=\"1\"") == 6);
  // Circled points: heights 1/6, 1/3, 1/4 map to layers 6, 3, 4 at columns {0,6,12}, {0,6}, {0}.
  const auto heights = layer_heights(19, 120);
  auto y = [&](int layer) { return 5 + 120 - heights[static_cast<std::size_t>(layer - 1)]; };
  for (auto [x, layer] : std::vector<std::pair<int, int>>{{0, 6}, {6, 6}, {12, 6}, {0, 3}, {6, 3}, {0, 4}}) {
    const std::string c = "<circle cx=\"" + std::to_string(5 + 10 * x) + "\" cy=\"" + std::to_string(y(layer)) + "\" r=\"1\"/>";
    CHECK_MESSAGE(svg.find(c) != std::string::npos, c);
  }
  CHECK(render(sub3_plan(RenderFormat::Svg)) == svg);
}

TEST_CASE("length-19 rain topology in ASCII") {
  const std::string txt = render(sub3_plan(RenderFormat::Ascii));
  std::istringstream lines(txt);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "rain(origin (0,0), step 1, length 19)");
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  REQUIRE(rows.size() == 19);
  for (std::size_t k = 1; k <= 18; ++k) {
    CHECK(count(rows[k - 1], " *") + count(rows[k - 1], " O") == 19 - k);
    CHECK(rows[k - 1].rfind("y=" + rat(1, static_cast<long>(k)).str() + " ", 0) == 0);
  }
  CHECK(count(rows[18], " *") == 19);
  CHECK(count(txt, " O") == 6);
  CHECK(count(rows[5], " O") == 3);
  CHECK(count(rows[2], " O") == 2);
  CHECK(count(rows[3], " O") == 1);
}

TEST_CASE("golden files") {
  const std::string dir = std::string(MONOSIMPLEX_SOURCE_DIR) + "/tests/golden/";
  CHECK(render(sub3_plan(RenderFormat::Svg)) == slurp(dir + "rain19_sub3.svg"));
  CHECK(render(sub3_plan(RenderFormat::Ascii)) == slurp(dir + "rain19_sub3.txt"));
}

TEST_CASE("small cases") {
  const Rain2D two(P(0, 0), Rational(1), 2);
  const std::string svg = render(RenderPlan{two, {}, 10, 120, RenderFormat::Svg});
  CHECK(count(svg, "<circle") == 3);
  CHECK(count(svg, "r=\"1\"") == 0);
  CHECK(svg.find("stroke") == std::string::npos);
  CHECK(render(RenderPlan{two, {}, 10, 120, RenderFormat::Ascii}) ==
        "rain(origin (0,0), step 1, length 2)\ny=1 | *\ny=0 | * *\n");
}

TEST_CASE("render errors") {
  const Rain2D two(P(0, 0), Rational(1), 2);
  CHECK_THROWS_AS(render(RenderPlan{two, {P(5, 5)}, 10, 120, RenderFormat::Svg}), InvalidArgument);
  CHECK_THROWS_AS(render(RenderPlan{Rain2D(P(0, 0), Rational(1), 1000), {}, 10, 120, RenderFormat::Svg}),
                  LimitExceeded);
  CHECK_THROWS_AS(render(RenderPlan{two, {}, 0, 120, RenderFormat::Svg}), InvalidArgument);
}

}
