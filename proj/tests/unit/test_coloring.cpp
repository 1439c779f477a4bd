#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "gen.hpp"
#include "monosimplex/coloring.hpp"
#include "monosimplex/errors.hpp"

using namespace monosimplex;

namespace {

std::vector<std::uint8_t> bytes(std::initializer_list<int> b) { return std::vector<std::uint8_t>(b.begin(), b.end()); }

std::vector<ColoringSpec> sample_specs() {
  return {
      parse_spec("const:3:2"),
      parse_spec("hash:2:0x1"),
      parse_spec("hash:7:12345"),
      parse_spec("mod:3:4:=1@0,1,0,1;2@1,1,1,1:0"),
      parse_spec("banded:4:1:=0@0;3@1/2,1/3:1"),
  };
}

}  // namespace

TEST_SUITE("coloring") {

TEST_CASE("canonical_bytes framing") {
  CHECK(canonical_bytes(Point{Rational(0)}) == bytes({0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1}));
  CHECK(canonical_bytes(Point{rat(1, 2)}) == canonical_bytes(Point{rat(2, 4)}));
  CHECK(canonical_bytes(Point{rat(-1, 2)}) == bytes({1, 0, 0, 0, 1, 1, 0, 0, 0, 1, 2}));
  const auto two = canonical_bytes(Point{Rational(1), Rational(2)});
  const auto one = canonical_bytes(Point{Rational(12)});
  CHECK(two != one);
  CHECK(std::count(two.begin(), two.end(), 0xFF) == 1);
  CHECK(std::count(one.begin(), one.end(), 0xFF) == 0);
  CHECK(canonical_bytes(Point{Rational(256)}) == bytes({0, 0, 0, 0, 2, 1, 0, 0, 0, 0, 1, 1}));
}

TEST_CASE("hash pipeline constants") {
  const std::vector<std::uint8_t> none;
  CHECK(fnv1a64(none, 0) == 0xcbf29ce484222325ULL);
  const std::vector<std::uint8_t> a{'a'};
  CHECK(fnv1a64(a, 0) == 0xaf63dc4c8601ec8cULL);
  CHECK(splitmix64_mix(0) == 0);
}

TEST_CASE("seeded hash matches the golden file") {
  std::ifstream in(std::string(MONOSIMPLEX_SOURCE_DIR) + "/tests/golden/hash_colors.txt");
  REQUIRE(in);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string seed, h, point;
    int color = -1;
    fields >> seed >> h >> point >> color;
    const ColoringSpec spec = parse_spec("hash:" + h + ":" + seed);
    INFO(line);
    CHECK(color_at(spec, Point::parse(point)) == color);
    ++rows;
  }
  CHECK(rows == 100);
}

TEST_CASE("color_at examples") {
  CHECK(color_at(parse_spec("const:3:2"), Point{rat(7, 3), Rational(-1)}) == 2);
  const auto h = parse_spec("hash:5:0xDEADBEEF");
  const Point p{rat(1, 3), rat(-4, 9)};
  CHECK(color_at(h, p) == color_at(h, p));
  const auto banded = parse_spec("banded:2:1:=0@0:1");
  CHECK(color_at(banded, Point{Rational(5), Rational(0)}) == 0);
  CHECK(color_at(banded, Point{Rational(5), rat(1, 2)}) == 1);
  CHECK_THROWS_AS(color_at(banded, Point{Rational(5)}), DimensionMismatch);
}

TEST_CASE("modular table keys") {
  const auto spec = parse_spec("mod:3:5:=2@2,1,3,1;1@4,2,1,1:0");
  CHECK(color_at(spec, Point{Rational(7), Rational(3)}) == 2);
  CHECK(color_at(spec, Point{Rational(-3), rat(2, 3)}) == 0);
  CHECK(color_at(spec, Point{Rational(-3), Rational(3)}) == 2);
  CHECK(color_at(spec, Point{rat(4, 7), Rational(1)}) == 1);
  CHECK(color_at(spec, Point{rat(1, 7), Rational(1)}) == 0);
  CHECK_THROWS_AS(parse_spec("mod:3:5:=2@5,1:0"), InvalidArgument);
  CHECK_THROWS_AS(parse_spec("mod:3:5:=2@1,1;1@1,2,3,4:0"), InvalidArgument);
  CHECK_THROWS_AS(parse_spec("mod:3:5:=2@1,1,1:0"), InvalidArgument);
  CHECK_THROWS_AS(color_at(spec, Point{Rational(1), Rational(2), Rational(3)}), DimensionMismatch);
  const auto empty = parse_spec("mod:2:3:=:1");
  CHECK(color_at(empty, Point{Rational(1), Rational(2), Rational(3)}) == 1);
}

TEST_CASE("tables from files") {
  const auto dir = std::filesystem::temp_directory_path() / "monosimplex_coloring_test";
  std::filesystem::create_directories(dir);
  const auto table = (dir / "table.txt").string();
  std::ofstream(table) << "# residues of (x, y)\n1@0,1,0,1\n\n2@1,1,0,1\n";
  const auto spec = parse_spec("mod:3:2:" + table + ":0");
  CHECK(spec.source() == table);
  CHECK(color_at(spec, Point{Rational(4), Rational(0)}) == 1);
  CHECK(color_at(spec, Point{Rational(3), Rational(2)}) == 2);
  CHECK(color_at(spec, Point{rat(1, 2), Rational(2)}) == 0);
  CHECK(parse_spec(spec.str()) == spec);
  CHECK(spec == parse_spec("mod:3:2:=1@0,1,0,1;2@1,1,0,1:0"));
  const auto rules = (dir / "rules.txt").string();
  std::ofstream(rules) << "0@0\n2@1/2\n";
  const auto banded = parse_spec("banded:3:0:" + rules + ":1");
  CHECK(color_at(banded, Point{rat(1, 2), Rational(9)}) == 2);
  CHECK_THROWS_AS(parse_spec("banded:3:0:" + (dir / "missing.txt").string() + ":1"), InvalidArgument);
  std::filesystem::remove_all(dir);
}

TEST_CASE("parse_spec") {
  const auto c = parse_spec("const:3:1");
  CHECK(c.kind() == ColoringSpec::Kind::Constant);
  CHECK(c.colors() == 3);
  CHECK(c.fixed_color() == 1);
  const auto h = parse_spec("hash:2:0xDEADBEEF");
  CHECK(h.kind() == ColoringSpec::Kind::SeededHash);
  CHECK(h.colors() == 2);
  CHECK(h.seed() == 0xDEADBEEFULL);
  CHECK(parse_spec("hash:2:18446744073709551615").seed() == ~0ULL);
  CHECK_THROWS_AS(parse_spec("const:0:0"), InvalidArgument);
  CHECK_THROWS_AS(parse_spec("const:2:2"), InvalidArgument);
  CHECK_THROWS_AS(parse_spec("mod:2:0:=:0"), InvalidArgument);
  CHECK_THROWS_AS(parse_spec("hash:2:18446744073709551616"), InvalidArgument);
  CHECK_THROWS_AS(parse_spec("stripes:2:1"), ParseError);
  try {
    parse_spec("const:3:x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 8);
  }
  try {
    parse_spec("hash:2");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
}

TEST_CASE("str round-trips") {
  for (const auto& spec : sample_specs()) {
    INFO(spec.str());
    CHECK(parse_spec(spec.str()) == spec);
  }
  CHECK(parse_spec("hash:2:0x1").str() == "hash:2:0x1");
}

TEST_CASE("colors stay in range") {
  gen::Engine g(40);
  for (const auto& spec : sample_specs()) {
    for (int i = 0; i < 20000; ++i) {
      const auto dim = static_cast<std::size_t>(spec.kind() == ColoringSpec::Kind::ModularTable ? 2 : gen::integer(g, 2, 4));
      const Color c = color_at(spec, gen::point(g, dim, 1000000, 1000000));
      CHECK_UNARY(c >= 0);
      CHECK_UNARY(c < spec.colors());
    }
  }
}

TEST_CASE("colors do not depend on the representative") {
  gen::Engine g(41);
  for (const auto& spec : sample_specs()) {
    for (int i = 0; i < 500; ++i) {
      const long a = gen::integer(g, -100, 100), b = gen::integer(g, 1, 100), k = gen::integer(g, 1, 30);
      const long y = gen::integer(g, -5, 5);
      CHECK(color_at(spec, Point{rat(a * k, b * k), rat(y * k, k)}) == color_at(spec, Point{rat(a, b), Rational(y)}));
    }
  }
}

TEST_CASE("hash colors look balanced") {
  const auto spec = parse_spec("hash:3:0x2");
  std::array<int, 3> seen{};
  for (long x = 0; x < 3000; ++x) ++seen[static_cast<std::size_t>(color_at(spec, Point{Rational(x), Rational(0)}))];
  for (int n : seen) CHECK((n > 800 && n < 1200));
}

}
