#include "doctest.h"
#include "monosimplex/errors.hpp"
#include "monosimplex/rain.hpp"
#include "monosimplex/sr_expr.hpp"
#include "monosimplex/vdw.hpp"

using namespace monosimplex;

TEST_SUITE("sr_expr") {

TEST_CASE("sr_expr structure") {
  CHECK(sr_expr(1) == SRExpr::literal(2));
  CHECK(sr_expr(2) == SRExpr::vdw(2, SRExpr::literal(5)));
  CHECK(sr_expr(3) == SRExpr::vdw(3, SRExpr::f_apply(SRExpr::vdw(2, SRExpr::literal(5)))));
  CHECK(sr_expr(3).str() == "vdW_3(f(vdW_2(5)))");
  CHECK(sr_expr(4).str() == "vdW_4(f(vdW_3(f(vdW_2(5)))))");
  CHECK_THROWS_AS(sr_expr(0), InvalidArgument);
}

TEST_CASE("sr_n_expr structure") {
  for (unsigned h = 1; h <= 5; ++h) CHECK(sr_n_expr(2, h) == sr_expr(h));
  CHECK(sr_n_expr(3, 1) == SRExpr::literal(2));
  CHECK(sr_n_expr(3, 2) == SRExpr::vdw_grid(2, 2, SRExpr::fn_apply(3, SRExpr::literal(2))));
  CHECK(sr_n_expr(3, 2).str() == "vdW_2(M_2(F_3(2)))");
  CHECK(sr_n_expr(4, 3).str() == "vdW_3(M_3(F_4(vdW_2(M_3(F_4(2))))))");
  CHECK_THROWS_AS(sr_n_expr(1, 2), InvalidArgument);
}

TEST_CASE("eval_expr") {
  const VdwTable empty;
  CHECK(eval_expr(SRExpr::literal(2), empty) == BigInt(2));
  VdwTable t;
  t.insert(VdwKey{2, 1, 5}, VdwEntry{178, Trust::External});
  CHECK(eval_expr(SRExpr::vdw(2, SRExpr::literal(5)), t) == BigInt(178));
  CHECK_FALSE(eval_expr(sr_expr(3), t));
  CHECK(first_missing(sr_expr(3), t)->str() == "vdW_3(" + to_string(f_len(178)) + ")");
  CHECK(eval_expr(SRExpr::f_apply(SRExpr::literal(3)), empty) == BigInt(19));
  CHECK(eval_expr(SRExpr::fn_apply(3, SRExpr::literal(3)), empty) == BigInt(361));
  CHECK(first_missing(SRExpr::literal(2), empty) == std::nullopt);
}

TEST_CASE("eval of the 3-D recursion with a grid entry") {
  VdwTable t;
  t.insert(VdwKey{2, 2, 5}, VdwEntry{99, Trust::External});
  CHECK(eval_expr(sr_n_expr(3, 2), t) == BigInt(99));
  CHECK_FALSE(eval_expr(sr_n_expr(3, 2), VdwTable{}));
  CHECK(first_missing(sr_n_expr(3, 2), VdwTable{})->str() == "vdW_2(M_2(5))");
}

TEST_CASE("table parsing") {
  const auto t = VdwTable::parse(
      "# comment\n"
      "2 3 9 verified\n"
      "2 5 178 external\n"
      "2 M2(5) 99 external\n");
  CHECK(t.entries().size() == 3);
  CHECK(t.lookup(VdwKey{2, 1, 3}) == BigInt(9));
  CHECK(t.entries().at(VdwKey{2, 1, 3}).trust == Trust::Verified);
  CHECK(t.lookup(VdwKey{2, 2, 5}) == BigInt(99));
  CHECK_FALSE(t.lookup(VdwKey{3, 1, 3}));
  CHECK_THROWS_AS(VdwTable::parse("2 3 nine verified\n"), InvalidArgument);
  CHECK_THROWS_AS(VdwTable::parse("2 3 9 maybe\n"), InvalidArgument);
  CHECK_THROWS_AS(VdwTable::parse("2 3 9 verified\n2 3 10 external\n"), InvalidArgument);
}

TEST_CASE("shipped table: verified entries recompute") {
  const auto t = VdwTable::load(std::string(MONOSIMPLEX_SOURCE_DIR) + "/data/vdw_known.txt");
  CHECK(t.lookup(VdwKey{2, 1, 3}) == BigInt(9));
  CHECK(t.lookup(VdwKey{2, 1, 4}) == BigInt(35));
  CHECK(t.lookup(VdwKey{3, 1, 3}) == BigInt(27));
  for (const auto& [key, entry] : t.entries()) {
    if (entry.trust != Trust::Verified) continue;
    CHECK(key.dim == 1);
    if (key.colors == 3 && key.side == 3) continue;  // covered by the vdw suite
    if (key.colors == 2 && key.side == 4) continue;
    CHECK(vdw_number(static_cast<int>(key.colors), key.side.get_ui()).value == entry.value);
  }
}

}
