#pragma once

/**
 * @file coloring.hpp
 * @brief Pure, deterministic colorings of rational space.
 *
 * Spec grammar (one line):
 *
 *     const:<h>:<color>
 *     hash:<h>:<seed>                      seed decimal or 0x-hex, 64 bits
 *     mod:<h>:<M>:<table>:<default>
 *     banded:<h>:<axis>:<rules>:<default>
 *
 * <table> and <rules> are file paths, or an inline list introduced by `=`
 * with entries separated by `;`. Each entry (one per line in a file) is
 * `<color>@<v1>,<v2>,...`:
 *   - mod: the values are the residues (num mod M, den mod M) of each
 *     coordinate in order, so 2*dim integers in [0, M);
 *   - banded: the values are the rational coordinates (on `axis`) that the
 *     rule paints with <color>; the first matching rule wins.
 * Lines starting with `#` are comments.
 *
 * The seeded hash is fixed bit-exactly: FNV-1a 64 over canonical_bytes with
 * the seed XORed into the offset basis, then the SplitMix64 finalizer, then
 * reduction mod h.
 */

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "monosimplex/geometry.hpp"
#include "monosimplex/vdw.hpp"

namespace monosimplex {

class ColoringSpec {
 public:
  enum class Kind { Constant, SeededHash, ModularTable, Banded };

  struct BandRule {
    std::vector<Rational> values;
    Color color = 0;
    friend bool operator==(const BandRule&, const BandRule&) = default;
  };

  static ColoringSpec constant(int colors, Color color);
  static ColoringSpec seeded_hash(int colors, std::uint64_t seed);
  // Keys hold 2*dim residues; an empty table is dimension-agnostic.
  static ColoringSpec modular_table(int colors, BigInt modulus, std::map<std::vector<BigInt>, Color> table,
                                    Color fallback, std::string source = {});
  static ColoringSpec banded(int colors, std::size_t axis, std::vector<BandRule> rules, Color fallback,
                             std::string source = {});

  Kind kind() const noexcept { return kind_; }
  int colors() const noexcept { return colors_; }
  Color fixed_color() const noexcept { return fixed_; }
  std::uint64_t seed() const noexcept { return seed_; }
  const BigInt& modulus() const noexcept { return modulus_; }
  const std::map<std::vector<BigInt>, Color>& table() const noexcept { return table_; }
  std::size_t axis() const noexcept { return axis_; }
  const std::vector<BandRule>& rules() const noexcept { return rules_; }
  Color fallback() const noexcept { return fixed_; }
  // File the table/rules came from; empty for inline or in-memory specs.
  const std::string& source() const noexcept { return source_; }

  // Equivalence of the coloring, ignoring where tables were read from.
  friend bool operator==(const ColoringSpec& a, const ColoringSpec& b);

  // Renders in the grammar above; reparsing yields an equivalent spec.
  std::string str() const;

 private:
  ColoringSpec() = default;

  Kind kind_ = Kind::Constant;
  int colors_ = 1;
  Color fixed_ = 0;  // constant color, or fallback for mod/banded
  std::uint64_t seed_ = 0;
  BigInt modulus_;
  std::map<std::vector<BigInt>, Color> table_;
  std::size_t axis_ = 0;
  std::vector<BandRule> rules_;
  std::string source_;
};

std::vector<std::uint8_t> canonical_bytes(const Point& p);
std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes, std::uint64_t seed);
std::uint64_t splitmix64_mix(std::uint64_t z);

Color color_at(const ColoringSpec& spec, const Point& p);

ColoringSpec parse_spec(std::string_view text);

}  // namespace monosimplex
