#include "monosimplex/coloring.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "monosimplex/errors.hpp"

namespace monosimplex {

namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

void check_colors(int colors) {
  if (colors < 1) throw InvalidArgument("a coloring needs at least one color");
}

void check_color(Color c, int colors, const char* what) {
  if (c < 0 || c >= colors) {
    throw InvalidArgument(std::string(what) + " " + std::to_string(c) + " is outside [0, " + std::to_string(colors) + ")");
  }
}

void append_magnitude(std::vector<std::uint8_t>& out, const BigInt& v) {
  std::vector<std::uint8_t> bytes;
  if (sgn(v) == 0) {
    bytes.push_back(0);
  } else {
    std::size_t count = 0;
    bytes.resize((mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8);
    mpz_export(bytes.data(), &count, 1, 1, 1, 0, v.get_mpz_t());
    bytes.resize(count);
  }
  const auto len = static_cast<std::uint32_t>(bytes.size());
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<std::uint8_t>(len >> shift));
  out.insert(out.end(), bytes.begin(), bytes.end());
}

std::string hex(std::uint64_t v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string join_entry(Color c, const std::vector<std::string>& values) {
  std::string out = std::to_string(c) + "@";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + values[i];
  return out;
}

struct Entry {
  Color color;
  std::vector<std::string> values;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto at = s.find(sep, start);
    out.emplace_back(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) return out;
    start = at + 1;
  }
}

Entry parse_entry(const std::string& text, const std::string& where) {
  auto at = text.find('@');
  if (at == std::string::npos) throw ParseError(where + ": expected <color>@<values> in '" + text + "'", 0);
  Entry e;
  BigInt c = parse_bigint(trim(text.substr(0, at)));
  if (!mpz_fits_sint_p(c.get_mpz_t())) throw ParseError(where + ": color out of range", 0);
  e.color = static_cast<Color>(c.get_si());
  for (auto& v : split(text.substr(at + 1), ',')) e.values.push_back(trim(v));
  return e;
}

// Entries from an inline `=a;b;c` list or from a file with one per line.
std::vector<Entry> read_entries(const std::string& ref, std::size_t column, std::string& source) {
  std::vector<Entry> out;
  if (!ref.empty() && ref[0] == '=') {
    source.clear();
    for (auto& piece : split(std::string_view(ref).substr(1), ';')) {
      auto t = trim(piece);
      if (t.empty()) continue;
      out.push_back(parse_entry(t, "inline entry at column " + std::to_string(column)));
    }
    return out;
  }
  std::ifstream in(ref);
  if (!in) throw ParseError("cannot open '" + ref + "'", column);
  source = ref;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    out.push_back(parse_entry(t, ref + ":" + std::to_string(line_no)));
  }
  return out;
}

int parse_count(const std::string& field, std::size_t column, const char* what) {
  BigInt v;
  try {
    v = parse_bigint(field);
  } catch (const ParseError& e) {
    throw ParseError(std::string("bad ") + what + " '" + field + "'", column + e.position());
  }
  if (!mpz_fits_sint_p(v.get_mpz_t())) throw ParseError(std::string(what) + " out of range", column);
  return static_cast<int>(v.get_si());
}

std::uint64_t parse_seed(const std::string& field, std::size_t column) {
  if (field.empty()) throw ParseError("empty seed", column);
  BigInt v;
  const bool is_hex = field.size() > 2 && field[0] == '0' && (field[1] == 'x' || field[1] == 'X');
  if (is_hex) {
    if (v.set_str(field.substr(2), 16) != 0) throw ParseError("bad hex seed '" + field + "'", column);
  } else {
    try {
      v = parse_bigint(field);
    } catch (const ParseError& e) {
      throw ParseError("bad seed '" + field + "'", column + e.position());
    }
  }
  if (sgn(v) < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) throw ParseError("seed must fit in 64 bits", column);
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof out, 0, 0, v.get_mpz_t());
  return out;
}

}  // namespace

ColoringSpec ColoringSpec::constant(int colors, Color color) {
  check_colors(colors);
  check_color(color, colors, "constant color");
  ColoringSpec s;
  s.kind_ = Kind::Constant;
  s.colors_ = colors;
  s.fixed_ = color;
  return s;
}

ColoringSpec ColoringSpec::seeded_hash(int colors, std::uint64_t seed) {
  check_colors(colors);
  ColoringSpec s;
  s.kind_ = Kind::SeededHash;
  s.colors_ = colors;
  s.seed_ = seed;
  return s;
}

ColoringSpec ColoringSpec::modular_table(int colors, BigInt modulus, std::map<std::vector<BigInt>, Color> table,
                                         Color fallback, std::string source) {
  check_colors(colors);
  if (modulus < 1) throw InvalidArgument("modulus must be at least 1");
  check_color(fallback, colors, "default color");
  std::size_t width = 0;
  for (const auto& [key, c] : table) {
    check_color(c, colors, "table color");
    if (key.empty() || key.size() % 2) throw InvalidArgument("table keys need a (num, den) residue pair per coordinate");
    if (width && key.size() != width) throw DimensionMismatch("table keys have mixed dimensions");
    width = key.size();
    for (const auto& r : key) {
      if (sgn(r) < 0 || r >= modulus) throw InvalidArgument("table residue " + to_string(r) + " outside [0, M)");
    }
  }
  ColoringSpec s;
  s.kind_ = Kind::ModularTable;
  s.colors_ = colors;
  s.modulus_ = std::move(modulus);
  s.table_ = std::move(table);
  s.fixed_ = fallback;
  s.source_ = std::move(source);
  return s;
}

ColoringSpec ColoringSpec::banded(int colors, std::size_t axis, std::vector<BandRule> rules, Color fallback,
                                  std::string source) {
  check_colors(colors);
  check_color(fallback, colors, "default color");
  for (const auto& r : rules) check_color(r.color, colors, "rule color");
  ColoringSpec s;
  s.kind_ = Kind::Banded;
  s.colors_ = colors;
  s.axis_ = axis;
  s.rules_ = std::move(rules);
  s.fixed_ = fallback;
  s.source_ = std::move(source);
  return s;
}

bool operator==(const ColoringSpec& a, const ColoringSpec& b) {
  if (a.kind_ != b.kind_ || a.colors_ != b.colors_) return false;
  switch (a.kind_) {
    case ColoringSpec::Kind::Constant:
      return a.fixed_ == b.fixed_;
    case ColoringSpec::Kind::SeededHash:
      return a.seed_ == b.seed_;
    case ColoringSpec::Kind::ModularTable:
      return a.modulus_ == b.modulus_ && a.table_ == b.table_ && a.fixed_ == b.fixed_;
    case ColoringSpec::Kind::Banded:
      return a.axis_ == b.axis_ && a.rules_ == b.rules_ && a.fixed_ == b.fixed_;
  }
  return false;
}

std::string ColoringSpec::str() const {
  const std::string h = std::to_string(colors_);
  switch (kind_) {
    case Kind::Constant:
      return "const:" + h + ":" + std::to_string(fixed_);
    case Kind::SeededHash:
      return "hash:" + h + ":" + hex(seed_);
    case Kind::ModularTable: {
      std::string ref = source_;
      if (ref.empty()) {
        ref = "=";
        bool first = true;
        for (const auto& [key, c] : table_) {
          std::vector<std::string> vals;
          for (const auto& r : key) vals.push_back(to_string(r));
          ref += (first ? "" : ";") + join_entry(c, vals);
          first = false;
        }
      }
      return "mod:" + h + ":" + to_string(modulus_) + ":" + ref + ":" + std::to_string(fixed_);
    }
    case Kind::Banded: {
      std::string ref = source_;
      if (ref.empty()) {
        ref = "=";
        for (std::size_t i = 0; i < rules_.size(); ++i) {
          std::vector<std::string> vals;
          for (const auto& v : rules_[i].values) vals.push_back(v.str());
          ref += (i ? ";" : "") + join_entry(rules_[i].color, vals);
        }
      }
      return "banded:" + h + ":" + std::to_string(axis_) + ":" + ref + ":" + std::to_string(fixed_);
    }
  }
  return {};
}

std::vector<std::uint8_t> canonical_bytes(const Point& p) {
  std::vector<std::uint8_t> out;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) out.push_back(0xFF);
    out.push_back(p[i].sign() < 0 ? 0x01 : 0x00);
    append_magnitude(out, abs(p[i].num()));
    append_magnitude(out, p[i].den());
  }
  return out;
}

std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes, std::uint64_t seed) {
  std::uint64_t h = kFnvOffset ^ seed;
  for (auto b : bytes) {
    h ^= b;
    h *= kFnvPrime;
  }
  return h;
}

std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Color color_at(const ColoringSpec& spec, const Point& p) {
  switch (spec.kind()) {
    case ColoringSpec::Kind::Constant:
      return spec.fixed_color();
    case ColoringSpec::Kind::SeededHash: {
      const auto bytes = canonical_bytes(p);
      const std::uint64_t mixed = splitmix64_mix(fnv1a64(bytes, spec.seed()));
      return static_cast<Color>(mixed % static_cast<std::uint64_t>(spec.colors()));
    }
    case ColoringSpec::Kind::ModularTable: {
      if (spec.table().empty()) return spec.fallback();
      const std::size_t width = spec.table().begin()->first.size();
      if (width != 2 * p.dim()) {
        throw DimensionMismatch("modular table is for dimension " + std::to_string(width / 2) + ", point has " +
                                std::to_string(p.dim()));
      }
      std::vector<BigInt> key;
      key.reserve(width);
      for (const auto& c : p.coords()) {
        BigInt r;
        mpz_fdiv_r(r.get_mpz_t(), c.num().get_mpz_t(), spec.modulus().get_mpz_t());
        key.push_back(r);
        mpz_fdiv_r(r.get_mpz_t(), c.den().get_mpz_t(), spec.modulus().get_mpz_t());
        key.push_back(r);
      }
      auto it = spec.table().find(key);
      return it == spec.table().end() ? spec.fallback() : it->second;
    }
    case ColoringSpec::Kind::Banded: {
      if (spec.axis() >= p.dim()) {
        throw DimensionMismatch("banded coloring on axis " + std::to_string(spec.axis()) + " needs dimension > " +
                                std::to_string(spec.axis()));
      }
      const Rational& v = p[spec.axis()];
      for (const auto& rule : spec.rules()) {
        if (std::find(rule.values.begin(), rule.values.end(), v) != rule.values.end()) return rule.color;
      }
      return spec.fallback();
    }
  }
  return 0;
}

ColoringSpec parse_spec(std::string_view text) {
  const std::string line = trim(text);
  auto fields = split(line, ':');
  std::vector<std::size_t> columns;
  {
    std::size_t col = 0;
    for (const auto& f : fields) {
      columns.push_back(col);
      col += f.size() + 1;
    }
  }
  const std::string& kind = fields[0];
  auto need = [&](std::size_t count) {
    if (fields.size() < count) throw ParseError("'" + kind + "' spec needs " + std::to_string(count) + " fields", line.size());
  };
  if (kind == "const") {
    need(3);
    if (fields.size() > 3) throw ParseError("trailing field in const spec", columns[3]);
    const int h = parse_count(fields[1], columns[1], "color count");
    if (h < 1) throw ParseError("color count must be at least 1", columns[1]);
    const int c = parse_count(fields[2], columns[2], "color");
    if (c < 0 || c >= h) throw ParseError("color outside [0, h)", columns[2]);
    return ColoringSpec::constant(h, c);
  }
  if (kind == "hash") {
    need(3);
    if (fields.size() > 3) throw ParseError("trailing field in hash spec", columns[3]);
    const int h = parse_count(fields[1], columns[1], "color count");
    if (h < 1) throw ParseError("color count must be at least 1", columns[1]);
    return ColoringSpec::seeded_hash(h, parse_seed(fields[2], columns[2]));
  }
  if (kind == "mod" || kind == "banded") {
    need(5);
    const int h = parse_count(fields[1], columns[1], "color count");
    if (h < 1) throw ParseError("color count must be at least 1", columns[1]);
    // the table reference may itself contain ':'; it spans all middle fields
    std::string ref = fields[3];
    for (std::size_t i = 4; i + 1 < fields.size(); ++i) ref += ":" + fields[i];
    const std::size_t last = fields.size() - 1;
    const int fallback = parse_count(fields[last], columns[last], "default color");
    if (fallback < 0 || fallback >= h) throw ParseError("default color outside [0, h)", columns[last]);
    std::string source;
    auto entries = read_entries(ref, columns[3], source);
    try {
      if (kind == "mod") {
        BigInt modulus = parse_bigint(fields[2]);
        if (modulus < 1) throw ParseError("modulus must be at least 1", columns[2]);
        std::map<std::vector<BigInt>, Color> table;
        for (const auto& e : entries) {
          std::vector<BigInt> key;
          for (const auto& v : e.values) key.push_back(parse_bigint(v));
          table[std::move(key)] = e.color;
        }
        return ColoringSpec::modular_table(h, std::move(modulus), std::move(table), fallback, source);
      }
      const int axis = parse_count(fields[2], columns[2], "axis");
      if (axis < 0) throw ParseError("axis must be non-negative", columns[2]);
      std::vector<ColoringSpec::BandRule> rules;
      for (const auto& e : entries) {
        ColoringSpec::BandRule rule;
        rule.color = e.color;
        for (const auto& v : e.values) rule.values.push_back(Rational::parse(v));
        rules.push_back(std::move(rule));
      }
      return ColoringSpec::banded(h, static_cast<std::size_t>(axis), std::move(rules), fallback, source);
    } catch (const ParseError&) {
      throw;
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what(), columns[3]);
    }
  }
  throw ParseError("unknown coloring kind '" + kind + "' (expected const, hash, mod or banded)", 0);
}

}  // namespace monosimplex
