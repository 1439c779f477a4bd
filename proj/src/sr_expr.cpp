#include "monosimplex/sr_expr.hpp"

#include <fstream>
#include <sstream>

#include "monosimplex/errors.hpp"
#include "monosimplex/rain.hpp"

namespace monosimplex {

SRExpr SRExpr::literal(BigInt value) {
  return SRExpr(std::make_shared<const Node>(Node{Kind::Literal, std::move(value), 0, 0, nullptr}));
}

SRExpr SRExpr::vdw(unsigned colors, SRExpr progression_length) {
  return SRExpr(std::make_shared<const Node>(
      Node{Kind::VdW, 0, colors, 1, std::make_shared<const SRExpr>(std::move(progression_length))}));
}

SRExpr SRExpr::vdw_grid(unsigned colors, unsigned dim, SRExpr side) {
  return SRExpr(
      std::make_shared<const Node>(Node{Kind::VdWGrid, 0, colors, dim, std::make_shared<const SRExpr>(std::move(side))}));
}

SRExpr SRExpr::f_apply(SRExpr arg) {
  return SRExpr(std::make_shared<const Node>(Node{Kind::FApply, 0, 0, 2, std::make_shared<const SRExpr>(std::move(arg))}));
}

SRExpr SRExpr::fn_apply(unsigned n, SRExpr arg) {
  return SRExpr(std::make_shared<const Node>(Node{Kind::FnApply, 0, 0, n, std::make_shared<const SRExpr>(std::move(arg))}));
}

bool operator==(const SRExpr& a, const SRExpr& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case SRExpr::Kind::Literal:
      return a.value() == b.value();
    case SRExpr::Kind::VdW:
    case SRExpr::Kind::FApply:
      return a.colors() == b.colors() && a.child() == b.child();
    case SRExpr::Kind::VdWGrid:
    case SRExpr::Kind::FnApply:
      return a.colors() == b.colors() && a.dim() == b.dim() && a.child() == b.child();
  }
  return false;
}

std::string SRExpr::str() const {
  switch (kind()) {
    case Kind::Literal:
      return to_string(value());
    case Kind::VdW:
      return "vdW_" + std::to_string(colors()) + "(" + child().str() + ")";
    case Kind::VdWGrid:
      return "vdW_" + std::to_string(colors()) + "(M_" + std::to_string(dim()) + "(" + child().str() + "))";
    case Kind::FApply:
      return "f(" + child().str() + ")";
    case Kind::FnApply:
      return "F_" + std::to_string(dim()) + "(" + child().str() + ")";
  }
  return {};
}

SRExpr sr_expr(unsigned colors) {
  if (colors < 1) throw InvalidArgument("SR(h) needs h >= 1");
  if (colors == 1) return SRExpr::literal(2);
  if (colors == 2) return SRExpr::vdw(2, SRExpr::literal(5));
  return SRExpr::vdw(colors, SRExpr::f_apply(sr_expr(colors - 1)));
}

SRExpr sr_n_expr(unsigned n, unsigned colors) {
  if (n < 2) throw InvalidArgument("SR_n(h) needs n >= 2");
  if (colors < 1) throw InvalidArgument("SR_n(h) needs h >= 1");
  if (n == 2) return sr_expr(colors);
  if (colors == 1) return SRExpr::literal(2);
  return SRExpr::vdw_grid(colors, n - 1, SRExpr::fn_apply(n, sr_n_expr(n, colors - 1)));
}

std::string VdwKey::str() const {
  if (dim == 1) return "vdW_" + std::to_string(colors) + "(" + to_string(side) + ")";
  return "vdW_" + std::to_string(colors) + "(M_" + std::to_string(dim) + "(" + to_string(side) + "))";
}

VdwTable VdwTable::parse(std::string_view text) {
  VdwTable table;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string h, n, value, trust;
    if (!(fields >> h)) continue;
    const std::string where = "vdW table line " + std::to_string(line_no);
    if (!(fields >> n >> value >> trust)) throw ParseError(where + ": expected `h N value trust`", 0);
    std::string extra;
    if (fields >> extra) throw ParseError(where + ": trailing field '" + extra + "'", line.find(extra));
    VdwKey key;
    const BigInt colors = parse_bigint(h);
    if (colors < 1 || !mpz_fits_uint_p(colors.get_mpz_t())) throw ParseError(where + ": bad color count", 0);
    key.colors = static_cast<unsigned>(colors.get_ui());
    if (!n.empty() && n[0] == 'M') {
      auto open = n.find('(');
      if (open == std::string::npos || n.back() != ')') throw ParseError(where + ": expected M<d>(<side>)", line.find(n));
      key.dim = static_cast<unsigned>(parse_bigint(n.substr(1, open - 1)).get_ui());
      key.side = parse_bigint(n.substr(open + 1, n.size() - open - 2));
    } else {
      key.side = parse_bigint(n);
    }
    if (key.dim < 1 || key.side < 1) throw ParseError(where + ": dimension and side must be positive", 0);
    VdwEntry entry{parse_bigint(value), Trust::External};
    if (trust == "verified") {
      entry.trust = Trust::Verified;
    } else if (trust != "external") {
      throw ParseError(where + ": trust must be 'verified' or 'external'", line.find(trust));
    }
    if (auto prev = table.lookup(key); prev && *prev != entry.value) {
      throw ParseError(where + ": conflicting value for " + key.str(), line.find(value));
    }
    table.insert(std::move(key), std::move(entry));
  }
  return table;
}

VdwTable VdwTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open vdW table '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void VdwTable::insert(VdwKey key, VdwEntry entry) { entries_[std::move(key)] = std::move(entry); }

std::optional<BigInt> VdwTable::lookup(const VdwKey& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second.value;
}

namespace {

struct Evaluation {
  std::optional<BigInt> value;
  std::optional<VdwKey> missing;
};

Evaluation evaluate(const SRExpr& e, const VdwTable& table) {
  if (e.kind() == SRExpr::Kind::Literal) return {e.value(), std::nullopt};
  Evaluation inner = evaluate(e.child(), table);
  if (!inner.value) return inner;
  const BigInt& v = *inner.value;
  switch (e.kind()) {
    case SRExpr::Kind::VdW:
    case SRExpr::Kind::VdWGrid: {
      VdwKey key{e.colors(), e.dim(), v};
      if (auto hit = table.lookup(key)) return {hit, std::nullopt};
      return {std::nullopt, key};
    }
    case SRExpr::Kind::FApply:
      return {F_len(2, v), std::nullopt};
    case SRExpr::Kind::FnApply:
      return {F_len(e.dim(), v), std::nullopt};
    case SRExpr::Kind::Literal:
      break;
  }
  return {};
}

}  // namespace

std::optional<BigInt> eval_expr(const SRExpr& e, const VdwTable& table) { return evaluate(e, table).value; }

std::optional<VdwKey> first_missing(const SRExpr& e, const VdwTable& table) { return evaluate(e, table).missing; }

}  // namespace monosimplex
