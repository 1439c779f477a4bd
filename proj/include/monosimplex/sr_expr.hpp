#pragma once

// Symbolic slanted-rain lengths SR(h) and SR_n(h). These lengths are
// towers of unknown van der Waerden numbers, so they stay symbolic and are
// only evaluated against a table of known values.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "monosimplex/rational.hpp"

namespace monosimplex {

class SRExpr {
 public:
  enum class Kind { Literal, VdW, VdWGrid, FApply, FnApply };

  static SRExpr literal(BigInt value);
  static SRExpr vdw(unsigned colors, SRExpr progression_length);
  static SRExpr vdw_grid(unsigned colors, unsigned dim, SRExpr side);
  static SRExpr f_apply(SRExpr arg);
  static SRExpr fn_apply(unsigned n, SRExpr arg);

  Kind kind() const noexcept { return node_->kind; }
  const BigInt& value() const noexcept { return node_->value; }
  unsigned colors() const noexcept { return node_->colors; }
  // Grid dimension for VdWGrid, n for FnApply.
  unsigned dim() const noexcept { return node_->dim; }
  const SRExpr& child() const { return *node_->child; }

  friend bool operator==(const SRExpr& a, const SRExpr& b);

  // e.g. "vdW_3(f(vdW_2(5)))", "vdW_2(M_2(F_3(2)))"
  std::string str() const;

 private:
  struct Node {
    Kind kind;
    BigInt value;
    unsigned colors = 0;
    unsigned dim = 0;
    std::shared_ptr<const SRExpr> child;
  };
  explicit SRExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// SR(1) = 2, SR(2) = vdW_2(5), SR(h) = vdW_h(f(SR(h-1))).
SRExpr sr_expr(unsigned colors);
// SR_n(1) = 2, SR_n(h) = vdW_h(M_{n-1}(F_n(SR_n(h-1)))); n = 2 is SR(h).
SRExpr sr_n_expr(unsigned n, unsigned colors);

// vdW_h of the cube M_dim(side); dim 1 is the ordinary progression number.
struct VdwKey {
  unsigned colors = 0;
  unsigned dim = 1;
  BigInt side;
  friend bool operator<(const VdwKey& a, const VdwKey& b) {
    return std::tie(a.colors, a.dim, a.side) < std::tie(b.colors, b.dim, b.side);
  }
  friend bool operator==(const VdwKey& a, const VdwKey& b) {
    return a.colors == b.colors && a.dim == b.dim && a.side == b.side;
  }
  std::string str() const;
};

enum class Trust { Verified, External };

struct VdwEntry {
  BigInt value;
  Trust trust = Trust::External;
};

// Text format, one entry per line: `h N value trust`, where N is an integer
// (progressions) or `M<d>(<side>)` (cubes) and trust is `verified` or
// `external`. `#` starts a comment.
class VdwTable {
 public:
  static VdwTable parse(std::string_view text);
  static VdwTable load(const std::string& path);

  void insert(VdwKey key, VdwEntry entry);
  std::optional<BigInt> lookup(const VdwKey& key) const;
  const std::map<VdwKey, VdwEntry>& entries() const noexcept { return entries_; }

 private:
  std::map<VdwKey, VdwEntry> entries_;
};

// Bottom-up evaluation; nullopt when some vdW value is missing from the table.
// Throws LimitExceeded if an f/F_n argument is too large to materialize.
std::optional<BigInt> eval_expr(const SRExpr& e, const VdwTable& table);
// The first table entry evaluation would need but does not find.
std::optional<VdwKey> first_missing(const SRExpr& e, const VdwTable& table);

}  // namespace monosimplex
