#include "monosimplex/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "monosimplex/certificate_io.hpp"
#include "monosimplex/errors.hpp"
#include "monosimplex/finder.hpp"
#include "monosimplex/render.hpp"
#include "monosimplex/sr_expr.hpp"
#include "monosimplex/vdw.hpp"

namespace monosimplex::cli {

namespace {

struct VerificationFailed {
  std::string what;
};

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& c : Point::parse(text).coords()) out.push_back(c);
  return out;
}

struct RainArgs {
  std::uint64_t length = 0;
  std::string step = "1";
  std::string steps;
  std::string origin;
  std::size_t dim = 2;

  void attach(CLI::App* cmd) {
    cmd->add_option("--len", length, "Rain length")->required()->check(CLI::Range(2ULL, ~0ULL));
    cmd->add_option("--step", step, "Step of a planar rain (num/den)");
    cmd->add_option("--steps", steps, "Comma-separated steps of an n-D rain (default all 1)");
    cmd->add_option("--origin", origin, "Origin, comma-separated (default the zero point)");
    cmd->add_option("--dim", dim, "Dimension; 2 is the planar convention")->check(CLI::Range(2, 64));
  }

  Point origin_point() const { return origin.empty() ? Point::zero(dim) : Point::parse(origin); }

  Rain2D planar() const { return Rain2D(origin_point(), Rational::parse(step), length); }

  RainND nd() const {
    std::vector<Rational> s = steps.empty() ? std::vector<Rational>(dim - 1, Rational(1)) : parse_list(steps);
    return RainND(origin_point(), std::move(s), length);
  }
};

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot write '" + path + "'");
  f << text;
}

struct FindArgs {
  std::string coloring;
  std::optional<std::string> seed;
  std::size_t dim = 3;
  std::optional<std::string> product, area, volume;
  std::size_t count = 1;
  std::string out_path;
  bool faithful = false;
  std::string table_path;
  std::uint64_t budget_length = SearchBudget{}.max_base_length;
  std::uint64_t budget_depth = SearchBudget{}.max_depth;
  std::uint64_t budget_queries = SearchBudget{}.max_queries;
  double budget_seconds = 60;
  std::uint64_t initial_length = SearchOptions{}.initial_length;
  std::uint64_t candidates = SearchOptions{}.max_candidates;

  void attach(CLI::App* cmd, bool simplex) {
    cmd->add_option("--coloring", coloring, "Coloring spec, e.g. hash:2:0x1")->required()->envname("MONOSIMPLEX_COLORING");
    cmd->add_option("--seed", seed, "Override the seed of a hash coloring")->envname("MONOSIMPLEX_SEED");
    if (simplex) cmd->add_option("--dim", dim, "Simplex dimension")->check(CLI::Range(2, 16));
    auto* p = cmd->add_option("--product", product, "Target edge product (default 1)");
    if (!simplex) {
      cmd->add_option("--area", area, "Target triangle area S (edge product 2S)")->excludes(p);
    } else {
      cmd->add_option("--volume", volume, "Target volume V in the edge-product/n convention (edge product nV)")
          ->excludes(p);
    }
    cmd->add_option("--count", count, "Number of distinct certificates")->check(CLI::Range(1, 100000));
    cmd->add_option("--out", out_path, "Write the certificate JSON here (default stdout)");
    cmd->add_flag("--faithful", faithful, "Use the exact SR(h) lengths from the vdW table");
    cmd->add_option("--vdw-table", table_path, "Known vdW values, lines `h N value trust`")
        ->envname("MONOSIMPLEX_VDW_TABLE");
    cmd->add_option("--budget-length", budget_length, "Largest ambient base length")->envname("MONOSIMPLEX_BUDGET_LENGTH");
    cmd->add_option("--budget-depth", budget_depth, "Largest recursion depth")->envname("MONOSIMPLEX_BUDGET_DEPTH");
    cmd->add_option("--budget-queries", budget_queries, "Largest number of coloring queries")
        ->envname("MONOSIMPLEX_BUDGET_QUERIES");
    cmd->add_option("--budget-seconds", budget_seconds, "Wall-clock limit")->envname("MONOSIMPLEX_BUDGET_SECONDS");
    cmd->add_option("--initial-length", initial_length, "First ambient base length");
    cmd->add_option("--candidates", candidates, "Mono sub-bases tried per level");
  }

  int run(std::size_t n, std::ostream& out) const {
    ColoringSpec spec = parse_spec(coloring);
    if (seed) {
      if (spec.kind() != ColoringSpec::Kind::SeededHash) throw InvalidArgument("--seed needs a hash coloring");
      spec = parse_spec("hash:" + std::to_string(spec.colors()) + ":" + *seed);
    }
    Rational target(1);
    if (product) target = Rational::parse(*product);
    if (area) target = product_for_area(Rational::parse(*area));
    if (volume) target = product_for_volume(n, Rational::parse(*volume));
    if (target.sign() <= 0) throw InvalidArgument("target edge product must be positive");

    SearchBudget budget;
    budget.max_base_length = budget_length;
    budget.max_depth = budget_depth;
    budget.max_queries = budget_queries;
    budget.max_time = std::chrono::milliseconds(static_cast<std::int64_t>(budget_seconds * 1000));
    std::optional<VdwTable> table;
    if (!table_path.empty()) table = VdwTable::load(table_path);
    SearchOptions options;
    options.initial_length = initial_length;
    options.max_candidates = candidates;
    options.faithful = faithful;
    options.table = table ? &*table : nullptr;

    const auto found = find_many(spec, n, target, count, budget, options);
    nlohmann::json doc;
    for (const auto& c : found) {
      auto v = verify_certificate(c);
      if (!v) throw VerificationFailed{v.diagnostic};
      if (count == 1) {
        doc = to_json(c);
      } else {
        doc.push_back(to_json(c));
      }
    }
    write_text(out_path, doc.dump(2) + "\n", out);
    if (!out_path.empty() && out_path != "-") {
      for (const auto& c : found) out << "color " << c.color << ": " << c.simplex.str() << "\n";
    }
    return kOk;
  }
};

int verify_file(const std::string& path, std::ostream& out) {
  std::ifstream f(path);
  if (!f) throw InvalidArgument("cannot open '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("not JSON: ") + e.what());
  }
  std::vector<nlohmann::json> items = doc.is_array() ? doc.get<std::vector<nlohmann::json>>() : std::vector{doc};
  bool all_ok = true;
  for (std::size_t i = 0; i < items.size(); ++i) {
    std::string label = items.size() > 1 ? "certificate " + std::to_string(i) + ": " : "";
    try {
      const Certificate c = certificate_from_json(items[i]);
      const auto v = verify_certificate(c);
      if (v) {
        out << label << "ok: color " << c.color << ", " << c.simplex.str() << ", edge product " << c.target_product
            << "\n";
      } else {
        all_ok = false;
        out << label << "FAILED: " << v.diagnostic << "\n";
      }
    } catch (const NotStandardSimplex& e) {
      all_ok = false;
      out << label << "FAILED: " << e.what() << "\n";
    }
  }
  return all_ok ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monochromatic standard simplices in colored rational space"};
  app.require_subcommand(1);

  auto* rain = app.add_subcommand("rain", "Slanted rains")->require_subcommand(1);
  RainArgs gen_args, contains_args, sub_args, render_args;
  std::uint64_t limit = kDefaultPointLimit;
  auto* gen = rain->add_subcommand("gen", "List the points of a rain");
  gen_args.attach(gen);
  gen->add_option("--limit", limit, "Largest number of points to list");

  std::string point_text;
  auto* contains = rain->add_subcommand("contains", "Decide membership of a point");
  contains_args.attach(contains);
  contains->add_option("--point", point_text, "Point, comma-separated")->required();

  std::uint64_t target = 0;
  auto* subrain = rain->add_subcommand("subrain", "Sub-rain of a given length inside the layers");
  sub_args.attach(subrain);
  subrain->add_option("--target", target, "Length of the sub-rain")->required()->check(CLI::Range(2ULL, ~0ULL));

  std::uint64_t render_target = 0;
  std::string highlight, format = "svg", render_out;
  int units_step = 10, units_height = 120;
  auto* render_cmd = rain->add_subcommand("render", "Draw a planar rain (SVG or ASCII)");
  render_args.attach(render_cmd);
  render_cmd->add_option("--target", render_target, "Circle the points of the sub-rain of this length");
  render_cmd->add_option("--highlight", highlight, "Points to circle, separated by ';'");
  render_cmd->add_option("--format", format, "svg or ascii")->check(CLI::IsMember({"svg", "ascii"}));
  render_cmd->add_option("--out", render_out, "Output file (default stdout)");
  render_cmd->add_option("--units-step", units_step, "Horizontal units per step");
  render_cmd->add_option("--units-height", units_height, "Vertical units of the first layer");

  auto* find = app.add_subcommand("find", "Search for a monochromatic standard simplex")->require_subcommand(1);
  FindArgs tri_args, simplex_args;
  auto* triangle = find->add_subcommand("triangle", "Planar standard triangle");
  tri_args.attach(triangle, false);
  auto* simplex = find->add_subcommand("simplex", "n-dimensional standard simplex");
  simplex_args.attach(simplex, true);

  std::string cert_path;
  auto* verify = app.add_subcommand("verify", "Check a certificate file");
  verify->add_option("certificate", cert_path, "Certificate JSON")->required();

  auto* vdw = app.add_subcommand("vdw", "van der Waerden numbers")->require_subcommand(1);
  int vdw_colors = 2;
  std::uint64_t vdw_ap = 3, vdw_nodes = VdwBudget{}.max_nodes;
  double vdw_seconds = 600;
  bool vdw_witness = false;
  auto* compute = vdw->add_subcommand("compute", "Exact vdW_h(N) by backtracking");
  compute->add_option("--colors", vdw_colors, "Number of colors h")->required()->check(CLI::Range(1, 64));
  compute->add_option("--ap", vdw_ap, "Progression length N")->required()->check(CLI::Range(1ULL, 1ULL << 20));
  compute->add_option("--budget-nodes", vdw_nodes, "Search node limit")->envname("MONOSIMPLEX_BUDGET_NODES");
  compute->add_option("--budget-seconds", vdw_seconds, "Wall-clock limit")->envname("MONOSIMPLEX_BUDGET_SECONDS");
  compute->add_flag("--witness", vdw_witness, "Also print an extremal coloring of length value-1");

  auto* sr = app.add_subcommand("sr", "Symbolic SR(h) / SR_n(h)")->require_subcommand(1);
  unsigned sr_colors = 2, sr_dim = 2;
  std::string sr_table;
  auto* expr = sr->add_subcommand("expr", "Print the unrolled recursion");
  expr->add_option("--colors", sr_colors, "Number of colors h")->required()->check(CLI::Range(1, 1000));
  expr->add_option("--dim", sr_dim, "Dimension n")->check(CLI::Range(2, 1000));
  auto* eval = sr->add_subcommand("eval", "Evaluate against a table of known vdW values");
  eval->add_option("--colors", sr_colors, "Number of colors h")->required()->check(CLI::Range(1, 1000));
  eval->add_option("--dim", sr_dim, "Dimension n")->check(CLI::Range(2, 1000));
  eval->add_option("--vdw-table", sr_table, "Known vdW values")->envname("MONOSIMPLEX_VDW_TABLE");

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    if (*gen) {
      if (gen_args.dim == 2) {
        const auto r = gen_args.planar();
        out << r.str() << "\n";
        for (const auto& p : enumerate_points(r, limit)) out << p << "\n";
      } else {
        const auto r = gen_args.nd();
        out << r.str() << "\n";
        for (const auto& p : enumerate_points(r, limit)) out << p << "\n";
      }
    } else if (*contains) {
      const Point p = Point::parse(point_text);
      const bool in = contains_args.dim == 2 ? rain_contains(contains_args.planar(), p)
                                             : rain_nd_contains(contains_args.nd(), p);
      out << (in ? "true" : "false") << "\n";
    } else if (*subrain) {
      if (sub_args.dim == 2) {
        out << subrain2d(sub_args.planar(), target).str() << "\n";
      } else {
        out << subrain_nd(sub_args.nd(), target).str() << "\n";
      }
    } else if (*render_cmd) {
      if (render_args.dim != 2) throw InvalidArgument("only planar rains can be drawn");
      RenderPlan plan{render_args.planar(), {}, units_step, units_height,
                      format == "svg" ? RenderFormat::Svg : RenderFormat::Ascii};
      if (render_target) plan.highlight = enumerate_points(subrain2d(plan.rain, render_target));
      if (!highlight.empty()) {
        std::stringstream ss(highlight);
        std::string item;
        while (std::getline(ss, item, ';')) {
          if (!item.empty()) plan.highlight.push_back(Point::parse(item));
        }
      }
      write_text(render_out, render(plan), out);
    } else if (*triangle) {
      return tri_args.run(2, out);
    } else if (*simplex) {
      return simplex_args.run(simplex_args.dim, out);
    } else if (*verify) {
      return verify_file(cert_path, out);
    } else if (*compute) {
      VdwBudget budget;
      budget.max_nodes = vdw_nodes;
      budget.max_time = std::chrono::milliseconds(static_cast<std::int64_t>(vdw_seconds * 1000));
      const auto r = vdw_number(vdw_colors, vdw_ap, budget);
      if (!r.exact()) {
        out << "unknown: vdW_" << vdw_colors << "(" << vdw_ap << ") >= " << r.value << " (budget exhausted after "
            << r.nodes << " nodes)\n";
        return kBudgetExhausted;
      }
      out << r.value << "\n";
      if (vdw_witness) {
        for (auto c : r.extremal) out << c;
        out << "\n";
      }
    } else if (*expr) {
      out << sr_n_expr(sr_dim, sr_colors).str() << "\n";
    } else if (*eval) {
      const SRExpr e = sr_n_expr(sr_dim, sr_colors);
      const VdwTable table = sr_table.empty() ? VdwTable{} : VdwTable::load(sr_table);
      if (auto v = eval_expr(e, table)) {
        out << to_string(*v) << "\n";
      } else {
        out << "unknown: " << e.str() << " needs " << first_missing(e, table)->str() << "\n";
      }
    }
  } catch (const VerificationFailed& e) {
    err << "verification failed: " << e.what << "\n";
    return kVerificationFailed;
  } catch (const BudgetExhausted& e) {
    err << "budget exhausted: " << e.what() << "\n";
    return kBudgetExhausted;
  } catch (const LimitExceeded& e) {
    err << "limit exceeded: " << e.what() << "\n";
    return kBudgetExhausted;
  } catch (const NoWitness& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kOk;
}

}  // namespace monosimplex::cli
