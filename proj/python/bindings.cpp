#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "monosimplex/certificate_io.hpp"
#include "monosimplex/cli.hpp"
#include "monosimplex/errors.hpp"
#include "monosimplex/finder.hpp"
#include "monosimplex/render.hpp"
#include "monosimplex/sr_expr.hpp"
#include "monosimplex/vdw.hpp"

namespace py = pybind11;
using namespace monosimplex;

// Rationals cross the boundary as fractions.Fraction (ints and "p/q"
// strings are accepted on the way in); big integers as Python ints.
namespace pybind11::detail {

template <>
struct type_caster<BigInt> {
  PYBIND11_TYPE_CASTER(BigInt, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    value = BigInt(py::str(src).cast<std::string>(), 10);
    return true;
  }

  static handle cast(const BigInt& v, return_value_policy, handle) {
    return PyLong_FromString(v.get_str(10).c_str(), nullptr, 10);
  }
};

template <>
struct type_caster<Rational> {
  PYBIND11_TYPE_CASTER(Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (PyLong_Check(src.ptr())) {
      value = Rational(BigInt(py::str(src).cast<std::string>(), 10));
      return true;
    }
    if (py::isinstance<py::str>(src)) {
      value = Rational::parse(src.cast<std::string>());
      return true;
    }
    static const py::object fraction = py::module_::import("fractions").attr("Fraction");
    if (py::isinstance(src, fraction)) {
      const BigInt n(py::str(src.attr("numerator")).cast<std::string>(), 10);
      const BigInt d(py::str(src.attr("denominator")).cast<std::string>(), 10);
      value = Rational(n, d);
      return true;
    }
    return false;
  }

  static handle cast(const Rational& r, return_value_policy, handle) {
    static const py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(py::reinterpret_steal<py::object>(PyLong_FromString(r.num().get_str(10).c_str(), nullptr, 10)),
                    py::reinterpret_steal<py::object>(PyLong_FromString(r.den().get_str(10).c_str(), nullptr, 10)))
        .release();
  }
};

// Point has no empty state, so the caster holds an optional.
template <>
struct type_caster<Point> {
  std::optional<Point> value;
  static constexpr auto name = const_name("tuple[fractions.Fraction, ...]");
  template <typename T>
  using cast_op_type = movable_cast_op_type<T>;
  operator Point*() { return &*value; }
  operator Point&() { return *value; }
  operator Point&&() && { return std::move(*value); }

  bool load(handle src, bool convert) {
    if (!py::isinstance<py::sequence>(src) || py::isinstance<py::str>(src)) return false;
    std::vector<Rational> coords;
    for (auto item : py::reinterpret_borrow<py::sequence>(src)) {
      make_caster<Rational> c;
      if (!c.load(item, convert)) return false;
      coords.push_back(cast_op<Rational>(c));
    }
    if (coords.empty()) return false;
    value.emplace(std::move(coords));
    return true;
  }

  static handle cast(const Point& p, return_value_policy policy, handle parent) {
    py::tuple out(p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i) {
      out[i] = py::reinterpret_steal<py::object>(make_caster<Rational>::cast(p[i], policy, parent));
    }
    return out.release();
  }
};

}  // namespace pybind11::detail

namespace {

SearchBudget make_budget(std::uint64_t max_base_length, std::uint64_t max_depth, std::uint64_t max_queries,
                         double max_seconds) {
  SearchBudget b;
  b.max_base_length = max_base_length;
  b.max_depth = max_depth;
  b.max_queries = max_queries;
  b.max_time = std::chrono::milliseconds(static_cast<std::int64_t>(max_seconds * 1000));
  return b;
}

std::vector<Rational> as_vector(std::span<const Rational> s) { return {s.begin(), s.end()}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Monochromatic standard simplices in finitely colored rational space";

  static py::exception<NoWitness> no_witness(m, "NoWitness", PyExc_ValueError);
  static py::exception<BudgetExhausted> budget_exhausted(m, "BudgetExhausted", PyExc_RuntimeError);
  static py::exception<LimitExceeded> limit_exceeded(m, "LimitExceeded", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const NoWitness& e) {
      py::set_error(no_witness, e.what());
    } catch (const BudgetExhausted& e) {
      py::set_error(budget_exhausted, e.what());
    } catch (const LimitExceeded& e) {
      py::set_error(limit_exceeded, e.what());
    } catch (const InvalidArgument& e) {
      py::set_error(PyExc_ValueError, e.what());
    }
  });

  // ---- exact core
  py::class_<StandardSimplex>(m, "StandardSimplex")
      .def(py::init([](const Point& origin, std::vector<Rational> edges) { return StandardSimplex(origin, edges); }),
           py::arg("origin"), py::arg("edges"))
      .def_property_readonly("origin", &StandardSimplex::origin)
      .def_property_readonly("edges", [](const StandardSimplex& s) { return as_vector(s.edges()); })
      .def_property_readonly("dim", &StandardSimplex::dim)
      .def("vertices", &StandardSimplex::vertices)
      .def("edge_product", [](const StandardSimplex& s) { return edge_product(s); })
      .def("euclidean_volume", [](const StandardSimplex& s) { return euclidean_volume(s); })
      .def("__eq__", [](const StandardSimplex& a, const StandardSimplex& b) { return a == b; })
      .def("__repr__", &StandardSimplex::str);

  py::class_<DiagonalAffineMap>(m, "DiagonalAffineMap")
      .def(py::init([](std::vector<Rational> scale, std::vector<Rational> shift) {
             return DiagonalAffineMap(std::move(scale), std::move(shift));
           }),
           py::arg("scale"), py::arg("shift"))
      .def_static("hyperbolic_rotation", &DiagonalAffineMap::hyperbolic_rotation, py::arg("center"), py::arg("k"))
      .def_property_readonly("scale", [](const DiagonalAffineMap& d) { return as_vector(d.scale()); })
      .def_property_readonly("shift", [](const DiagonalAffineMap& d) { return as_vector(d.shift()); })
      .def("is_volume_preserving", &DiagonalAffineMap::is_volume_preserving)
      .def("inverse", &DiagonalAffineMap::inverse)
      .def("__call__", [](const DiagonalAffineMap& d, const Point& p) { return apply_map(d, p); })
      .def("__matmul__", [](const DiagonalAffineMap& a, const DiagonalAffineMap& b) { return compose(a, b); })
      .def("__eq__", [](const DiagonalAffineMap& a, const DiagonalAffineMap& b) { return a == b; })
      .def("__repr__", &DiagonalAffineMap::str);
  m.def("orbit_witness", &orbit_witness, py::arg("a"), py::arg("b"));

  // ---- rains
  py::class_<Rain2D>(m, "Rain2D")
      .def(py::init<Point, Rational, std::uint64_t>(), py::arg("origin"), py::arg("step"), py::arg("length"))
      .def_property_readonly("origin", &Rain2D::origin)
      .def_property_readonly("step", &Rain2D::step)
      .def_property_readonly("length", &Rain2D::length)
      .def("__contains__", [](const Rain2D& r, const Point& p) { return rain_contains(r, p); })
      .def("points", [](const Rain2D& r, std::uint64_t limit) { return enumerate_points(r, limit); },
           py::arg("limit") = kDefaultPointLimit)
      .def("point_count", [](const Rain2D& r) { return point_count(r); })
      .def("apex_triangles", [](const Rain2D& r, const Point& p) { return apex_triangles(r, p); })
      .def("subrain", [](const Rain2D& r, std::uint64_t l) { return subrain2d(r, l); }, py::arg("length"))
      .def("__eq__", [](const Rain2D& a, const Rain2D& b) { return a == b; })
      .def("__repr__", &Rain2D::str);

  py::class_<RainND>(m, "RainND")
      .def(py::init([](const Point& origin, std::vector<Rational> steps, std::uint64_t length) {
             return RainND(origin, std::move(steps), length);
           }),
           py::arg("origin"), py::arg("steps"), py::arg("length"))
      .def_property_readonly("origin", &RainND::origin)
      .def_property_readonly("steps", [](const RainND& r) { return as_vector(r.steps()); })
      .def_property_readonly("length", &RainND::length)
      .def("__contains__", [](const RainND& r, const Point& p) { return rain_nd_contains(r, p); })
      .def("points", [](const RainND& r, std::uint64_t limit) { return enumerate_points(r, limit); },
           py::arg("limit") = kDefaultPointLimit)
      .def("point_count", [](const RainND& r) { return point_count(r); })
      .def("apex_simplex", [](const RainND& r, const Point& p) { return apex_simplex(r, p); })
      .def("subrain", [](const RainND& r, std::uint64_t l) { return subrain_nd(r, l); }, py::arg("length"))
      .def("__eq__", [](const RainND& a, const RainND& b) { return a == b; })
      .def("__repr__", &RainND::str);

  m.def("egyptian_step", &egyptian_step, py::arg("m"), py::arg("q"));
  m.def("f_len", &f_len, py::arg("l"));
  m.def("F_len", py::overload_cast<std::uint64_t, std::uint64_t>(&F_len), py::arg("n"), py::arg("t"));

  // ---- van der Waerden
  py::class_<APWitness>(m, "APWitness")
      .def_readonly("start", &APWitness::start)
      .def_readonly("step", &APWitness::step)
      .def_readonly("length", &APWitness::length)
      .def_readonly("color", &APWitness::color);
  m.def("find_mono_ap", [](const std::vector<Color>& colors, std::uint64_t n) { return find_mono_ap(colors, n); },
        py::arg("colors"), py::arg("length"));
  m.def(
      "vdw_number",
      [](int h, std::uint64_t n, std::uint64_t max_nodes, double max_seconds) {
        VdwBudget b;
        b.max_nodes = max_nodes;
        b.max_time = std::chrono::milliseconds(static_cast<std::int64_t>(max_seconds * 1000));
        const auto r = vdw_number(h, n, b);
        py::dict out;
        out["exact"] = r.exact();
        out["value"] = r.value;
        out["extremal"] = r.extremal;
        out["nodes"] = r.nodes;
        return out;
      },
      py::arg("colors"), py::arg("length"), py::arg("max_nodes") = VdwBudget{}.max_nodes,
      py::arg("max_seconds") = 600.0);
  m.def("sr_expr", [](unsigned h) { return sr_expr(h).str(); }, py::arg("colors"));
  m.def("sr_n_expr", [](unsigned n, unsigned h) { return sr_n_expr(n, h).str(); }, py::arg("n"), py::arg("colors"));
  m.def(
      "sr_eval",
      [](unsigned n, unsigned h, const std::string& table) -> std::optional<BigInt> {
        return eval_expr(sr_n_expr(n, h), table.empty() ? VdwTable{} : VdwTable::load(table));
      },
      py::arg("n"), py::arg("colors"), py::arg("table") = "");

  // ---- colorings
  py::class_<ColoringSpec>(m, "ColoringSpec")
      .def(py::init([](const std::string& text) { return parse_spec(text); }), py::arg("spec"))
      .def_property_readonly("colors", &ColoringSpec::colors)
      .def("color_at", [](const ColoringSpec& s, const Point& p) { return color_at(s, p); })
      .def("__eq__", [](const ColoringSpec& a, const ColoringSpec& b) { return a == b; })
      .def("__str__", &ColoringSpec::str)
      .def("__repr__", [](const ColoringSpec& s) { return "ColoringSpec('" + s.str() + "')"; });
  m.def("canonical_bytes", [](const Point& p) {
    const auto b = canonical_bytes(p);
    return py::bytes(reinterpret_cast<const char*>(b.data()), b.size());
  });

  // ---- finder and certificates
  py::class_<Certificate>(m, "Certificate")
      .def_readonly("simplex", &Certificate::simplex)
      .def_readonly("color", &Certificate::color)
      .def_readonly("spec", &Certificate::spec)
      .def_readonly("target_product", &Certificate::target_product)
      .def_property_readonly("trace_length", [](const Certificate& c) { return c.trace.size(); })
      .def("to_json", [](const Certificate& c) { return to_json(c).dump(2); })
      .def_static("from_json", [](const std::string& s) {
        try {
          return certificate_from_json(nlohmann::json::parse(s));
        } catch (const nlohmann::json::exception& e) {
          throw InvalidArgument(std::string("not JSON: ") + e.what());
        }
      })
      .def("verify", [](const Certificate& c) {
        const auto v = verify_certificate(c);
        return py::make_tuple(v.ok, v.diagnostic);
      });

  m.def(
      "find_simplex",
      [](const ColoringSpec& spec, std::size_t n, const Rational& product, std::uint64_t max_base_length,
         std::uint64_t max_depth, std::uint64_t max_queries, double max_seconds) {
        return find_scaled(spec, n, product, make_budget(max_base_length, max_depth, max_queries, max_seconds));
      },
      py::arg("spec"), py::arg("n") = 2, py::arg("product") = Rational(1),
      py::arg("max_base_length") = SearchBudget{}.max_base_length, py::arg("max_depth") = SearchBudget{}.max_depth,
      py::arg("max_queries") = SearchBudget{}.max_queries, py::arg("max_seconds") = 60.0);
  m.def(
      "find_many",
      [](const ColoringSpec& spec, std::size_t n, const Rational& product, std::size_t count) {
        return find_many(spec, n, product, count);
      },
      py::arg("spec"), py::arg("n"), py::arg("product"), py::arg("count"));
  m.def(
      "brute_force_unit_simplices",
      [](const Rain2D& r, const ColoringSpec& spec) { return brute_force_unit_simplices(r, spec); },
      py::arg("rain"), py::arg("spec"));

  // ---- rendering and CLI
  m.def(
      "render",
      [](const Rain2D& r, std::vector<Point> highlight, const std::string& format) {
        if (format != "svg" && format != "ascii") throw InvalidArgument("format must be 'svg' or 'ascii'");
        return render(RenderPlan{r, std::move(highlight), 10, 120, format == "svg" ? RenderFormat::Svg : RenderFormat::Ascii});
      },
      py::arg("rain"), py::arg("highlight") = std::vector<Point>{}, py::arg("format") = "svg");
  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "monosimplex");
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
