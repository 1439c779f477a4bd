#include "monosimplex/certificate_io.hpp"

#include <limits>

namespace monosimplex {

using nlohmann::json;

namespace {

json int_to_json(const BigInt& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) return json(static_cast<std::int64_t>(v.get_si()));
  return json(to_string(v));
}

BigInt int_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) {
      BigInt out;
      const auto u = j.get<std::uint64_t>();
      mpz_import(out.get_mpz_t(), 1, -1, sizeof u, 0, 0, &u);
      return out;
    }
    return BigInt(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  throw InvalidArgument("expected an integer, got " + j.dump());
}

std::uint64_t u64_from_json(const json& j, const char* what) {
  if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<std::int64_t>() < 0)) {
    throw InvalidArgument(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InvalidArgument(std::string("missing field '") + name + "'");
  return j.at(name);
}

json rain_to_json(const std::variant<Rain2D, RainND>& rain) {
  return std::visit(
      [](const auto& r) -> json {
        using R = std::decay_t<decltype(r)>;
        json steps = json::array();
        if constexpr (std::is_same_v<R, Rain2D>) {
          steps.push_back(rational_to_json(r.step()));
          return {{"dimension", 2}, {"origin", point_to_json(r.origin())}, {"steps", steps}, {"length", r.length()}};
        } else {
          for (const auto& s : r.steps()) steps.push_back(rational_to_json(s));
          return {{"dimension", r.dim()}, {"origin", point_to_json(r.origin())}, {"steps", steps}, {"length", r.length()}};
        }
      },
      rain);
}

std::variant<Rain2D, RainND> rain_from_json(const json& j) {
  const Point origin = point_from_json(field(j, "origin"));
  std::vector<Rational> steps;
  for (const auto& s : field(j, "steps")) steps.push_back(rational_from_json(s));
  const std::uint64_t length = u64_from_json(field(j, "length"), "rain length");
  if (origin.dim() == 2) {
    if (steps.size() != 1) throw InvalidArgument("planar rain needs exactly one step");
    return Rain2D(origin, steps[0], length);
  }
  return RainND(origin, std::move(steps), length);
}

}  // namespace

json rational_to_json(const Rational& r) { return json::array({int_to_json(r.num()), int_to_json(r.den())}); }

Rational rational_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw InvalidArgument("rational must be a [num, den] pair, got " + j.dump());
  const BigInt den = int_from_json(j[1]);
  if (den == 0) throw InvalidArgument("rational with zero denominator in " + j.dump());
  return Rational(int_from_json(j[0]), den);
}

json point_to_json(const Point& p) {
  json out = json::array();
  for (const auto& c : p.coords()) out.push_back(rational_to_json(c));
  return out;
}

Point point_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw InvalidArgument("point must be a non-empty array of rationals");
  std::vector<Rational> coords;
  for (const auto& c : j) coords.push_back(rational_from_json(c));
  return Point(std::move(coords));
}

json to_json(const TraceStep& step) {
  return std::visit(
      [](const auto& s) -> json {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, trace::APFound>) {
          return {{"step", "APFound"},
                  {"origin", s.witness.origin},
                  {"scale", s.witness.scale},
                  {"side", s.witness.side},
                  {"color", s.witness.color}};
        } else if constexpr (std::is_same_v<S, trace::RainBuilt>) {
          json out = rain_to_json(s.rain);
          out["step"] = "RainBuilt";
          return out;
        } else if constexpr (std::is_same_v<S, trace::LayerHit>) {
          return {{"step", "LayerHit"}, {"point", point_to_json(s.point)}};
        } else {
          return {{"step", "Recursed"}, {"colors_remaining", s.colors_remaining}};
        }
      },
      step);
}

TraceStep trace_step_from_json(const json& j) {
  const auto kind = field(j, "step").get<std::string>();
  if (kind == "APFound") {
    GridWitness w;
    for (const auto& o : field(j, "origin")) w.origin.push_back(u64_from_json(o, "witness origin"));
    w.scale = u64_from_json(field(j, "scale"), "witness scale");
    w.side = u64_from_json(field(j, "side"), "witness side");
    w.color = field(j, "color").get<Color>();
    return trace::APFound{std::move(w)};
  }
  if (kind == "RainBuilt") return trace::RainBuilt{rain_from_json(j)};
  if (kind == "LayerHit") return trace::LayerHit{point_from_json(field(j, "point"))};
  if (kind == "Recursed") return trace::Recursed{field(j, "colors_remaining").get<std::vector<Color>>()};
  throw InvalidArgument("unknown trace step '" + kind + "'");
}

json to_json(const Certificate& c) {
  json vertices = json::array();
  for (const auto& v : c.simplex.vertices()) vertices.push_back(point_to_json(v));
  json steps = json::array();
  for (const auto& s : c.trace) steps.push_back(to_json(s));
  return {{"schema", kCertificateSchema},
          {"dimension", c.simplex.dim()},
          {"coloring", c.spec.str()},
          {"color", c.color},
          {"target_product", rational_to_json(c.target_product)},
          {"frame_scale", rational_to_json(c.frame_scale)},
          {"vertices", vertices},
          {"trace", steps}};
}

Certificate certificate_from_json(const json& j) {
  try {
    const auto schema = field(j, "schema").get<std::string>();
    if (schema != kCertificateSchema) throw InvalidArgument("unsupported certificate schema '" + schema + "'");
    std::vector<Point> vertices;
    for (const auto& v : field(j, "vertices")) vertices.push_back(point_from_json(v));
    const auto dim = u64_from_json(field(j, "dimension"), "dimension");
    auto simplex = standard_simplex_from_vertices(vertices);
    if (!simplex || simplex->dim() != dim) {
      throw NotStandardSimplex("vertices do not form a standard simplex of dimension " + std::to_string(dim));
    }
    std::vector<TraceStep> steps;
    if (j.contains("trace")) {
      for (const auto& s : j.at("trace")) steps.push_back(trace_step_from_json(s));
    }
    Rational frame(1);
    if (j.contains("frame_scale")) frame = rational_from_json(j.at("frame_scale"));
    return Certificate{std::move(*simplex),
                       field(j, "color").get<Color>(),
                       parse_spec(field(j, "coloring").get<std::string>()),
                       rational_from_json(field(j, "target_product")),
                       std::move(frame),
                       std::move(steps)};
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace monosimplex
