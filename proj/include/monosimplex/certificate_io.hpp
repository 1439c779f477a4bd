#pragma once

// JSON form of certificates. Rationals are [num, den] pairs; an integer that
// does not fit in 64 bits is written as a decimal string.

#include <string>

#include "json.hpp"

#include "monosimplex/errors.hpp"
#include "monosimplex/finder.hpp"

namespace monosimplex {

inline constexpr const char* kCertificateSchema = "monosimplex.certificate/1";

// The vertex list in a certificate file is not a standard simplex.
class NotStandardSimplex : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);
nlohmann::json point_to_json(const Point& p);
Point point_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TraceStep& step);
TraceStep trace_step_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Certificate& c);
// Throws InvalidArgument on malformed documents, NotStandardSimplex when the
// vertices do not form a standard simplex. The coloring spec is reparsed, so
// table files must be reachable.
Certificate certificate_from_json(const nlohmann::json& j);

}  // namespace monosimplex
