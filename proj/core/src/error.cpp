#include "skein/error.hpp"

namespace skein {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::parse_error: return "PARSE_ERROR";
    case Errc::not_divisible: return "NOT_DIVISIBLE";
    case Errc::invalid_diagram: return "INVALID_DIAGRAM";
    case Errc::too_many_crossings: return "TOO_MANY_CROSSINGS";
    case Errc::not_primitive: return "NOT_PRIMITIVE";
    case Errc::zero_curve: return "ZERO_CURVE";
    case Errc::not_unimodular: return "NOT_UNIMODULAR";
    case Errc::degree_zero: return "DEGREE_ZERO";
    case Errc::relation_not_contained: return "RELATION_NOT_CONTAINED";
    case Errc::no_stabilization: return "NO_STABILIZATION";
    case Errc::not_in_span: return "NOT_IN_SPAN";
    case Errc::no_lift_found: return "NO_LIFT_FOUND";
    case Errc::unknown_preset: return "UNKNOWN_PRESET";
    case Errc::bad_parameters: return "BAD_PARAMETERS";
    case Errc::internal: return "INTERNAL";
  }
  return "INTERNAL";
}

}  // namespace skein
