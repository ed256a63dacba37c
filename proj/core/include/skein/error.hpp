#pragma once

#include <stdexcept>
#include <string>

namespace skein {

// Machine-readable failure codes. Every Error carries one so the CLI can map
// failures to stable identifiers without parsing message text.
enum class Errc {
  parse_error,
  not_divisible,
  invalid_diagram,
  too_many_crossings,
  not_primitive,
  zero_curve,
  not_unimodular,
  degree_zero,
  relation_not_contained,
  no_stabilization,
  not_in_span,
  no_lift_found,
  unknown_preset,
  bad_parameters,
  internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace skein
