#pragma once

#include <iosfwd>
#include <string>

#include "skein/hochschild.hpp"

namespace skein {

// Surface-element expression grammar:
//
//   expr  := ['+'|'-'] term (('+'|'-') term)*
//   term  := coeff ['*' word] | word
//   word  := atom ('.' atom)*
//   atom  := 'L' | 'M' | 'LM' | '1' | '(' int ',' int ')'
//   coeff := '(' Laurent polynomial ')' | Laurent monomial
//
// The trace coordinates are accepted as curve aliases: y -> L, z -> LM,
// x -> M. '1' is the empty word; a bare coefficient is a multiple of it.
// Errors carry Errc::parse_error with the position and the expected token.
SurfaceElement parse_element(const std::string& src);

// Canonical form accepted by parse_element; parse(print(e)) == e.
std::string print_element(const SurfaceElement& e);

// Class polynomials print with an overall minus factored out when every
// coefficient is negative, e.g. "-(y*z + x)".
std::string print_class(const MultiPoly& p);

// One decoded invocation. `command` is one of resolve, trace, ideals, tor1,
// delta1, verdict, hh0. Exactly one of `gluing` / `manifold` selects the
// splitting for the commands that need one.
struct CommandOptions {
  std::string command;
  std::string gluing;        // "p,q;r,s"
  std::string manifold;      // preset name, e.g. "lens:2,1"
  std::string curve;         // trace
  std::string cycle;         // delta1
  std::string diagram_path;  // resolve
  int degree_bound = 8;      // tor1, hh0
  std::string format = "text";   // "text" | "json"
  std::string lift = "library";  // "library" | "solver" (verdict)
};

// Dispatches one command, writing the report to `out` (JSON reports always
// go to `out`; text-mode errors go to `err`). Returns the process exit
// status: 0 success, 2 INCONCLUSIVE verdict, 1 any error.
int run_command(const CommandOptions& opts, std::ostream& out,
                std::ostream& err);

}  // namespace skein
