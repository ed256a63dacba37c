#include "skein/cli.hpp"

#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "skein/error.hpp"

namespace skein {

namespace {

using nlohmann::ordered_json;

struct ElementParser {
  const std::string& src;
  std::size_t pos = 0;

  explicit ElementParser(const std::string& s) : src(s) {}

  [[noreturn]] void expected(std::size_t at, const std::string& what) {
    fail(Errc::parse_error,
         "position " + std::to_string(at) + ": expected " + what);
  }

  void skip_ws() {
    while (pos < src.size() &&
           std::isspace(static_cast<unsigned char>(src[pos])))
      ++pos;
  }

  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }

  bool eat(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }

  // A '(' opens a curve atom exactly when the parenthesized text holds a
  // comma; otherwise it is a coefficient. Laurent coefficients and curve
  // atoms both contain no nested parentheses.
  bool paren_is_curve() {
    std::size_t close = src.find(')', pos);
    if (close == std::string::npos) return false;
    return src.find(',', pos) < close;
  }

  bool at_word_start() {
    char c = peek();
    if (c == 'L' || c == 'M' || c == 'x' || c == 'y' || c == 'z') return true;
    return c == '(' && paren_is_curve();
  }

  int parse_int() {
    skip_ws();
    std::size_t start = pos;
    if (pos < src.size() && (src[pos] == '-' || src[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < src.size() &&
           std::isdigit(static_cast<unsigned char>(src[pos])))
      ++pos;
    if (pos == digits) expected(start, "an integer");
    return std::stoi(src.substr(start, pos - start));
  }

  void parse_atom(SurfaceWord& w) {
    char c = peek();
    std::size_t at = pos;
    switch (c) {
      case 'L':
        ++pos;
        if (pos < src.size() && src[pos] == 'M') {
          ++pos;
          w.push_back({1, 1});
        } else {
          w.push_back({1, 0});
        }
        return;
      case 'M':
        ++pos;
        w.push_back({0, 1});
        return;
      case 'y':
        ++pos;
        w.push_back({1, 0});
        return;
      case 'x':
        ++pos;
        w.push_back({0, 1});
        return;
      case 'z':
        ++pos;
        w.push_back({1, 1});
        return;
      case '1':
        ++pos;  // the empty word contributes no letter
        return;
      case '(':
        if (paren_is_curve()) {
          ++pos;
          int a = parse_int();
          skip_ws();
          if (!eat(',')) expected(pos, "','");
          int b = parse_int();
          skip_ws();
          if (!eat(')')) expected(pos, "')'");
          w.push_back({a, b});
          return;
        }
        break;
      default:
        break;
    }
    expected(at, "a curve atom: 'L', 'M', 'LM', '1', or '(a,b)'");
  }

  SurfaceWord parse_word() {
    SurfaceWord w;
    parse_atom(w);
    while (peek() == '.') {
      ++pos;
      parse_atom(w);
    }
    return w;
  }

  // Laurent monomial: rational ['*' t-power] or a bare t-power. The text is
  // handed to LaurentPoly::parse once its extent is known.
  LaurentPoly parse_monomial_coeff() {
    skip_ws();
    std::size_t start = pos;
    bool have_num = false;
    while (pos < src.size() &&
           std::isdigit(static_cast<unsigned char>(src[pos]))) {
      ++pos;
      have_num = true;
    }
    if (have_num && pos < src.size() && src[pos] == '/') {
      ++pos;
      std::size_t digits = pos;
      while (pos < src.size() &&
             std::isdigit(static_cast<unsigned char>(src[pos])))
        ++pos;
      if (pos == digits) expected(pos, "a denominator");
    }
    bool have_t = false;
    if (!have_num && pos < src.size() && src[pos] == 't') {
      ++pos;
      have_t = true;
    } else if (have_num && pos + 1 < src.size() && src[pos] == '*' &&
               src[pos + 1] == 't') {
      pos += 2;  // the '*' binds into the monomial, not to the word
      have_t = true;
    }
    if (have_t && pos < src.size() && src[pos] == '^') {
      ++pos;
      if (pos < src.size() && (src[pos] == '-' || src[pos] == '+')) ++pos;
      std::size_t digits = pos;
      while (pos < src.size() &&
             std::isdigit(static_cast<unsigned char>(src[pos])))
        ++pos;
      if (pos == digits) expected(pos, "an exponent");
    }
    std::string text = src.substr(start, pos - start);
    try {
      return LaurentPoly::parse(text);
    } catch (const Error& e) {
      fail(Errc::parse_error,
           "position " + std::to_string(start) + ": " + e.what());
    }
  }

  void parse_term(SurfaceElement& acc, bool negative) {
    char c = peek();
    std::size_t at = pos;
    LaurentPoly coeff = LaurentPoly::one();
    if (c == '(' && !paren_is_curve()) {
      std::size_t close = src.find(')', pos);
      if (close == std::string::npos) expected(at, "')'");
      std::string inner = src.substr(pos + 1, close - pos - 1);
      try {
        coeff = LaurentPoly::parse(inner);
      } catch (const Error& e) {
        fail(Errc::parse_error,
             "position " + std::to_string(at + 1) + ": " + e.what());
      }
      pos = close + 1;
      skip_ws();
      if (!eat('*')) expected(pos, "'*' after a parenthesized coefficient");
      add(acc, parse_word(), coeff, negative);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == 't') {
      coeff = parse_monomial_coeff();
      skip_ws();
      std::size_t star = pos;
      if (pos < src.size() && src[pos] == '*') {
        ++pos;
        if (!at_word_start() && peek() != '1') expected(star + 1, "a curve word");
        add(acc, parse_word(), coeff, negative);
        return;
      }
      add(acc, {}, coeff, negative);  // bare constant: multiple of the unit
      return;
    }
    if (at_word_start() || c == '1') {
      add(acc, parse_word(), coeff, negative);
      return;
    }
    expected(at, "a term: a coefficient or a curve word");
  }

  static void add(SurfaceElement& acc, const SurfaceWord& w,
                  const LaurentPoly& coeff, bool negative) {
    acc += SurfaceElement::word(w, negative ? coeff * Rational(-1) : coeff);
  }

  SurfaceElement parse_expr() {
    SurfaceElement acc;
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    parse_term(acc, neg);
    while (true) {
      skip_ws();
      if (pos >= src.size()) break;
      if (eat('-'))
        parse_term(acc, true);
      else if (eat('+'))
        parse_term(acc, false);
      else
        expected(pos, "'+', '-', or end of input");
    }
    return acc;
  }
};

SplittingSpec make_split(const CommandOptions& o) {
  if (!o.manifold.empty() && !o.gluing.empty())
    fail(Errc::bad_parameters, "give either --gluing or --manifold, not both");
  if (!o.manifold.empty()) return preset(o.manifold);
  if (!o.gluing.empty()) return SplittingSpec(GluingMatrix::parse(o.gluing));
  fail(Errc::bad_parameters, "command requires --gluing or --manifold");
}

LiftMode make_mode(const CommandOptions& o) {
  if (o.lift == "library") return LiftMode::library;
  if (o.lift == "solver") return LiftMode::solver;
  fail(Errc::bad_parameters, "--lift must be library or solver");
}

bool json_format(const CommandOptions& o) {
  if (o.format == "json") return true;
  if (o.format == "text") return false;
  fail(Errc::bad_parameters, "--format must be json or text");
}

void emit(const ordered_json& j, std::ostream& out) {
  out << j.dump(2) << "\n";
}

std::vector<std::string> poly_strings(const std::vector<MultiPoly>& ps) {
  std::vector<std::string> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

int cmd_resolve(const CommandOptions& o, std::ostream& out) {
  std::ifstream in(o.diagram_path);
  if (!in) fail(Errc::bad_parameters, "cannot read '" + o.diagram_path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  AnnulusDiagram d = diagram_from_json(buffer.str());
  SolidTorusElement r = resolve(d);
  if (json_format(o)) {
    ordered_json j;
    j["command"] = "resolve";
    j["diagram"] = o.diagram_path;
    j["element"] = r.to_string();
    emit(j, out);
  } else {
    out << r.to_string() << "\n";
  }
  return 0;
}

TorusCurve parse_single_curve(const std::string& text) {
  SurfaceElement e = ElementParser(text).parse_expr();
  const auto& terms = e.terms();
  if (terms.size() == 1) {
    const auto& [w, c] = *terms.begin();
    if (w.size() == 1 && c == LaurentPoly::one()) return w[0];
  }
  fail(Errc::bad_parameters,
       "--curve must name a single curve, e.g. \"L\" or \"(2,1)\"");
}

int cmd_trace(const CommandOptions& o, std::ostream& out) {
  TorusCurve c = parse_single_curve(o.curve);
  std::string trace = print_class(trace_poly(c));
  if (json_format(o)) {
    ordered_json j;
    j["command"] = "trace";
    j["curve"] = to_string(c);
    j["trace"] = trace;
    emit(j, out);
  } else {
    out << trace << "\n";
  }
  return 0;
}

int cmd_ideals(const CommandOptions& o, std::ostream& out) {
  SplittingSpec split = make_split(o);
  const auto& h0 = split.ideal(Side::H0).groebner_basis();
  const auto& h1 = split.ideal(Side::H1).groebner_basis();
  if (json_format(o)) {
    ordered_json j;
    j["command"] = "ideals";
    j["manifold"] = split.name();
    j["gluing"] = split.gluing().to_string();
    j["h0"] = poly_strings(h0);
    j["h1"] = poly_strings(h1);
    emit(j, out);
  } else {
    out << "manifold: " << split.name() << "\n";
    out << "gluing: " << split.gluing().to_string() << "\n";
    out << "H0: " << to_string(h0) << "\n";
    out << "H1: " << to_string(h1) << "\n";
  }
  return 0;
}

int cmd_tor1(const CommandOptions& o, std::ostream& out) {
  SplittingSpec split = make_split(o);
  if (o.degree_bound < 1) fail(Errc::bad_parameters, "--degree-bound must be >= 1");
  Tor1Bounded tb =
      tor1_module_bounded(split.ideal(Side::H0), split.ideal(Side::H1),
                          torus_relation(), o.degree_bound);
  if (json_format(o)) {
    ordered_json j;
    j["command"] = "tor1";
    j["manifold"] = split.name();
    j["gluing"] = split.gluing().to_string();
    j["degree_bound"] = o.degree_bound;
    j["stabilized"] = tb.stabilized;
    j["dimension"] = tb.result.dimension;
    j["next_dimension"] = tb.next_dimension;
    j["generators"] = poly_strings(tb.result.generators);
    j["basis"] = poly_strings(tb.result.vector_space_basis);
    j["relations"] = poly_strings(tb.result.relations);
    emit(j, out);
  } else {
    out << "manifold: " << split.name() << "\n";
    out << "gluing: " << split.gluing().to_string() << "\n";
    out << "degree_bound: " << o.degree_bound << "\n";
    out << "stabilized: " << (tb.stabilized ? "yes" : "no") << "\n";
    out << "dimension: " << tb.result.dimension;
    if (!tb.stabilized) out << " (grows to " << tb.next_dimension << ")";
    out << "\n";
    out << "generators:\n";
    for (const auto& p : tb.result.generators)
      out << "  " << p.to_string() << "\n";
    out << "basis:\n";
    for (const auto& p : tb.result.vector_space_basis)
      out << "  " << p.to_string() << "\n";
    out << "relations:\n";
    for (const auto& p : tb.result.relations)
      out << "  " << p.to_string() << "\n";
  }
  return 0;
}

int cmd_delta1(const CommandOptions& o, std::ostream& out) {
  SplittingSpec split = make_split(o);
  SurfaceElement e = parse_element(o.cycle);
  HochschildChain chain(1);
  for (const auto& [w, c] : e.terms())
    chain += HochschildChain::term(SolidTorusElement::phi(), {w},
                                   SolidTorusElement::phi(), c);
  HochschildChain b = boundary(chain, split);
  Valuation v = cycle_valuation(chain, split);
  if (json_format(o)) {
    ordered_json j;
    j["command"] = "delta1";
    j["manifold"] = split.name();
    j["gluing"] = split.gluing().to_string();
    j["cycle"] = print_element(e);
    j["chain"] = chain.to_string();
    j["boundary"] = b.to_string();
    if (v.is_infinite)
      j["valuation"] = "infinity";
    else
      j["valuation"] = v.value;
    emit(j, out);
  } else {
    out << "manifold: " << split.name() << "\n";
    out << "gluing: " << split.gluing().to_string() << "\n";
    out << "cycle: " << print_element(e) << "\n";
    out << "chain: " << chain.to_string() << "\n";
    out << "boundary: " << b.to_string() << "\n";
    out << "valuation: ";
    if (v.is_infinite)
      out << "infinity";
    else
      out << v.value;
    out << "\n";
  }
  return 0;
}

int cmd_verdict(const CommandOptions& o, std::ostream& out) {
  SplittingSpec split = make_split(o);
  TorsionReport r = torsion_verdict(split, make_mode(o));
  if (json_format(o)) {
    out << report_to_json(r) << "\n";
  } else {
    out << "manifold: " << r.manifold << "\n";
    out << "gluing: " << r.gluing.to_string() << "\n";
    out << "verdict: " << r.verdict_string() << "\n";
    out << "tor1: dimension " << r.tor1_dimension << ", degree bound "
        << r.degree_bound << ", "
        << (r.tor1_stabilized ? "stabilized" : "not stabilized") << "\n";
    out << "cycles:\n";
    for (const auto& c : r.cycles) {
      out << "  class: " << c.class_poly.to_string() << "\n";
      out << "    lift: " << c.lift.to_string() << "\n";
      out << "    boundary: " << c.image.to_string() << "\n";
      out << "    valuation: ";
      if (c.valuation.is_infinite)
        out << "infinity";
      else
        out << c.valuation.value;
      out << "\n";
      for (const auto& n : c.notes) out << "    note: " << n << "\n";
    }
    for (const auto& n : r.notes) out << "note: " << n << "\n";
  }
  return r.kind == VerdictKind::inconclusive ? 2 : 0;
}

int cmd_hh0(const CommandOptions& o, std::ostream& out) {
  SplittingSpec split = make_split(o);
  if (o.degree_bound < 1) fail(Errc::bad_parameters, "--degree-bound must be >= 1");
  QuotientBasis q = specialized_hh0(split, o.degree_bound);
  std::vector<std::string> monomials;
  monomials.reserve(q.monomials.size());
  for (const auto& m : q.monomials) monomials.push_back(mono_to_string(m));
  if (json_format(o)) {
    ordered_json j;
    j["command"] = "hh0";
    j["manifold"] = split.name();
    j["gluing"] = split.gluing().to_string();
    j["degree_bound"] = q.degree_bound;
    j["finite"] = q.finite;
    if (q.finite)
      j["dimension"] = q.dimension();
    else
      j["dimension"] = "infinity";
    j["monomials"] = monomials;
    emit(j, out);
  } else {
    out << "manifold: " << split.name() << "\n";
    out << "gluing: " << split.gluing().to_string() << "\n";
    out << "degree_bound: " << q.degree_bound << "\n";
    out << "finite: " << (q.finite ? "yes" : "no") << "\n";
    out << "dimension: ";
    if (q.finite)
      out << q.dimension();
    else
      out << "infinity (" << q.dimension() << " monomials up to the bound)";
    out << "\n";
    out << "monomials:";
    for (const auto& m : monomials) out << " " << m;
    out << "\n";
  }
  return 0;
}

void emit_error(const CommandOptions& o, const char* code,
                const std::string& message, std::ostream& out,
                std::ostream& err) {
  bool json = false;
  // The format flag itself may be the invalid parameter; fall back to text.
  if (o.format == "json") json = true;
  if (json) {
    ordered_json j;
    j["error"]["code"] = code;
    j["error"]["message"] = message;
    out << j.dump(2) << "\n";
  } else {
    err << "error[" << code << "]: " << message << "\n";
  }
}

}  // namespace

SurfaceElement parse_element(const std::string& src) {
  return ElementParser(src).parse_expr();
}

std::string print_element(const SurfaceElement& e) { return e.to_string(); }

std::string print_class(const MultiPoly& p) {
  const auto& terms = p.terms();
  if (terms.size() >= 2) {
    bool all_negative = true;
    for (const auto& [m, c] : terms) {
      if (c > 0) {
        all_negative = false;
        break;
      }
    }
    if (all_negative) return "-(" + (p * Rational(-1)).to_string() + ")";
  }
  return p.to_string();
}

int run_command(const CommandOptions& o, std::ostream& out,
                std::ostream& err) {
  try {
    json_format(o);  // validate --format before any work
    if (o.command == "resolve") return cmd_resolve(o, out);
    if (o.command == "trace") return cmd_trace(o, out);
    if (o.command == "ideals") return cmd_ideals(o, out);
    if (o.command == "tor1") return cmd_tor1(o, out);
    if (o.command == "delta1") return cmd_delta1(o, out);
    if (o.command == "verdict") return cmd_verdict(o, out);
    if (o.command == "hh0") return cmd_hh0(o, out);
    fail(Errc::bad_parameters, "unknown command '" + o.command + "'");
  } catch (const Error& e) {
    emit_error(o, errc_name(e.code()), e.what(), out, err);
    return 1;
  } catch (const std::exception& e) {
    emit_error(o, errc_name(Errc::internal), e.what(), out, err);
    return 1;
  }
}

}  // namespace skein
