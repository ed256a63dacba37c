#include <iostream>

#include "CLI11.hpp"
#include "skein/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "skein: exact Kauffman bracket calculator for genus-1 Heegaard "
      "splittings"};
  app.require_subcommand(1);

  skein::CommandOptions opts;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opts.format, "Output format (default text)")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_gluing = [&](CLI::App* cmd) {
    cmd->add_option("--gluing", opts.gluing, "Gluing matrix \"p,q;r,s\"");
    cmd->add_option("--manifold", opts.manifold,
                    "Preset: lens:p,q | s1xs2 | s3 | identity_double");
  };

  CLI::App* resolve = app.add_subcommand(
      "resolve", "Resolve an annulus diagram file to normal form");
  resolve->add_option("diagram", opts.diagram_path, "Diagram JSON file")
      ->required();
  add_format(resolve);

  CLI::App* trace =
      app.add_subcommand("trace", "Trace polynomial of a torus curve");
  trace->add_option("--curve", opts.curve, "Curve: L, M, LM, or (a,b)")
      ->required();
  add_format(trace);

  CLI::App* ideals =
      app.add_subcommand("ideals", "Handlebody ideals of both sides");
  add_gluing(ideals);
  add_format(ideals);

  CLI::App* tor1 =
      app.add_subcommand("tor1", "Degree-bounded Tor1 of the splitting");
  add_gluing(tor1);
  add_format(tor1);
  tor1->add_option("--degree-bound", opts.degree_bound,
                   "Degree bound (default 8)");

  CLI::App* delta1 = app.add_subcommand(
      "delta1", "Boundary and (1+t)-valuation of a degree-1 chain");
  add_gluing(delta1);
  add_format(delta1);
  delta1->add_option("--cycle", opts.cycle, "Surface element expression")
      ->required();

  CLI::App* verdict =
      app.add_subcommand("verdict", "Run the full (1+t)-torsion test");
  add_gluing(verdict);
  add_format(verdict);
  verdict->add_option("--lift", opts.lift, "Lift strategy (default library)")
      ->check(CLI::IsMember({"library", "solver"}));

  CLI::App* hh0 = app.add_subcommand(
      "hh0", "Specialized degree-0 column of the splitting");
  add_gluing(hh0);
  add_format(hh0);
  hh0->add_option("--degree-bound", opts.degree_bound,
                  "Degree bound (default 8)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  opts.command = app.get_subcommands().front()->get_name();
  return skein::run_command(opts, std::cout, std::cerr);
}
