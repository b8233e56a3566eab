// Command-line front end: parses flags and hands a CommandRequest to dispatch().
#include <iostream>

#include "CLI11.hpp"
#include "hball/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Decide, obstruct and construct simplicial balls from h-vectors"};
  app.require_subcommand(1, 1);

  hball::CommandRequest req;
  int dim = -1, x = -1, y = -1;
  for (const std::string& name : hball::subcommands()) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("args", req.args, "vectors like h:1,2,2,1,0 or complex files");
    sub->add_option("--dim", dim, "d (facets have d vertices)");
    sub->add_option("--x", x, "family parameter x");
    sub->add_option("--y", y, "family parameter y");
    sub->add_option("--cap-absent-edges", req.cap_absent_edges, "largest absent-edge count enumerated")
        ->capture_default_str();
    sub->add_flag("--recursive-splits", req.recursive_splits, "also rule out splits whose halves are impossible");
    sub->add_flag("--m-nonneg,!--m-positive", req.m_nonneg, "allow m = 0 when searching for a vertex reduction (default)");
    sub->add_option("-o", req.output, "output path");
    sub->callback([&req, sub] { req.subcommand = sub->get_name(); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : hball::exit_input_error;
  }
  if (dim >= 0) req.dim = dim;
  if (x >= 0) req.x = x;
  if (y >= 0) req.y = y;

  const hball::CommandResult res = hball::dispatch(req);
  std::cout << res.report;
  return res.exit_code;
}
