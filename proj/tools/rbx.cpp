#include <cstdio>

#include "CLI11.hpp"
#include "rbx/cli.hpp"

namespace {

int cli_main(int argc, char** argv) {
  rbx::RunConfig cfg;
  CLI::App app{"combinatorial search for rainbow-extremal evidence on hypercube hosts"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sc, bool exact_flag) {
    sc->add_option("--host", cfg.host, "host graph: qn:<n>, kn:<n>, or a graph file");
    sc->add_option("--tree", cfg.tree,
                   "tree: path:k, star:k, spider:l1,l2,.., spider3:t, pendant:file,m, "
                   "or a tree file");
    sc->add_option("--trials", cfg.trials, "randomized trial count");
    sc->add_option("--seed", cfg.seed, "base seed; trial i uses seed+i");
    sc->add_option("--budget-nodes", cfg.budget_nodes, "search node budget");
    sc->add_option("--out", cfg.out, "write the report to this file");
    sc->add_option("--format", cfg.format, "report format: json or text");
    if (exact_flag) sc->add_flag("--exact", cfg.exact, "run the exact oracle (small hosts)");
  };

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify
      ->add_option("suite", cfg.suite,
                   "coordinate-lemma | greedy-2k | xor-no-rainbow-hampath | fork | "
                   "p4-lemma | k2r-embed")
      ->required();
  verify->add_option("--p", cfg.p, "xor suite: host is the complete graph on 2^p vertices");
  add_common(verify, false);

  add_common(app.add_subcommand("exstar", "rainbow extremal number bounds"), true);
  add_common(app.add_subcommand("delta-star", "rainbow min degree bounds"), true);

  CLI::App* sweep =
      app.add_subcommand("sweep", "all k-edge trees: bounds, coverage, conjecture check");
  sweep->add_option("--k", cfg.k, "tree edge count (1..10)");
  add_common(sweep, true);

  add_common(app.add_subcommand("pictogram", "seed/intersection matrix of a family construction"),
             false);

  CLI11_PARSE(app, argc, argv);
  cfg.command = app.get_subcommands().front()->get_name();
  return rbx::run_command(cfg);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return cli_main(argc, argv);
  } catch (...) {  // cli_main maps its own errors; this guards allocation failure
    std::fputs("error: internal failure\n", stderr);
    return 2;
  }
}
