#include <cstdio>
#include <cstdlib>

#include "doctest.h"
#include "rbx/harness.hpp"
#include "rbx/io.hpp"

using namespace rbx;

TEST_CASE("fork suite: every matching partition contains a rainbow 3-edge path") {
  SuiteReport rep = suite_fork();
  CHECK(rep.pass());
  CHECK(rep.checked == 3);  // {a}{b}{c}{d}, {a,d}..., {b,d}...
  CHECK(rep.trials == 1);
  CHECK(rep.suite == "fork");
}

TEST_CASE("xor suite: no rainbow spanning path, exhaustively") {
  SuiteReport r2 = suite_xor_hampath(2);
  CHECK(r2.pass());
  CHECK(r2.checked == 12);  // 4!/2

  SuiteReport r3 = suite_xor_hampath(3);
  CHECK(r3.pass());
  CHECK(r3.checked == 20160);  // 8!/2

  CHECK_THROWS_AS(suite_xor_hampath(1), Error);  // a single edge is trivially rainbow
  CHECK_THROWS_AS(suite_xor_hampath(4), Error);
}

TEST_CASE("coordinate-lemma suite passes and is thread-count independent") {
  Graph q6 = Graph::hypercube(6);
  Tree t = tree_path(6);
  SuiteOptions opt;
  opt.trials = 16;
  opt.seed = 1;

  setenv("RBX_THREADS", "1", 1);
  SuiteReport serial = suite_coordinate_lemma(q6, t, opt);
  setenv("RBX_THREADS", "4", 1);
  SuiteReport parallel = suite_coordinate_lemma(q6, t, opt);
  unsetenv("RBX_THREADS");

  CHECK(serial.pass());
  CHECK(serial.trials == 16);
  CHECK(serial.checked == 16);
  REQUIRE(parallel.outcomes.size() == serial.outcomes.size());
  for (size_t i = 0; i < serial.outcomes.size(); ++i) {
    CHECK(serial.outcomes[i].seed == opt.seed + i);
    CHECK(serial.outcomes[i].ok == parallel.outcomes[i].ok);
    CHECK(serial.outcomes[i].detail == parallel.outcomes[i].detail);
  }
}

TEST_CASE("coordinate-lemma suite covers every family") {
  SuiteOptions opt;
  opt.trials = 6;
  opt.seed = 7;
  for (const Tree& t : {tree_star(6), tree_spider({2, 2, 2}), tree_spider({3, 3, 3}),
                        tree_pendant(tree_star(2), 5)}) {
    Graph host = Graph::hypercube(std::max(7, t.k));
    SuiteReport rep = suite_coordinate_lemma(host, t, opt);
    CHECK(rep.pass());
    CHECK(rep.checked == 6);
  }
}

TEST_CASE("coordinate-lemma suite preconditions") {
  SuiteOptions opt;
  CHECK_THROWS_AS(suite_coordinate_lemma(Graph::complete_graph(8), tree_path(3), opt),
                  Error);
  CHECK_THROWS_AS(suite_coordinate_lemma(Graph::hypercube(3), tree_path(6), opt), Error);
  CHECK_THROWS_AS(
      suite_coordinate_lemma(Graph::hypercube(8), tree_spider({5, 2, 1}), opt), Error);
}

TEST_CASE("greedy-2k suite passes") {
  SuiteOptions opt;
  opt.trials = 24;
  opt.seed = 3;
  SuiteReport rep = suite_greedy_2k(opt);
  CHECK(rep.pass());
  CHECK(rep.trials == 24);
  CHECK(rep.checked == 24);
}

TEST_CASE("p4-lemma suite passes") {
  SuiteOptions opt;
  opt.trials = 12;
  opt.seed = 5;
  SuiteReport rep = suite_p4_lemma(opt);
  CHECK(rep.pass());
  CHECK(rep.checked == 12);
}

TEST_CASE("k2r-embed suite passes") {
  SuiteOptions opt;
  opt.trials = 12;
  opt.seed = 9;
  SuiteReport rep = suite_k2r_embed(opt);
  CHECK(rep.pass());
  CHECK(rep.checked == 12);
}

TEST_CASE("counterexample persistence writes hash-named files") {
  SuiteReport rep;
  rep.suite = "fake";
  TrialOutcome bad;
  bad.seed = 42;
  bad.ok = false;
  bad.detail = "forced";
  bad.counterexample = "counterexample fake\nseed 42\ndetail:\nforced\n";
  rep.outcomes = {bad, bad};  // identical content must be written once
  rep.failures = 2;
  persist_counterexamples(rep, "");
  REQUIRE(rep.saved.size() == 1);
  CHECK(rep.saved[0].rfind("counterexample-", 0) == 0);
  CHECK(read_text_file(rep.saved[0]) == bad.counterexample);
  std::remove(rep.saved[0].c_str());
}

TEST_CASE("fork graph shape") {
  Graph f = fork_graph();
  CHECK(f.vertex_count() == 5);
  CHECK(f.edge_count() == 4);
  CHECK(f.degree(0) == 3);
  CHECK(f.degree(3) == 2);
}
