#pragma once
// Library side of the rbx tool: one function per subcommand, writing the
// report to a stream and returning the process exit status (0 = clean,
// 1 = suite failure, 2 = bad config). Budget-limited bound results stay
// in-band (exact=false) with exit 0. Reports are deterministic in
// (inputs, seed): reruns produce byte-identical output.

#include <cstdint>
#include <ostream>
#include <string>

#include "rbx/extremal.hpp"

namespace rbx {

struct RunConfig {
  std::string command;          // verify | exstar | delta-star | sweep | pictogram
  std::string suite;            // verify: suite name
  std::string host;             // qn:<n> | kn:<n> | file
  std::string tree;             // path:k | star:k | spider:l1,l2,.. | spider3:t | pendant:file,m | file
  bool exact = false;
  int trials = 100;
  uint64_t seed = 1;
  uint64_t budget_nodes = 50'000'000;
  int p = 3;                    // xor suite instance size
  int k = 3;                    // sweep: tree edge count
  std::string out;              // report file; "" = stdout
  std::string format = "json";  // json | text
};

int cmd_verify(const RunConfig& cfg, std::ostream& os);
int cmd_bound(const RunConfig& cfg, Quantity q, std::ostream& os);
int cmd_sweep(const RunConfig& cfg, std::ostream& os);
int cmd_pictogram(const RunConfig& cfg, std::ostream& os);

// Short role name for a tree: path:k, star:k, spider:l1,l2,..., or the raw
// parent list for non-spiders.
std::string describe_tree(const Tree& t);

// Dispatches cfg.command, buffers the report, then emits it to stdout or
// cfg.out. Errors print to stderr and map to exit 2.
int run_command(const RunConfig& cfg);

}  // namespace rbx
