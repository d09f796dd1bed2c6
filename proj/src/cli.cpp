#include "rbx/cli.hpp"

#include <iostream>
#include <sstream>

#include "json.hpp"
#include "rbx/harness.hpp"
#include "rbx/io.hpp"

namespace rbx {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string dirname_of(const std::string& path) {
  auto slash = path.find_last_of('/');
  return slash == std::string::npos ? std::string() : path.substr(0, slash);
}

bool want_json(const RunConfig& cfg) {
  if (cfg.format == "json") return true;
  if (cfg.format == "text") return false;
  fail_precondition("format must be json or text");
}

ordered_json outcome_obj(int trial, const TrialOutcome& o) {
  ordered_json j;
  j["trial"] = trial;
  j["seed"] = o.seed;
  j["ok"] = o.ok;
  if (!o.ok) j["detail"] = o.detail;
  return j;
}

void render_suite(const SuiteReport& rep, const RunConfig& cfg, std::ostream& os) {
  if (want_json(cfg)) {
    ordered_json j;
    j["command"] = "verify";
    j["suite"] = rep.suite;
    if (rep.suite == "coordinate-lemma") {
      j["host"] = cfg.host;
      j["tree"] = cfg.tree;
    }
    if (rep.suite == "xor-no-rainbow-hampath") j["p"] = cfg.p;
    j["trials"] = rep.trials;
    j["failures"] = rep.failures;
    j["checked"] = rep.checked;
    j["pass"] = rep.pass();
    j["outcomes"] = ordered_json::array();
    for (int i = 0; i < rep.trials; ++i) j["outcomes"].push_back(outcome_obj(i, rep.outcomes[i]));
    j["counterexamples"] = rep.saved;
    os << j.dump(2) << "\n";
    return;
  }
  os << "suite " << rep.suite << ": " << rep.trials << " trials, " << rep.failures
     << " failures, " << rep.checked << " checked\n";
  for (int i = 0; i < rep.trials; ++i) {
    const TrialOutcome& o = rep.outcomes[i];
    os << "trial " << i << " seed " << o.seed << (o.ok ? " ok" : " FAIL") << "\n";
    if (!o.ok) os << "  " << o.detail << "\n";
  }
  for (const std::string& p : rep.saved) os << "counterexample saved: " << p << "\n";
  os << (rep.pass() ? "PASS" : "FAIL") << "\n";
}

ordered_json bound_obj(const BoundReport& rep) {
  return ordered_json::parse(bound_report_json(rep));
}

void render_bound(const BoundReport& rep, const RunConfig& cfg, std::ostream& os) {
  if (want_json(cfg)) {
    os << bound_report_json(rep);
    return;
  }
  os << quantity_name(rep.quantity) << " on " << rep.host << " against " << rep.tree
     << "\n";
  os << "lower " << rep.lower << "\nupper " << rep.upper << "\nexact "
     << (rep.exact ? "true" : "false") << "\n";
  if (rep.certificate)
    os << "certificate: " << rep.certificate->edges.size() << " edges, "
       << (rep.certificate->checked ? "checked" : "unchecked") << "\n";
  for (const std::string& p : rep.provenance) os << "provenance: " << p << "\n";
}

// Evidence against the tree sharing the star's value: the two intervals are
// disjoint. With exact oracles the intervals are points, so this is plain
// inequality; with open bounds an overlap keeps the conjecture alive.
bool intervals_disjoint(const BoundReport& a, const BoundReport& b) {
  return a.upper < b.lower || b.upper < a.lower;
}

}  // namespace

std::string describe_tree(const Tree& t) {
  TreeStats s = tree_stats(t);
  if (s.is_path) return "path:" + std::to_string(t.k);
  if (s.spider) {
    bool star = true;
    for (const auto& leg : s.spider->legs) star = star && leg.size() == 1;
    if (star) return "star:" + std::to_string(t.k);
    std::string out = "spider:";
    for (size_t i = 0; i < s.spider->legs.size(); ++i)
      out += (i ? "," : "") + std::to_string(s.spider->legs[i].size());
    return out;
  }
  std::string out = "t " + std::to_string(t.k);
  for (int i = 1; i <= t.k; ++i) out += " " + std::to_string(t.parent[i]);
  return out;
}

int cmd_verify(const RunConfig& cfg, std::ostream& os) {
  SuiteOptions opt;
  opt.trials = cfg.trials;
  opt.seed = cfg.seed;
  opt.save_dir = dirname_of(cfg.out);

  RunConfig c = cfg;
  SuiteReport rep;
  if (cfg.suite == "coordinate-lemma") {
    if (c.host.empty()) c.host = "qn:6";
    if (c.tree.empty()) c.tree = "path:6";
    rep = suite_coordinate_lemma(parse_host_spec(c.host), parse_tree_spec(c.tree), opt);
  } else if (cfg.suite == "greedy-2k") {
    rep = suite_greedy_2k(opt);
  } else if (cfg.suite == "xor-no-rainbow-hampath") {
    rep = suite_xor_hampath(cfg.p, opt.save_dir);
  } else if (cfg.suite == "fork") {
    rep = suite_fork(opt.save_dir);
  } else if (cfg.suite == "p4-lemma") {
    rep = suite_p4_lemma(opt);
  } else if (cfg.suite == "k2r-embed") {
    rep = suite_k2r_embed(opt);
  } else {
    fail_precondition("unknown suite: " + cfg.suite);
  }
  render_suite(rep, c, os);
  return rep.pass() ? 0 : 1;
}

int cmd_bound(const RunConfig& cfg, Quantity q, std::ostream& os) {
  Graph g = parse_host_spec(cfg.host);
  Tree t = parse_tree_spec(cfg.tree);
  BoundReport rep;
  if (cfg.exact) {
    ExactOptions opt;
    opt.budget = cfg.budget_nodes;
    rep = q == Quantity::exstar ? exstar_exact(g, t, opt) : deltastar_exact(g, t, opt);
  } else {
    rep = q == Quantity::exstar ? bound_exstar(g, t) : bound_deltastar(g, t);
  }
  rep.host = cfg.host;
  rep.tree = cfg.tree;
  render_bound(rep, cfg, os);
  return 0;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& os) {
  if (cfg.k < 1 || cfg.k > 10) fail_precondition("sweep: k must be in [1, 10]");
  Graph g = parse_host_spec(cfg.host.empty() ? "qn:4" : cfg.host);
  std::string host_label = cfg.host.empty() ? "qn:4" : cfg.host;
  bool run_exact = cfg.exact && g.edge_count() <= 14;
  ExactOptions eopt;
  eopt.budget = cfg.budget_nodes;

  std::vector<Tree> trees = enumerate_trees(cfg.k);
  Tree star = tree_star(cfg.k);

  auto reports = [&](const Tree& t) {
    std::pair<BoundReport, BoundReport> r;
    r.first = run_exact ? exstar_exact(g, t, eopt) : bound_exstar(g, t);
    r.second = run_exact ? deltastar_exact(g, t, eopt) : bound_deltastar(g, t);
    r.first.host = r.second.host = host_label;
    r.first.tree = r.second.tree = describe_tree(t);
    return r;
  };
  auto [star_ex, star_ds] = reports(star);

  std::vector<std::string> uncovered, contradictions;
  ordered_json jtrees = ordered_json::array();
  std::ostringstream text;
  for (const Tree& t : trees) {
    auto [ex, ds] = reports(t);
    bool covered = tree_stats(t).any_spider_tag();
    bool clash = intervals_disjoint(ex, star_ex) || intervals_disjoint(ds, star_ds);
    if (!covered) uncovered.push_back(ex.tree);
    if (clash) contradictions.push_back(ex.tree);
    ordered_json jt;
    jt["tree"] = ex.tree;
    jt["covered"] = covered;
    jt["exstar"] = bound_obj(ex);
    jt["deltastar"] = bound_obj(ds);
    jtrees.push_back(jt);
    text << ex.tree << (covered ? "" : " (uncovered)") << ": ex* [" << ex.lower << ","
         << ex.upper << (ex.exact ? "] exact" : "]") << "  delta* [" << ds.lower << ","
         << ds.upper << (ds.exact ? "] exact" : "]") << (clash ? "  CONTRADICTION" : "")
         << "\n";
  }

  if (want_json(cfg)) {
    ordered_json j;
    j["command"] = "sweep";
    j["host"] = host_label;
    j["k"] = cfg.k;
    j["exact"] = run_exact;
    j["star"] = star_ex.tree;
    j["trees"] = jtrees;
    j["uncovered"] = uncovered;
    j["contradictions"] = contradictions;
    j["conjecture_consistent"] = contradictions.empty();
    os << j.dump(2) << "\n";
  } else {
    os << "sweep k=" << cfg.k << " on " << host_label
       << (run_exact ? " (exact oracles)" : " (bounds only)") << "\n";
    os << text.str();
    os << "uncovered trees: " << uncovered.size() << "\n";
    os << (contradictions.empty() ? "conjecture consistent"
                                  : "CONTRADICTION CANDIDATES FOUND")
       << "\n";
  }
  return 0;
}

int cmd_pictogram(const RunConfig& cfg, std::ostream& os) {
  Tree t = parse_tree_spec(cfg.tree);
  TreeStats s = tree_stats(t);

  // Prefer the family matching the --tree constructor prefix, falling back
  // to the dispatch order when the tree does not carry that tag.
  std::optional<Family> fam;
  auto prefix_is = [&](const char* p) { return cfg.tree.rfind(p, 0) == 0; };
  if (prefix_is("path:") && s.is_path) fam = Family::path;
  else if (prefix_is("star:") && s.many_leaves_family) fam = Family::many_leaves;
  else if (prefix_is("spider3:") && s.three_spider_family) fam = Family::three_spider;
  else if (prefix_is("spider:") && s.even_spider_family) fam = Family::even_spider;
  else if (prefix_is("pendant:") && s.pendant_family) fam = Family::pendant_path;
  if (!fam) fam = pick_family(s);
  if (!fam) fail_precondition("pictogram: tree carries no family tag");
  FamilyPlan plan = family_plan(t, *fam);

  int w = t.k >= 10 ? 4 : 3;
  auto label = [&](int i) {
    std::string l = "e" + std::to_string(i);
    return std::string(w - l.size(), ' ') + l;
  };
  std::vector<std::string> rows;
  std::string head(w, ' ');
  for (int j = 1; j <= t.k; ++j) head += " " + label(j);
  rows.push_back(head);
  for (int i = 1; i <= t.k; ++i) {
    std::string row = label(i);
    for (int j = 1; j <= t.k; ++j) {
      char c = ' ';
      if (j == i) c = '.';
      if (j > i) c = plan.aux.seed_link(i, j) ? '#' : (plan.aux.full_link(i, j) ? '+' : '.');
      row += std::string(w, ' ') + c;
    }
    rows.push_back(row);
  }

  if (want_json(cfg)) {
    ordered_json j;
    j["command"] = "pictogram";
    j["tree"] = cfg.tree;
    j["family"] = family_name(*fam);
    j["rows"] = rows;
    os << j.dump(2) << "\n";
  } else {
    os << "tree " << cfg.tree << ", family " << family_name(*fam) << "\n";
    for (const std::string& r : rows) os << r << "\n";
  }
  return 0;
}

int run_command(const RunConfig& cfg) {
  std::ostringstream buf;
  int rc = 0;
  try {
    if (cfg.command == "verify") rc = cmd_verify(cfg, buf);
    else if (cfg.command == "exstar") rc = cmd_bound(cfg, Quantity::exstar, buf);
    else if (cfg.command == "delta-star") rc = cmd_bound(cfg, Quantity::deltastar, buf);
    else if (cfg.command == "sweep") rc = cmd_sweep(cfg, buf);
    else if (cfg.command == "pictogram") rc = cmd_pictogram(cfg, buf);
    else fail_precondition("unknown command: " + cfg.command);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (cfg.out.empty())
    std::cout << buf.str();
  else
    write_text_file(cfg.out, buf.str());
  return rc;
}

}  // namespace rbx
