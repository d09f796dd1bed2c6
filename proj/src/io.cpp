#include "rbx/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "rbx/error.hpp"

namespace rbx {

namespace {

// Strict whitespace-token scanner over one text blob.
struct Tokens {
  std::vector<std::string> tok;
  size_t at = 0;

  explicit Tokens(const std::string& text) {
    std::istringstream in(text);
    std::string t;
    while (in >> t) tok.push_back(t);
  }
  bool done() const { return at == tok.size(); }
  const std::string& next(const char* what) {
    if (done()) fail_parse(std::string("unexpected end of input, expected ") + what);
    return tok[at++];
  }
  int next_int(const char* what, int lo, int hi) {
    const std::string& s = next(what);
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
      fail_parse(std::string("bad integer for ") + what + ": '" + s + "'");
    if (v < lo || v > hi)
      fail_parse(std::string(what) + " out of range: " + s);
    return v;
  }
  void expect(const char* word) {
    const std::string& s = next(word);
    if (s != word) fail_parse(std::string("expected '") + word + "', got '" + s + "'");
  }
  void finish() {
    if (!done()) fail_parse("trailing input after '" + tok[at] + "'");
  }
};

}  // namespace

std::string graph_to_text(const Graph& g) {
  std::ostringstream out;
  out << "p graph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  if (g.is_cube()) out << "h cube " << *g.cube_dim() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph graph_from_text(const std::string& text) {
  Tokens in(text);
  in.expect("p");
  in.expect("graph");
  int n = in.next_int("vertex count", 1, Graph::kBitRowLimit);
  int m = in.next_int("edge count", 0, 1 << 20);
  std::optional<int> dim;
  size_t mark = in.at;
  if (!in.done() && in.tok[in.at] == "h") {
    in.expect("h");
    in.expect("cube");
    dim = in.next_int("cube dimension", 1, 20);
  } else {
    in.at = mark;
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    in.expect("e");
    int u = in.next_int("edge endpoint", 0, n - 1);
    int v = in.next_int("edge endpoint", 0, n - 1);
    edges.push_back({u, v});
  }
  in.finish();
  if (!dim) return Graph::from_edges(n, edges);
  // Cube tag: the listed edges must be exactly the canonical hypercube
  // emission, in order, so ids agree between file and graph.
  Graph q = Graph::hypercube(*dim);
  if (q.vertex_count() != n || q.edge_count() != m)
    fail_parse("cube header does not match vertex/edge counts");
  for (int i = 0; i < m; ++i) {
    auto [u, v] = edges[i];
    if (std::min(u, v) != q.edge(i).u || std::max(u, v) != q.edge(i).v)
      fail_parse("cube-tagged edge list is not the canonical cube edge order");
  }
  return q;
}

std::string coloring_to_text(const EdgeColoring& phi) {
  std::ostringstream out;
  out << "p coloring " << phi.color.size() << ' ' << phi.palette << '\n';
  for (size_t i = 0; i < phi.color.size(); ++i)
    if (phi.color[i] >= 0) out << "c " << i << ' ' << phi.color[i] << '\n';
  return out.str();
}

EdgeColoring coloring_from_text(const std::string& text) {
  Tokens in(text);
  in.expect("p");
  in.expect("coloring");
  int m = in.next_int("edge count", 0, 1 << 20);
  int palette = in.next_int("palette", 0, 1 << 20);
  EdgeColoring phi;
  phi.palette = palette;
  phi.color.assign(m, -1);
  while (!in.done()) {
    in.expect("c");
    int id = in.next_int("edge id", 0, m - 1);
    int c = in.next_int("color", 0, palette - 1);
    if (phi.color[id] >= 0) fail_parse("duplicate color line for edge " + std::to_string(id));
    phi.color[id] = c;
  }
  return phi;
}

std::string tree_to_text(const Tree& t) {
  std::ostringstream out;
  out << "t " << t.k;
  for (int v = 1; v <= t.k; ++v) out << ' ' << t.parent[v];
  out << '\n';
  return out.str();
}

Tree tree_from_text(const std::string& text) {
  Tokens in(text);
  in.expect("t");
  int k = in.next_int("edge count", 1, 62);
  std::vector<int> parent{-1};
  for (int v = 1; v <= k; ++v) parent.push_back(in.next_int("parent", 0, k));
  in.finish();
  return make_tree(parent);
}

namespace {

int spec_int(const std::string& s, const char* what, int lo, int hi) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    fail_parse(std::string("bad integer in ") + what + " spec: '" + s + "'");
  if (v < lo || v > hi) fail_parse(std::string(what) + " out of range: " + s);
  return v;
}

}  // namespace

Graph parse_host_spec(const std::string& spec) {
  if (spec.rfind("qn:", 0) == 0) return Graph::hypercube(spec_int(spec.substr(3), "qn", 1, 20));
  if (spec.rfind("kn:", 0) == 0) return Graph::complete_graph(spec_int(spec.substr(3), "kn", 2, 64));
  return graph_from_text(read_text_file(spec));
}

Tree parse_tree_spec(const std::string& spec) {
  auto tail = [&](size_t n) { return spec.substr(n); };
  if (spec.rfind("path:", 0) == 0) return tree_path(spec_int(tail(5), "path", 1, 62));
  if (spec.rfind("star:", 0) == 0) return tree_star(spec_int(tail(5), "star", 1, 62));
  if (spec.rfind("spider3:", 0) == 0) return tree_spider3(spec_int(tail(8), "spider3", 1, 20));
  if (spec.rfind("spider:", 0) == 0) {
    std::vector<int> legs;
    std::string rest = tail(7);
    size_t pos = 0;
    while (pos <= rest.size()) {
      size_t comma = rest.find(',', pos);
      std::string part = rest.substr(pos, comma == std::string::npos ? comma : comma - pos);
      legs.push_back(spec_int(part, "spider leg", 1, 62));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return tree_spider(legs);
  }
  if (spec.rfind("pendant:", 0) == 0) {
    std::string rest = tail(8);
    size_t comma = rest.rfind(',');
    if (comma == std::string::npos) fail_parse("pendant spec needs <treefile>,<m>");
    Tree base = tree_from_text(read_text_file(rest.substr(0, comma)));
    return tree_pendant(base, spec_int(rest.substr(comma + 1), "pendant length", 1, 62));
  }
  return tree_from_text(read_text_file(spec));
}

std::string quantity_name(Quantity q) {
  return q == Quantity::exstar ? "ex*" : "delta*";
}

std::string bound_report_json(const BoundReport& rep) {
  nlohmann::ordered_json j;
  j["quantity"] = quantity_name(rep.quantity);
  j["host"] = rep.host;
  j["tree"] = rep.tree;
  j["lower"] = rep.lower;
  j["upper"] = rep.upper;
  j["exact"] = rep.exact;
  if (rep.certificate) {
    j["certificate"] = {{"edges", rep.certificate->edges},
                        {"coloring", rep.certificate->colors},
                        {"checked", rep.certificate->checked}};
  } else {
    j["certificate"] = nullptr;
  }
  j["provenance"] = rep.provenance;
  return j.dump(2) + "\n";
}

uint64_t fnv1a64(const std::string& data) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail_parse("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail_parse("cannot write file: " + path);
  out << content;
}

}  // namespace rbx
