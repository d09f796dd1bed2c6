#pragma once

// Text formats and spec strings.
//
//   graph:    p graph <n> <m>        coloring:  p coloring <m> <palette>
//             [h cube <dim>]                    c <edge_id> <color> ...
//             e <u> <v>  (id order)
//   tree:     t <k> <parent_1> ... <parent_k>
//
// Parsing is strict: wrong counts, ranges, duplicate ids, or trailing junk
// raise ErrorKind::parse. Host specs: qn:<n>, kn:<n>, or a graph file path.
// Tree specs: path:<k>, star:<k>, spider:<a,b,...>, spider3:<t>,
// pendant:<treefile>,<m>, or a tree file path.

#include <string>

#include "rbx/extremal.hpp"

namespace rbx {

std::string graph_to_text(const Graph& g);
Graph graph_from_text(const std::string& text);

std::string coloring_to_text(const EdgeColoring& phi);
EdgeColoring coloring_from_text(const std::string& text);

std::string tree_to_text(const Tree& t);
Tree tree_from_text(const std::string& text);

Graph parse_host_spec(const std::string& spec);
Tree parse_tree_spec(const std::string& spec);

// Bound reports as JSON with a fixed key order; byte-stable for fixed input.
std::string bound_report_json(const BoundReport& rep);
std::string quantity_name(Quantity q);  // "ex*" / "delta*"

// Content hash used to name captured counterexample files.
uint64_t fnv1a64(const std::string& data);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace rbx
