#pragma once

#include <string>

#include "liebra/eil.hpp"
#include "liebra/orders.hpp"
#include "liebra/poisson.hpp"

namespace liebra {

// One edge per line: `r 1 2` (undirected, low endpoint first), `r 1>2`
// (oriented). Blank lines and `#` comments are ignored on input.
std::string edge_list_text(const ColoredGraph& g);
std::string edge_list_text(const OrientedGraph& g);

// Parses the text form; n = 0 infers the alphabet {1..max label}.
ColoredGraph parse_colored_text(const std::string& text, int n = 0);
OrientedGraph parse_oriented_text(const std::string& text, int n = 0);

// JSON mirror {"schema":1,"n":3,"edges":[{"u":1,"v":2,"c":"r"}]}; the
// oriented form adds "oriented":true and reads u as source, v as target.
std::string graph_json(const ColoredGraph& g);
std::string graph_json(const OrientedGraph& g);
ColoredGraph colored_from_json(const std::string& text);
OrientedGraph oriented_from_json(const std::string& text);

// File loaders; JSON is detected by a leading '{'.
ColoredGraph load_colored_graph(const std::string& path, int n = 0);
OrientedGraph load_oriented_graph(const std::string& path, int n = 0);

// Single-line signed term list, e.g. `+1*[[x1,x3],x2] -1*<x1,<x2,x3>>`.
std::string combo_text(const MonCombo& c);
std::string combo_text(const PoisCombo& c);

// One `coeff * arc-list` line per graph term; an edgeless graph prints `-`.
std::string arcs_text(const OrientedGraph& g);
std::string combo_text(const EilCombo& c);

// Index vector as a signed row, e.g. `0 +1 -1`.
std::string index_vector_text(const ColoredGraph& g);

// The single-move DAG on the basis trees in DOT form.
std::string opdag_dot(const OpReach& r);

}  // namespace liebra
