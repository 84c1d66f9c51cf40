// Tests for the serialization formats: edge-list text, JSON, combination
// text, index-vector text, and the move-DAG DOT export.
//
// Coverage: round trips both ways, explicit alphabet handling, malformed
// inputs with line numbers, orientation mismatches, file sniffing.

#include "liebra/formats.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "liebra/orders.hpp"

using namespace liebra;

namespace {

ColoredGraph sample_colored() {
    ColoredGraph g = ColoredGraph::on_alphabet(3);
    g.add_edge(1, 2, Color::Red);
    g.add_edge(2, 3, Color::Blue);
    g.normalize();
    return g;
}

OrientedGraph sample_oriented() {
    OrientedGraph g = OrientedGraph::on_alphabet(3);
    g.add_edge(1, 2, Color::Red);
    g.add_edge(3, 2, Color::Blue);
    g.normalize();
    return g;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path = (std::filesystem::temp_directory_path() /
                ("liebra_fmt_" + std::to_string(++counter) + ".graph"))
                   .string();
        std::ofstream out(path, std::ios::binary);
        out << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("edge list text round-trips undirected graphs") {
    const ColoredGraph g = sample_colored();
    CHECK(edge_list_text(g) == "r 1 2\nb 2 3\n");
    CHECK(parse_colored_text(edge_list_text(g)) == g);
    // Comments, blank lines, and flexible spacing are accepted.
    CHECK(parse_colored_text("# header\n\n  r  1   2\nb 2 3\n") == g);
}

TEST_CASE("edge list text round-trips oriented graphs") {
    const OrientedGraph g = sample_oriented();
    CHECK(edge_list_text(g) == "r 1>2\nb 3>2\n");
    CHECK(parse_oriented_text(edge_list_text(g)) == g);
    CHECK(parse_oriented_text("r 1 > 2\nb 3>2") == g);
}

TEST_CASE("explicit alphabet extends isolated vertices") {
    const ColoredGraph g = parse_colored_text("r 1 2\n", 4);
    CHECK(g.n() == 4);
    CHECK(g.vertices == std::vector<int>{1, 2, 3, 4});
    CHECK_THROWS_WITH_AS(parse_colored_text("# nothing\n"),
                         "empty graph needs an explicit alphabet size", DomainError);
    CHECK(parse_colored_text("", 2).n() == 2);
}

TEST_CASE("edge list errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_colored_text("r 1 2\nq 2 3\n"),
                         "graph parse error at line 2: expected color 'r' or 'b'", DomainError);
    CHECK_THROWS_WITH_AS(parse_colored_text("r 1\n"),
                         "graph parse error at line 1: expected a vertex label", DomainError);
    CHECK_THROWS_WITH_AS(parse_colored_text("r 1 2 3\n"),
                         "graph parse error at line 1: trailing input", DomainError);
    CHECK_THROWS_WITH_AS(parse_colored_text("r 0 2\n"),
                         "graph parse error at line 1: vertex label out of range 1..64",
                         DomainError);
    CHECK_THROWS_AS(parse_colored_text("r 1 65\n"), DomainError);
}

TEST_CASE("orientation markers must match the expected kind") {
    CHECK_THROWS_WITH_AS(parse_colored_text("r 1>2\n"), "oriented edge in an undirected graph",
                         DomainError);
    CHECK_THROWS_WITH_AS(parse_oriented_text("r 1 2\n"), "undirected edge in an oriented graph",
                         DomainError);
}

TEST_CASE("JSON round-trips both graph kinds") {
    const ColoredGraph g = sample_colored();
    CHECK(colored_from_json(graph_json(g)) == g);
    const OrientedGraph o = sample_oriented();
    CHECK(oriented_from_json(graph_json(o)) == o);
    // Hand-written JSON with an explicit schema.
    CHECK(colored_from_json(R"({"schema":1,"n":2,"edges":[{"u":1,"v":2,"c":"b"}]})").n() == 2);
}

TEST_CASE("JSON rejects bad documents") {
    CHECK_THROWS_AS(colored_from_json("{"), DomainError);
    CHECK_THROWS_WITH_AS(colored_from_json("{}"), "graph JSON needs \"n\" and \"edges\"",
                         DomainError);
    CHECK_THROWS_WITH_AS(colored_from_json(R"({"schema":2,"n":1,"edges":[]})"),
                         "unsupported schema version", DomainError);
    CHECK_THROWS_WITH_AS(colored_from_json(graph_json(sample_oriented())),
                         "expected an undirected graph", DomainError);
    CHECK_THROWS_WITH_AS(oriented_from_json(graph_json(sample_colored())),
                         "expected an oriented graph", DomainError);
}

TEST_CASE("file loading sniffs JSON versus edge list") {
    const ColoredGraph g = sample_colored();
    {
        TempFile f(graph_json(g));
        CHECK(load_colored_graph(f.path) == g);
    }
    {
        TempFile f(edge_list_text(g));
        CHECK(load_colored_graph(f.path) == g);
    }
    {
        TempFile f(edge_list_text(sample_oriented()));
        CHECK(load_oriented_graph(f.path) == sample_oriented());
    }
    CHECK_THROWS_AS(load_colored_graph("/nonexistent/path.graph"), DomainError);
}

TEST_CASE("combination text forms") {
    MonCombo mc;
    mc.add(parse_monomial("[[x1,x3],x2]"), 1);
    mc.add(parse_monomial("<x1,<x2,x3>>"), -1);
    // Terms follow the canonical key order ('<' sorts before '[').
    CHECK(combo_text(mc) == "-1*<x1,<x2,x3>> +1*[[x1,x3],x2]");
    CHECK(combo_text(MonCombo{}) == "0");

    PoisCombo pc;
    pc.add(parse_poisson("[x1,x2]*x3"), 2);
    CHECK(combo_text(pc) == "+2*[x1,x2]*x3");

    EilCombo ec;
    OrientedGraph a = OrientedGraph::on_alphabet(3);
    a.add_edge(1, 2, Color::Red);
    a.add_edge(3, 1, Color::Blue);
    a.normalize();
    ec.add(a, 1);
    CHECK(combo_text(ec) == "+1 * r1>2 b3>1\n");
    CHECK(combo_text(EilCombo{}) == "0\n");
    CHECK(arcs_text(OrientedGraph::on_alphabet(2)) == "-");
}

TEST_CASE("index vector text uses explicit signs") {
    ColoredGraph g = ColoredGraph::on_alphabet(3);
    g.add_edge(1, 2, Color::Blue);
    g.add_edge(2, 3, Color::Red);
    g.normalize();
    // Arcs 2>1 and 2>3: blue head at 1, root at 2, red head at 3.
    CHECK(index_vector_text(g) == "-1 0 +1");
}

TEST_CASE("move DAG exports to DOT") {
    const std::string dot = opdag_dot(op_reachability(2));
    CHECK(dot.find("digraph opdag") != std::string::npos);
    CHECK(dot.find("t0") != std::string::npos);
    CHECK(dot.find("rankdir=BT") != std::string::npos);
}
