#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "cycount/graph.hpp"
#include "support.hpp"

using namespace cycount;
using namespace cycount::testing;

TEST_CASE("build collapses parallel edges and sums multiplicities") {
    Graph g = Graph::build(3, false,
                           {{0, 1, 2.0, 1}, {1, 0, 5.0, 3}, {1, 2, 1.0, 1}});
    CHECK(g.n_vertices() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.weight(0, 1) == 2.0);  // first weight wins
    CHECK(g.weight(1, 0) == 2.0);
    CHECK(g.multiplicity(0, 1) == 4);
    CHECK(g.out_degree(1) == 2);
    CHECK(g.has_edge(2, 1));
    CHECK(!g.has_edge(0, 2));
    CHECK(g.weight(0, 2) == 0.0);
}

TEST_CASE("directed adjacency keeps orientation and in() transposes out()") {
    Graph g = make_graph(3, true, {{0, 1}, {1, 2}, {2, 0}, {0, 2}});
    CHECK(g.has_edge(0, 1));
    CHECK(!g.has_edge(1, 0));
    CHECK(g.out_degree(0) == 2);
    CHECK(g.in_degree(0) == 1);
    CHECK(g.in(2).size() == 2);
    CHECK(g.max_degree_undirected() == 2);  // 0->2 and 2->0 are one undirected edge
}

TEST_CASE("weight classification") {
    CHECK(make_graph(2, false, {{0, 1}}).all_unit_weights());
    CHECK(make_wgraph(2, false, {{0, 1, -1.0}}).integral_weights());
    CHECK(!make_wgraph(2, false, {{0, 1, -1.0}}).all_unit_weights());
    CHECK(!make_wgraph(2, false, {{0, 1, 0.5}}).integral_weights());
}

TEST_CASE("edge list parsing maps names in order of first appearance") {
    std::istringstream in(
        "# comment line\n"
        "alpha beta\n"
        "\n"
        "beta gamma 2.5\n"
        "gamma alpha\n");
    LoadOptions opts;
    opts.directed = true;
    Graph g = parse_graph(in, opts);
    CHECK(g.n_vertices() == 3);
    CHECK(g.vertex_by_name("alpha") == 0);
    CHECK(g.vertex_by_name("gamma") == 2);
    CHECK(g.vertex_by_name("delta") == -1);
    CHECK(g.all_unit_weights());  // third column ignored without use_weights

    std::istringstream in2("a b 2.5\n");
    opts.use_weights = true;
    Graph gw = parse_graph(in2, opts);
    CHECK(gw.weight(0, 1) == 2.5);
    CHECK(!gw.integral_weights());
}

TEST_CASE("konect format: % headers, third column as multiplicity") {
    std::istringstream in(
        "% sym unweighted\n"
        "1 2 3\n"
        "2 3 1\n");
    LoadOptions opts;
    opts.format = FileFormat::Konect;
    Graph g = parse_graph(in, opts);
    CHECK(g.n_vertices() == 3);
    CHECK(g.multiplicity(0, 1) == 3);
    CHECK(g.all_unit_weights());
}

TEST_CASE("malformed lines report origin and line number") {
    std::istringstream in("a\n");
    try {
        parse_graph(in, {}, "bad.tsv");
        FAIL("expected a parse error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("bad.tsv:1") != std::string::npos);
    }
}

TEST_CASE("edge list round trip keeps names, weights and structure") {
    std::istringstream in("n0 n1 2\nn1 n2 3\nn2 n0 1\n");
    LoadOptions opts;
    opts.directed = true;
    opts.use_weights = true;
    Graph g = parse_graph(in, opts);

    std::ostringstream dumped;
    write_edge_list(g, dumped);
    std::istringstream back(dumped.str());
    Graph h = parse_graph(back, opts);

    CHECK(h.n_vertices() == g.n_vertices());
    CHECK(h.edge_count() == g.edge_count());
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v) CHECK(h.weight(h.vertex_by_name(g.name(u)),
                                                   h.vertex_by_name(g.name(v))) ==
                                          g.weight(u, v));
}

TEST_CASE("preprocess strips vertices no cycle can visit") {
    // 0 -> 1 -> 2 -> 0 plus a pendant path 2 -> 3 -> 4
    Graph g = make_graph(5, true, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}});
    PreprocessResult r = preprocess(g);
    CHECK(r.graph.n_vertices() == 3);
    CHECK(r.kept.size() == 3);
    for (int v : r.kept) CHECK(v <= 2);

    // undirected: only degree-0 vertices go (leaves still carry 2-cycles)
    Graph u = make_graph(4, false, {{0, 1}, {1, 2}});
    PreprocessResult ru = preprocess(u);
    CHECK(ru.graph.n_vertices() == 3);

    // a DAG empties entirely
    Graph dag = make_graph(3, true, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(preprocess(dag).graph.n_vertices() == 0);
}

TEST_CASE("undirected_version merges orientations once") {
    Graph g = make_graph(3, true, {{0, 1}, {1, 0}, {1, 2}});
    Graph u = undirected_version(g);
    CHECK(!u.directed());
    CHECK(u.edge_count() == 2);
    CHECK(u.has_edge(2, 1));
}

TEST_CASE("induced_dense extracts the adjacency block with loops on the diagonal") {
    Graph g = make_wgraph(4, true, {{0, 1, 2.0}, {1, 3, 4.0}, {3, 0, 1.0}, {1, 1, 7.0}});
    std::vector<int> verts{0, 1, 3};
    DenseMatrix d = induced_dense(g, verts);
    CHECK(d.m == 3);
    CHECK(d.at(0, 1) == 2.0);
    CHECK(d.at(1, 2) == 4.0);
    CHECK(d.at(2, 0) == 1.0);
    CHECK(d.at(1, 1) == 7.0);
    CHECK(d.at(0, 2) == 0.0);
    CHECK(d.integral());

    std::vector<int> unsorted{1, 0};
    CHECK_THROWS_AS(induced_dense(g, unsorted), std::invalid_argument);
}

TEST_CASE("labels attach and render") {
    Graph g = make_graph(3, false, {{0, 1}, {1, 2}});
    CHECK(!g.labeled());
    g.attach_labels({0, 1, 0}, {"x", "y"});
    CHECK(g.labeled());
    CHECK(g.label(2) == 0);
    CHECK(g.alphabet()[1] == "y");
}
