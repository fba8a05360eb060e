#include "doctest.h"
#include "gog/parse.hpp"
#include "testutil.hpp"

using namespace gog;

namespace {
std::string data_file(const std::string& name) { return std::string(GOG_DATA_DIR) + "/" + name; }
}

TEST_CASE("three-tori file parses to four vertices and three edges") {
    GraphOfGroups g = load_graph_file(data_file("three_tori.gog"));
    CHECK(g.vertices.size() == 4);
    CHECK(g.edges.size() == 3);
    CHECK(g.name == "three_tori");
    CHECK(g.vertices[0].vclass == VertexClass::Elementary);
    CHECK(g.vertices[1].vclass == VertexClass::Orbifold);
    CHECK(g.vertices[1].signature->genus == 1);
    CHECK(g.vertices[1].boundary_words.size() == 1);
    CHECK(g.connected());
}

TEST_CASE("single vertex with no edges is a valid trivial splitting") {
    GraphOfGroups g = load_graph_file(data_file("single_vertex.gog"));
    CHECK(g.vertices.size() == 1);
    CHECK(g.edges.empty());
    CHECK(validate(g).all_pass_or_unknown());
}

TEST_CASE("dangling vertex reference is a line-anchored error") {
    try {
        load_graph_file(data_file("bad_dangling.gog"));
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(std::string(e.what()).find("v9") != std::string::npos);
    }
}

TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_AS(parse_graph("graph g\nvertex v class=weird group=free(1)\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("graph g\nvertex v class=rigid group=banana(1)\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("graph g\nvertex v class=rigid group=free(1;a)\n"
                                "vertex v class=rigid group=free(1;b)\n"),
                    ParseError);
    // Edge id colliding with a generator name would shadow the stable letter.
    CHECK_THROWS_AS(parse_graph("graph g\nvertex v class=rigid group=free(1;a)\n"
                                "edge a from=v to=v group=free(1;x) emb_from=a emb_to=a\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_graph("graph g\nvertex v class=orbifold group=free(2;a,b)\n"),
                    ParseError);  // orbifold needs a signature
    CHECK_THROWS_AS(parse_graph(""), ParseError);
    // Words must use generators of the right vertex.
    CHECK_THROWS_AS(parse_graph("graph g\nvertex v class=rigid group=free(1;a)\n"
                                "vertex w class=rigid group=free(1;b)\n"
                                "edge e from=v to=w group=free(1;x) emb_from=b emb_to=b\n"),
                    ParseError);
}

TEST_CASE("serialize/parse round trip on the corpus") {
    for (const char* name :
         {"three_tori.gog", "klein_amalgam.gog", "bs23.gog", "rigid_elem_segment.gog",
          "rigid_elem_rigid.gog", "pants_star.gog", "pants_n0.gog", "free_product.gog",
          "single_vertex.gog"}) {
        GraphOfGroups g = load_graph_file(data_file(name));
        std::string s1 = serialize_graph(g);
        GraphOfGroups g2 = parse_graph(s1);
        CHECK(serialize_graph(g2) == s1);
        CHECK(g2.vertices.size() == g.vertices.size());
        CHECK(g2.edges.size() == g.edges.size());
    }
}

TEST_CASE("serialize/parse round trip on generated graphs") {
    std::mt19937 rng(123);
    for (int i = 0; i < 20; ++i) {
        std::string text = testutil::random_exact_graph(rng, i);
        GraphOfGroups g = parse_graph(text);
        std::string s1 = serialize_graph(g);
        CHECK(serialize_graph(parse_graph(s1)) == s1);
    }
}

TEST_CASE("validation verdicts on the corpus") {
    CHECK(validate(load_graph_file(data_file("three_tori.gog"))).all_pass_or_unknown());

    ValidationReport torus = validate(load_graph_file(data_file("circle_mapping_torus.gog")));
    CHECK(torus.status_of("mapping-torus") == Tri::No);
    CHECK(!torus.all_pass_or_unknown());

    ValidationReport nonmin = validate(load_graph_file(data_file("segment_nonminimal.gog")));
    CHECK(nonmin.status_of("minimality") == Tri::No);

    // A declared center flag contradicting the oracle fails validation.
    GraphOfGroups bad = parse_graph(
        "graph g\nvertex v class=elementary group=free(2;a,b) center=infinite\n");
    CHECK(validate(bad).status_of("center-flags") == Tri::No);

    // Orbifold boundary product must equal the surface relator.
    GraphOfGroups orb = parse_graph(
        "graph g\nvertex v class=orbifold group=free(2;a,b) signature=1,o,1 boundary=a b\n");
    CHECK(validate(orb).status_of("orbifold-signatures") == Tri::No);

    // chi >= 0 signatures are rejected.
    GraphOfGroups disk = parse_graph(
        "graph g\nvertex v class=orbifold group=free(1;a) signature=0,o,2 boundary=a;a^-1\n");
    CHECK(validate(disk).status_of("orbifold-signatures") == Tri::No);
}

TEST_CASE("embedding checks distinguish finite and infinite order images") {
    // x -> b has infinite order: fine. An order obstruction needs torsion.
    GraphOfGroups bad = parse_graph(
        "graph g\n"
        "vertex v class=elementary group=abelian(0,2;a,b) center=infinite\n"
        "vertex w class=rigid group=free(2;p,q)\n"
        "edge e from=v to=w group=free(1;x) emb_from=b emb_to=p\n");
    CHECK(validate(bad).status_of("embeddings") == Tri::No);  // b has order 2
}

TEST_CASE("classify_edges partitions JSJ-shaped graphs") {
    GraphOfGroups g = load_graph_file(data_file("three_tori.gog"));
    EdgePartition p = classify_edges(g);
    CHECK(p.e2.size() == 3);
    CHECK(p.e3.empty());
    CHECK(p.v1_inf.size() == 1);
    CHECK(p.e_inf.size() == 3);
    CHECK(p.e2.size() + p.e3.size() == g.edges.size());

    GraphOfGroups seg = load_graph_file(data_file("rigid_elem_segment.gog"));
    EdgePartition ps = classify_edges(seg);
    CHECK(ps.e3.size() == 1);
    CHECK(ps.e2.empty());

    // Orbifold-rigid edge: not JSJ-shaped.
    GraphOfGroups bad = parse_graph(
        "graph g\n"
        "vertex o class=orbifold group=free(2;a,b) signature=1,o,1 boundary=a b a^-1 b^-1\n"
        "vertex r class=rigid group=free(2;p,q)\n"
        "edge e from=o to=r group=free(1;x) emb_from=a b a^-1 b^-1 emb_to=p q\n");
    CHECK_THROWS_AS(classify_edges(bad), DomainError);
}

TEST_CASE("oriented edge ends") {
    GraphOfGroups g = load_graph_file(data_file("bs23.gog"));
    // A loop contributes both orientations at its vertex.
    auto ends = g.ends_at(0);
    REQUIRE(ends.size() == 2);
    CHECK(ends[0].at_to == false);
    CHECK(ends[1].at_to == true);
    CHECK(g.end_vertex(ends[0]) == g.end_vertex(ends[1]));
    CHECK(g.end_images({0, false})[0] == parse_word("a^2", g.symbols, nullptr));
    CHECK(g.end_images({0, true})[0] == parse_word("a^3", g.symbols, nullptr));
}
