#include <doctest.h>

#include "magtop/document.hpp"
#include "magtop/errors.hpp"
#include "magtop/frames.hpp"
#include "support.hpp"

using namespace magtop;

TEST_CASE("space documents") {
    const Document m = parse_document(R"({"type":"matrix","labels":["a","b"],"dist":[["0","1/2"],[ "1/2", 0]]})");
    CHECK(m.metric()(0, 1) == Rational::parse("1/2"));
    const Document g = parse_document(R"({"type":"graph","vertices":["a","b","c"],"edges":[["a","b","1"],["b","c",2]]})");
    CHECK(g.metric()(0, 2) == Rational(3));
    CHECK_THROWS_AS((void)g.gluing(), ParseError);
}

TEST_CASE("malformed documents") {
    CHECK_THROWS_AS(parse_document("{"), ParseError);
    CHECK_THROWS_AS(parse_document("[]"), ParseError);
    CHECK_THROWS_AS(parse_document(R"({"type":"cube"})"), ParseError);
    CHECK_THROWS_AS(parse_document(R"({"type":"matrix","labels":["a"]})"), ParseError);
    CHECK_THROWS_AS(parse_document(R"({"type":"matrix","labels":["a","b"],"dist":[[0,1.5],[1.5,0]]})"), ParseError);
    CHECK_THROWS_AS(parse_document(R"({"type":"matrix","labels":["a","b"],"dist":[[0,"0.5"],["0.5",0]]})"), ParseError);
    CHECK_THROWS_AS(parse_document(R"({"type":"matrix","labels":["a","b"],"dist":[[0,1],[2,0]]})"), AsymmetryError);
    CHECK_THROWS_AS(parse_document(R"({"type":"graph","vertices":["a","b"],"edges":[["a","x","1"]]})"), LabelError);
    CHECK_THROWS_AS(load_document("/nonexistent/file.json"), ParseError);
}

TEST_CASE("gluing and twist documents") {
    const Document d = testing::fixture_document("sycamore_twist");
    CHECK(d.type == "twist");
    CHECK(d.alpha == std::vector<std::size_t>{1, 0});
    CHECK(d.gluing().glued.size() == 10);
    CHECK_THROWS_AS(
        parse_document(R"({"type":"gluing","G":{"type":"matrix","labels":["a"],"dist":[[0]]},
                           "H":{"type":"matrix","labels":["a"],"dist":[[0]]},"K_in_G":["z"],"K_in_H":["a"]})"),
        LabelError);
}

TEST_CASE("Hasse documents round-trip") {
    const Document facets = testing::fixture_document("wtdgraph_complex");
    const HasseGraph g = hasse_graph(facets.facets);
    const Document back = parse_document(hasse_document(g));
    CHECK(back.metric() == g.space());
    const MetricSpace X = testing::fixture("weighted");
    CHECK(parse_document(matrix_document(X)).metric() == X);
}
