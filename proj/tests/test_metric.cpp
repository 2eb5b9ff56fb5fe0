#include <doctest.h>

#include <random>

#include "magtop/errors.hpp"
#include "magtop/gluing.hpp"
#include "magtop/metric_space.hpp"
#include "magtop/random_space.hpp"
#include "support.hpp"

using namespace magtop;
using testing::fixture;
using testing::unit_graph;

TEST_CASE("rational parsing and printing") {
    CHECK(Rational::parse("3/6").str() == "1/2");
    CHECK(Rational::parse("-4").str() == "-4");
    CHECK(Rational::parse("4/2").is_integer());
    CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK(Rational::parse("7/3").ceil() == 3);
    CHECK(Rational(1) / Rational(3) + Rational(1) / Rational(6) == Rational::parse("1/2"));
    CHECK(Rational::parse("2/3") < Rational(1));
}

TEST_CASE("distance matrix validation") {
    auto two = MetricSpace::from_distance_matrix({"a", "b"}, {{0, 1}, {1, 0}});
    CHECK(two(0, 1) == Rational(1));
    CHECK_THROWS_AS(MetricSpace::from_distance_matrix({"a", "b"}, {{0, 1}, {2, 0}}), AsymmetryError);
    try {
        MetricSpace::from_distance_matrix({"a", "b", "c"}, {{0, 1, 3}, {1, 0, 1}, {3, 1, 0}});
        FAIL("triangle violation not detected");
    } catch (const TriangleViolation& e) {
        CHECK(e.witness == std::array<std::size_t, 3>{0, 1, 2});
    }
    CHECK_THROWS_AS(MetricSpace::from_distance_matrix({"a", "b"}, {{0, 0}, {0, 0}}), ZeroOffDiagonal);
    CHECK_THROWS_AS(MetricSpace::from_distance_matrix({"a", "b"}, {{0, -1}, {-1, 0}}), NegativeDistance);
    CHECK_THROWS_AS(MetricSpace::from_distance_matrix({}, {}), MetricError);
}

TEST_CASE("graph metrics") {
    const MetricSpace C4 = fixture("C4");
    CHECK(C4(C4.index_of("a"), C4.index_of("b")) == Rational(2));
    CHECK(C4(C4.index_of("a"), C4.index_of("c")) == Rational(1));
    const MetricSpace P2 = fixture("P2");
    CHECK(P2(P2.index_of("a"), P2.index_of("b")) == Rational(2));
    CHECK_THROWS_AS(unit_graph({"a", "b", "c"}, {{"a", "b"}}), DisconnectedGraph);
    CHECK_THROWS_AS(MetricSpace::from_weighted_graph({"a", "b"}, {{"a", "b", Rational(0)}}), NonpositiveWeight);
    CHECK_THROWS_AS(unit_graph({"a", "b"}, {{"a", "z"}}), LabelError);
}

// Shortest simple path by exhaustive search over permutations of intermediate vertices.
static Rational brute_shortest(const std::vector<std::vector<std::optional<Rational>>>& w, std::size_t s, std::size_t t) {
    std::optional<Rational> best;
    std::vector<bool> used(w.size());
    std::function<void(std::size_t, Rational)> go = [&](std::size_t v, Rational d) {
        if (v == t) {
            if (!best || d < *best) best = d;
            return;
        }
        used[v] = true;
        for (std::size_t u = 0; u < w.size(); ++u) {
            if (!used[u] && w[v][u]) go(u, d + *w[v][u]);
        }
        used[v] = false;
    };
    go(s, Rational(0));
    return *best;
}

TEST_CASE("graph metric agrees with an all-simple-paths oracle") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 3 + trial % 5;
        std::vector<std::string> names;
        for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
        std::vector<std::vector<std::optional<Rational>>> w(n, std::vector<std::optional<Rational>>(n));
        std::vector<WeightedEdge> edges;
        std::uniform_int_distribution<long> weight(1, 5);
        std::bernoulli_distribution extra(0.4);
        for (std::size_t i = 1; i < n; ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                if (j + 1 == i || extra(rng)) {
                    const Rational x = Rational(weight(rng)) / Rational(2);
                    w[i][j] = w[j][i] = x;
                    edges.push_back({names[i], names[j], x});
                }
            }
        }
        const MetricSpace X = MetricSpace::from_weighted_graph(names, edges);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j) CHECK(X(static_cast<Point>(i), static_cast<Point>(j)) == brute_shortest(w, i, j));
            }
        }
    }
}

TEST_CASE("products") {
    const MetricSpace K2 = fixture("K2");
    const MetricSpace sq = product(K2, K2);
    const MetricSpace C4 = fixture("C4");
    CHECK(sq.size() == 4);
    // K2 x K2 is C4: every point has two neighbours at 1 and one point at 2.
    for (Point x = 0; x < 4; ++x) {
        int ones = 0, twos = 0;
        for (Point y = 0; y < 4; ++y) {
            ones += sq(x, y) == Rational(1);
            twos += sq(x, y) == Rational(2);
        }
        CHECK(ones == 2);
        CHECK(twos == 1);
    }
    const MetricSpace line = product(K2, fixture("P2"));
    CHECK(line.size() == 6);
    CHECK(line.diameter() == Rational(3));
    const MetricSpace same = product(C4, fixture("single_point"));
    for (Point x = 0; x < 4; ++x) {
        for (Point y = 0; y < 4; ++y) CHECK(same(x, y) == C4(x, y));
    }
}

TEST_CASE("intervals") {
    const MetricSpace C4 = fixture("C4");
    const Point a = C4.index_of("a"), b = C4.index_of("b");
    const IntervalPoset I = interval(C4, a, b, IntervalKind::closed);
    CHECK(I.carrier.size() == 4);
    CHECK_FALSE(I.is_totally_ordered());
    const IntervalPoset open = interval(C4, a, b, IntervalKind::open);
    CHECK(open.carrier.size() == 2);
    const MetricSpace K3 = fixture("K3");
    CHECK(interval(K3, 0, 1, IntervalKind::open).empty());
    CHECK(interval(K3, 2, 2, IntervalKind::closed).carrier == std::vector<Point>{2});
}

TEST_CASE("sequence length and smoothness") {
    const MetricSpace K3 = fixture("K3");
    const Point a = K3.index_of("a"), b = K3.index_of("b"), c = K3.index_of("c");
    const PointSequence acb{a, c, b};
    CHECK(seq_length(K3, acb) == Rational(2));
    CHECK_FALSE(is_smooth(K3, acb, 1));
    CHECK_FALSE(is_smooth(K3, acb, 0));
    CHECK(seq_length(K3, PointSequence{a}) == Rational(0));
    const MetricSpace P2 = fixture("P2");
    const PointSequence path{P2.index_of("a"), P2.index_of("c"), P2.index_of("b")};
    CHECK(is_smooth(P2, path, 1));
    const MetricSpace C4 = fixture("C4");
    const PointSequence acbd{C4.index_of("a"), C4.index_of("c"), C4.index_of("b"), C4.index_of("d")};
    CHECK(seq_length(C4, acbd) == Rational(3));
}

TEST_CASE("four cuts") {
    const FourCutScan c4 = four_cuts(fixture("C4"));
    REQUIRE(c4.m_x);
    CHECK(*c4.m_x == Rational(3));
    CHECK(c4.below(Rational(2)));
    CHECK_FALSE(c4.below(Rational(3)));
    const MetricSpace C4 = fixture("C4");
    const std::array<Point, 4> acbd{C4.index_of("a"), C4.index_of("c"), C4.index_of("b"), C4.index_of("d")};
    CHECK(std::find(c4.cuts.begin(), c4.cuts.end(), acbd) != c4.cuts.end());
    CHECK_FALSE(four_cuts(fixture("S3")).m_x);
    CHECK_FALSE(four_cuts(fixture("P3")).m_x);
    CHECK_FALSE(four_cuts(fixture("two_point")).m_x);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 5; ++i) CHECK_FALSE(four_cuts(random_tree(6, rng)).m_x);
}

TEST_CASE("pawful graphs") {
    CHECK(is_pawful(fixture("K3")));
    CHECK(is_pawful(fixture("K4")));
    // P2 ends are at distance 2 with nothing adjacent to all three points.
    CHECK_FALSE(is_pawful(fixture("P3")));
}

TEST_CASE("gluing") {
    const auto doc = testing::fixture_document("gluing_paths");
    const GluingSpec g = doc.gluing();
    CHECK(g.glued.size() == 3);
    CHECK(g.glued(g.glued.index_of("a"), g.glued.index_of("c")) == Rational(2));
    CHECK(g.neutral.empty());
    CHECK(g.biased.size() == 1);

    auto neutral_labels = [](const GluingSpec& s) {
        std::vector<std::string> out;
        for (Point h : s.neutral) out.push_back(s.H.label(h));
        return out;
    };
    // three neutral points, as in the figure caption; h6 projects to q
    const GluingSpec syc = testing::fixture_document("sycamore_twist").gluing();
    CHECK(neutral_labels(syc) == std::vector<std::string>{"h3", "h4", "h5"});
    REQUIRE(syc.biased.size() == 1);
    CHECK(syc.H.label(syc.gate[syc.biased[0]] ? syc.k_in_h[*syc.gate[syc.biased[0]]] : 0) == "q");
    // with the extra edge h5-h6 the figure has a fourth neutral point
    CHECK(neutral_labels(testing::fixture_document("sycamore_literal").gluing()).size() == 4);

    const MetricSpace K3 = fixture("K3");
    const GluingSpec trivial = glue(K3, fixture("K2"), {0, 1}, {0, 1});
    CHECK(trivial.biased.empty());
    CHECK(trivial.neutral.empty());
    CHECK_THROWS_AS(glue(K3, fixture("K2"), {}, {}), EmptyK);
    CHECK_THROWS_AS(glue(fixture("P2"), fixture("K2"), {0, 2}, {0, 1}), NotIsometricEmbedding);
}

TEST_CASE("glued metric restricts to both sides and propagates through gates") {
    const GluingSpec g = testing::fixture_document("gluing_trees").gluing();
    for (Point x = 0; x < static_cast<Point>(g.G.size()); ++x) {
        for (Point y = 0; y < static_cast<Point>(g.G.size()); ++y) CHECK(g.glued(x, y) == g.G(x, y));
    }
    for (Point x = 0; x < static_cast<Point>(g.H.size()); ++x) {
        for (Point y = 0; y < static_cast<Point>(g.H.size()); ++y) {
            CHECK(g.glued(g.h_to_glued[x], g.h_to_glued[y]) == g.H(x, y));
        }
    }
    for (Point y : g.biased) {
        const Point gy = g.h_to_glued[y];
        const Point gate = g.gate_of_glued(gy);
        for (Point x = 0; x < static_cast<Point>(g.G.size()); ++x) {
            CHECK(g.glued(x, gy) == g.glued(x, gate) + g.glued(gate, gy));
        }
    }
}
