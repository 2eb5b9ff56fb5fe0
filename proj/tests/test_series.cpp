#include <doctest.h>

#include <random>

#include "magtop/causal.hpp"
#include "magtop/errors.hpp"
#include "magtop/random_space.hpp"
#include "magtop/series.hpp"
#include "support.hpp"

using namespace magtop;
using testing::fixture;

namespace {

HahnPolynomial series(std::initializer_list<std::pair<long, long>> terms, long truncation) {
    HahnPolynomial p{Rational(truncation)};
    for (const auto& [e, c] : terms) p.add_term(Rational(e), Rational(c));
    return p;
}

}  // namespace

TEST_CASE("series arithmetic") {
    const Rational t(3);
    const HahnPolynomial q = HahnPolynomial::monomial(Rational(1), Rational(1), t);
    const HahnPolynomial half = HahnPolynomial::monomial(Rational(1), Rational::parse("1/2"), t);
    CHECK((q * q).coefficient(Rational(2)) == Rational(1));
    CHECK((q * q * q * q).is_zero());
    CHECK((half * half) == q);
    const HahnPolynomial a = q + half, b = q - HahnPolynomial::constant(Rational(2), t);
    CHECK(a * b == b * a);
    CHECK(a * (b + q) == a * b + a * q);
    CHECK((a * b) * q == a * (b * q));
    CHECK(series({{0, 2}, {1, -2}, {2, 2}}, 3).str() == "2 - 2 q^1 + 2 q^2");
    CHECK(half.str() == "1 q^{1/2}");
    CHECK(HahnPolynomial(t).str() == "0");
}

TEST_CASE("similarity matrix and its inverse") {
    const MetricSpace two = fixture("two_point");
    const SeriesMatrix Z = z_matrix(two, Rational(3));
    CHECK(Z(0, 0) == series({{0, 1}}, 3));
    CHECK(Z(0, 1) == series({{1, 1}}, 3));
    const SeriesMatrix W = z_inverse(two, Rational(3));
    CHECK(W(0, 0) == series({{0, 1}, {2, 1}}, 3));
    CHECK(W(0, 1) == series({{1, -1}, {3, -1}}, 3));
    CHECK(z_inverse(fixture("single_point"), Rational(3))(0, 0) == series({{0, 1}}, 3));

    std::mt19937_64 rng(23);
    for (int i = 0; i < 10; ++i) {
        const MetricSpace X = random_rational_space(4, rng);
        CHECK(z_matrix(X, Rational(3)) * z_inverse(X, Rational(3)) == SeriesMatrix::identity(4, Rational(3)));
    }
}

TEST_CASE("perturbative expansion") {
    const MetricSpace two = fixture("two_point");
    CHECK(perturbative_inverse(two, 0, 0, Rational(2)) == series({{0, 1}, {2, 1}}, 2));
    CHECK(perturbative_inverse(two, 0, 1, Rational(1)) == series({{1, -1}}, 1));
    std::mt19937_64 rng(29);
    for (int i = 0; i < 10; ++i) {
        const MetricSpace X = random_rational_space(4 + i % 2, rng);
        const SeriesMatrix W = z_inverse(X, Rational(3));
        for (Point a = 0; a < static_cast<Point>(X.size()); ++a) {
            for (Point b = 0; b < static_cast<Point>(X.size()); ++b) {
                CHECK(perturbative_inverse(X, a, b, Rational(3)) == W(a, b));
            }
        }
    }
}

TEST_CASE("magnitude") {
    // 2 / (1 + q) expanded
    HahnPolynomial expected(Rational(3));
    for (long n = 0; n <= 3; ++n) expected.add_term(Rational(n), Rational(n % 2 ? -2 : 2));
    CHECK(magnitude(fixture("two_point"), Rational(3)) == expected);
    CHECK(magnitude(fixture("two_point"), Rational(3)).str() == "2 - 2 q^1 + 2 q^2 - 2 q^3");
    CHECK(magnitude(fixture("single_point"), Rational(3)).str() == "1");
    const auto w = weighting(fixture("K3"), Rational(2));
    HahnPolynomial sum(Rational(2));
    for (const auto& x : w) sum += x;
    CHECK(sum == magnitude(fixture("K3"), Rational(2)));
}

TEST_CASE("Euler characteristic identity") {
    CHECK(euler_check(fixture("K3"), Rational(3)).passed);
    CHECK(euler_check(fixture("C4"), Rational(4)).passed);
    CHECK(euler_check(fixture("P3"), Rational(3)).passed);
    std::mt19937_64 rng(31);
    for (int i = 0; i < 3; ++i) CHECK(euler_check(random_rational_space(5, rng), Rational(3)).passed);
}

TEST_CASE("recovering the metric") {
    const MetricSpace C4 = fixture("C4");
    // a-c-b-d-a: rotate a->c->b->d->a
    std::vector<Point> rot(4);
    rot[C4.index_of("a")] = C4.index_of("c");
    rot[C4.index_of("c")] = C4.index_of("b");
    rot[C4.index_of("b")] = C4.index_of("d");
    rot[C4.index_of("d")] = C4.index_of("a");
    const RecoverVerdict same = recover_check(C4, C4, rot);
    CHECK(same.isometry);
    CHECK(same.tables_equal);

    const RecoverVerdict path = recover_check(C4, fixture("P3"), {0, 1, 2, 3});
    CHECK_FALSE(path.isometry);
    CHECK_FALSE(path.tables_equal);

    const MetricSpace K3 = fixture("K3");
    const auto heavy = MetricSpace::from_weighted_graph(
        {"a", "b", "c"}, {{"a", "b", Rational::parse("3/2")}, {"b", "c", Rational(1)}, {"a", "c", Rational(1)}});
    CHECK_FALSE(recover_check(K3, heavy, {0, 1, 2}).isometry);
    CHECK_THROWS_AS(recover_check(K3, C4, {0, 1, 2}), SizeMismatch);
    CHECK_THROWS_AS(recover_check(K3, K3, {0, 0, 1}), SizeMismatch);
}
