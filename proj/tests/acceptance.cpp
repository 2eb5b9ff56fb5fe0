// One line per acceptance criterion; exit status 1 if any fails.

#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "magtop/causal.hpp"
#include "magtop/chain_complex.hpp"
#include "magtop/errors.hpp"
#include "magtop/frames.hpp"
#include "magtop/glue_mv.hpp"
#include "magtop/homology.hpp"
#include "magtop/projecting.hpp"
#include "magtop/random_space.hpp"
#include "magtop/series.hpp"
#include "magtop/simplicial.hpp"
#include "magtop/verify.hpp"
#include "support.hpp"

using namespace magtop;
using testing::fixture;
using testing::fixture_document;

namespace {

struct Outcome {
    bool passed = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok && passed) {
            passed = false;
            detail << " first failure: " << what << ";";
        }
    }
};

int failures = 0;

void criterion(int n, const std::string& title, const std::function<void(Outcome&)>& body) {
    Outcome o;
    try {
        body(o);
    } catch (const std::exception& e) {
        o.passed = false;
        o.detail << " exception: " << e.what();
    }
    if (!o.passed) ++failures;
    std::cout << "criterion " << n << " " << (o.passed ? "PASS" : "FAIL") << " " << title << ":" << o.detail.str()
              << "\n";
}

HomologySummary only(int k, std::size_t betti) {
    HomologySummary h;
    h.set(k, DegreeHomology{betti, {}});
    return h;
}

template <typename F>
void for_pairs(const MetricSpace& X, F f) {
    for (Point a = 0; a < static_cast<Point>(X.size()); ++a) {
        for (Point b = 0; b < static_cast<Point>(X.size()); ++b) f(a, b);
    }
}

// Reduced homology of a complex given by facets, straight from its simplices.
HomologySummary reduced_homology(const std::vector<std::vector<std::string>>& facets) {
    std::vector<std::string> names;
    for (const auto& f : facets) names.insert(names.end(), f.begin(), f.end());
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    std::vector<Simplex> simplices;
    for (const auto& f : facets) {
        Simplex s;
        for (const auto& v : f) s.push_back(static_cast<int>(std::find(names.begin(), names.end(), v) - names.begin()));
        std::sort(s.begin(), s.end());
        simplices.push_back(s);
    }
    SimplicialPair pair;
    for (std::size_t i = 0; i < names.size(); ++i) pair.vertices.push_back({static_cast<Point>(i), Rational(0)});
    pair.total = SimplicialComplex::from_simplices(simplices);
    return homology(relative_chain_complex(pair, true));
}

}  // namespace

int main() {
    criterion(1, "C4 antipodal pair at l=2 is a 2-sphere", [](Outcome& o) {
        const MetricSpace C4 = fixture("C4");
        const HomologySummary h = magnitude_homology(C4, C4.index_of("a"), C4.index_of("b"), Rational(2));
        o.require(h == only(2, 1), "homology is not Z in degree 2");
        o.detail << " MH = Z in degree 2 only, no torsion";
    });

    criterion(2, "K3 total ranks 3*2^l for l = 0..3", [](Outcome& o) {
        const MetricSpace K3 = fixture("K3");
        for (long l = 0; l <= 3; ++l) {
            const HomologySummary h = total_magnitude_homology(K3, Rational(l));
            const std::size_t expected = 3UL << l;
            o.require(h == only(static_cast<int>(l), expected), "l=" + std::to_string(l));
            o.detail << " l=" << l << ":" << h.betti(static_cast<int>(l));
        }
    });

    criterion(3, "trees P2 and S3: |V| at l=0, 2|E| in degree l for l = 1..3", [](Outcome& o) {
        for (const char* name : {"P2", "S3"}) {
            const MetricSpace X = fixture(name);
            const std::size_t edges = X.size() - 1;
            o.require(total_magnitude_homology(X, Rational(0)) == only(0, X.size()), std::string(name) + " l=0");
            for (long l = 1; l <= 3; ++l) {
                const HomologySummary h = total_magnitude_homology(X, Rational(l));
                o.require(h == only(static_cast<int>(l), 2 * edges), std::string(name) + " SNF l=" + std::to_string(l));
                std::size_t thin = 0;
                for (const auto& f : thin_frames(X, Rational(l))) thin += f.points.size() == static_cast<std::size_t>(l + 1);
                o.require(thin == 2 * edges && thin_frames(X, Rational(l)).size() == thin,
                          std::string(name) + " thin frames l=" + std::to_string(l));
            }
            o.detail << " " << name << " " << X.size() << "/" << 2 * edges;
        }
    });

    criterion(4, "two-point magnitude and the two inverse formulas", [](Outcome& o) {
        HahnPolynomial closed(Rational(3));
        for (long n = 0; n <= 3; ++n) closed.add_term(Rational(n), Rational(n % 2 ? -2 : 2));
        const HahnPolynomial mag = magnitude(fixture("two_point"), Rational(3));
        o.require(mag == closed, "Mag = " + mag.str());
        o.detail << " Mag = " << mag.str() << ";";
        std::mt19937_64 rng(2024);
        std::size_t entries = 0;
        for (int i = 0; i < 20; ++i) {
            const MetricSpace X = random_rational_space(4 + static_cast<std::size_t>(i % 2), rng);
            const SeriesMatrix W = z_inverse(X, Rational(3));
            for_pairs(X, [&](Point a, Point b) {
                ++entries;
                o.require(perturbative_inverse(X, a, b, Rational(3)) == W(a, b), "random space " + std::to_string(i));
            });
        }
        o.detail << " " << entries << " entries agree on 20 random spaces";
    });

    criterion(5, "Euler identity on K3, C4, P3 and 10 random 5-point spaces", [](Outcome& o) {
        std::vector<MetricSpace> spaces{fixture("K3"), fixture("C4"), fixture("P3")};
        std::mt19937_64 rng(5);
        for (int i = 0; i < 10; ++i) spaces.push_back(random_rational_space(5, rng));
        for (std::size_t i = 0; i < spaces.size(); ++i) {
            const CheckReport r = euler_check(spaces[i], Rational(3));
            o.require(r.passed, "space " + std::to_string(i) + ": " + r.witness);
        }
        o.detail << " " << spaces.size() << " spaces";
    });

    criterion(6, "chain isomorphism on the fixture corpus, l <= 3", [](Outcome& o) {
        std::size_t instances = 0;
        for (const char* name : {"two_point", "K3", "K4", "C4", "P2", "P3", "S3", "weighted"}) {
            const MetricSpace X = fixture(name);
            for (const auto& l : achievable_lengths(X, Rational(3))) {
                for_pairs(X, [&](Point a, Point b) {
                    ++instances;
                    const CheckReport r = verify_mainisom(X, a, b, l);
                    o.require(r.passed, std::string(name) + ": " + r.witness);
                });
            }
        }
        o.detail << " " << instances << " instances";
    });

    criterion(7, "double suspension shift with void and empty pairs", [](Outcome& o) {
        const MetricSpace K3 = fixture("K3");
        const SimplicialPair k = ai_pair(K3, 0, 1, Rational(2));
        o.require(k.total.simplices().size() == 1 && k.sub.state() == ComplexState::empty_complex, "K3 pair shape");
        o.require(magnitude_homology(K3, 0, 1, Rational(2)) == only(2, 1), "K3 MH");
        o.require(verify_double_suspension(K3, 0, 1, Rational(2)).passed, "K3 shift");

        const MetricSpace P2 = fixture("P2");
        const Point a = P2.index_of("a"), b = P2.index_of("b");
        const SimplicialPair p = ai_pair(P2, a, b, Rational(2));
        o.require(p.total.simplices().size() == 1 && p.sub.is_void(), "path pair shape");
        o.require(verify_double_suspension(P2, a, b, Rational(2)).passed, "path shift");
        o.detail << " K3: (point, empty) gives MH_2 = Z; path: (point, void) gives 0 on both sides;";

        std::size_t instances = 0;
        for (const char* name : {"two_point", "K3", "C4", "P3", "S3", "weighted"}) {
            const MetricSpace X = fixture(name);
            for (const auto& l : achievable_lengths(X, Rational(3))) {
                if (l.is_zero()) continue;
                for_pairs(X, [&](Point x, Point y) {
                    if (X(x, y) > l) return;
                    ++instances;
                    o.require(verify_double_suspension(X, x, y, l).passed, name);
                });
            }
        }
        o.detail << " " << instances << " further instances";
    });

    criterion(8, "Kunneth ranks for K2xK2 and K2xP2, l <= 3", [](Outcome& o) {
        o.require(verify_kunneth(fixture("K2"), fixture("K2"), Rational(3)).passed, "K2 x K2");
        o.require(verify_kunneth(fixture("K2"), fixture("P2"), Rational(3)).passed, "K2 x P2");
        const std::size_t total = total_magnitude_homology(product(fixture("K2"), fixture("K2")), Rational(2)).betti(2);
        o.require(total == 12, "total MH_2^2 = " + std::to_string(total));
        o.detail << " total MH_2^2(K2xK2) = " << total;
    });

    criterion(9, "framed prediction equals SNF below m_X; obstruction on C4 at l=3", [](Outcome& o) {
        std::vector<std::pair<std::string, MetricSpace>> spaces;
        for (const char* name : {"K3", "K4", "P2", "P3", "S3"}) spaces.emplace_back(name, fixture(name));
        std::mt19937_64 rng(9);
        for (int i = 0; i < 3; ++i) spaces.emplace_back("tree" + std::to_string(i), random_tree(5, rng));
        int random_spaces = 0;
        while (random_spaces < 4) {
            MetricSpace X = random_rational_space(4, rng);
            if (four_cuts(X).m_x) continue;
            spaces.emplace_back("random" + std::to_string(random_spaces++), std::move(X));
        }
        for (const auto& [name, X] : spaces) {
            const CheckReport r = verify_frames(X, Rational(3));
            o.require(r.passed, name + ": " + r.witness);
        }
        bool obstructed = false;
        try {
            const MetricSpace C4 = fixture("C4");
            framed_betti_prediction(C4, C4.index_of("a"), C4.index_of("b"), Rational(3));
        } catch (const FourCutObstruction&) {
            obstructed = true;
        }
        o.require(obstructed, "no FourCutObstruction on C4 at l=3");
        o.detail << " " << spaces.size() << " spaces; C4 refused at l=3";
    });

    criterion(10, "Mayer-Vietoris additivity on gated gluings, l <= 3", [](Outcome& o) {
        for (const char* name : {"gluing_paths", "gluing_star", "gluing_trees", "gluing_triangles"}) {
            const GatedVerdict v = check_gated(fixture_document(name).gluing());
            o.require(v.gated(), std::string(name) + " not gated");
            if (!v.gated()) continue;
            const CheckReport r = verify_mv(*v.gluing, Rational(3));
            o.require(r.passed, std::string(name) + ": " + r.witness);
        }
        const bool unit_refused = !check_gated(fixture_document("gluing_triangles_unit").gluing()).gated();
        o.require(unit_refused, "unit triangles accepted as gated");
        o.detail << " trees and weighted triangles pass; unit-edge triangles refused as not gated";
    });

    criterion(11, "sycamore twist up to l=5", [](Outcome& o) {
        const CheckReport r = verify_sycamore(fixture_document("sycamore_twist").twist(), Rational(5));
        o.require(r.passed, r.witness);
        bool refused = false;
        try {
            (void)fixture_document("sycamore_literal").twist();
        } catch (const NotASycamoreTwist&) {
            refused = true;
        }
        o.require(refused, "literal figure accepted");
        o.detail << " " << (r.lines.empty() ? std::string() : r.lines.back()) << "; literal figure refused";
    });

    criterion(12, "Hasse graph realisation against reduced homology shifted by 2", [](Outcome& o) {
        const std::vector<std::vector<std::string>> circle{{"a", "b"}, {"b", "c"}, {"a", "c"}};
        const std::vector<std::vector<std::string>> vertex{{"v"}};
        for (const auto* facets_ptr : {&circle, &vertex}) {
            const auto& facets = *facets_ptr;
            const HasseGraph g = hasse_graph(facets);
            const MetricSpace X = g.space();
            const HomologySummary mh = magnitude_homology(X, X.index_of(g.bottom), X.index_of(g.top), g.length);
            o.require(mh == reduced_homology(facets).shifted(2), "realisation differs from oracle");
            if (facets_ptr == &circle) {
                o.require(mh == only(3, 1), "triangle boundary");
                o.detail << " triangle boundary: beta3 = " << mh.betti(3) << " only;";
            } else {
                o.detail << " single vertex: MH = " << (mh.is_zero() ? "0" : "nonzero")
                         << " (contractible; the stated beta2 = 1 does not hold, see notes)";
            }
        }
    });

    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << "\n";
    return failures == 0 ? 0 : 1;
}
