#include "magtop/frames.hpp"

#include <algorithm>
#include <set>

#include "magtop/causal.hpp"
#include "magtop/chain_complex.hpp"
#include "magtop/errors.hpp"
#include "magtop/homology.hpp"
#include "magtop/simplicial.hpp"

namespace magtop {

namespace {

void require_below_m_x(const MetricSpace& X, const Rational& l) {
    const FourCutScan scan = four_cuts(X);
    if (!scan.below(l)) {
        throw FourCutObstruction("l = " + l.str() + " is not below m_X = " + scan.m_x->str());
    }
}

std::map<int, std::size_t> convolve(const std::map<int, std::size_t>& lhs, const std::map<int, std::size_t>& rhs) {
    std::map<int, std::size_t> out;
    for (const auto& [i, x] : lhs) {
        for (const auto& [j, y] : rhs) out[i + j] += x * y;
    }
    return out;
}

}  // namespace

Frame frame_of(const MetricSpace& X, std::span<const Point> s) {
    Frame f;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (!is_smooth(X, s, k)) f.points.push_back(s[k]);
    }
    f.length = seq_length(X, f.points);
    return f;
}

bool is_singular_sequence(const MetricSpace& X, std::span<const Point> s) {
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (is_smooth(X, s, k)) return false;
    }
    return true;
}

std::vector<Frame> singular_sequences(const MetricSpace& X, Point a, Point b, const Rational& l) {
    require_below_m_x(X, l);
    std::vector<Frame> out;
    for (auto& s : lightlike_sequences(X, a, b, l)) {
        if (is_singular_sequence(X, s)) out.push_back({std::move(s), l});
    }
    return out;
}

std::map<int, std::size_t> open_interval_betti(const MetricSpace& X, Point a, Point b) {
    const IntervalPoset I = interval(X, a, b, IntervalKind::open);
    SimplicialPair pair;
    for (Point x : I.carrier) pair.vertices.push_back({x, X(a, x)});
    pair.total = SimplicialComplex::from_face_closed(
        poset_chains(I.carrier.size(), [&](std::size_t i, std::size_t j) { return static_cast<bool>(I.leq[i][j]); }));
    std::map<int, std::size_t> out;
    const HomologySummary h_pair = homology(relative_chain_complex(pair, true));
    for (const auto& [k, h] : h_pair.groups()) {
        if (h.betti > 0) out[k] = h.betti;
    }
    return out;
}

std::map<int, std::size_t> framed_betti_prediction(const MetricSpace& X, Point a, Point b, const Rational& l) {
    std::map<int, std::size_t> total;
    for (const auto& F : singular_sequences(X, a, b, l)) {
        std::map<int, std::size_t> smash{{0, 1}};  // S^0, the unit for smash products
        for (std::size_t i = 1; i < F.points.size(); ++i) {
            std::map<int, std::size_t> factor;
            for (const auto& [k, n] : open_interval_betti(X, F.points[i - 1], F.points[i])) factor[k + 2] = n;
            smash = convolve(smash, factor);
        }
        for (const auto& [k, n] : smash) total[k] += n;
    }
    std::erase_if(total, [](const auto& e) { return e.second == 0; });
    return total;
}

std::vector<Frame> thin_frames(const MetricSpace& X, const Rational& l) {
    std::vector<Frame> out;
    const auto n = static_cast<Point>(X.size());
    for (Point a = 0; a < n; ++a) {
        for (Point b = 0; b < n; ++b) {
            for (auto& s : lightlike_sequences(X, a, b, l)) {
                if (!is_singular_sequence(X, s)) continue;
                bool thin = true;
                for (std::size_t i = 1; i < s.size() && thin; ++i) {
                    thin = interval(X, s[i - 1], s[i], IntervalKind::open).empty();
                }
                if (thin) out.push_back({std::move(s), l});
            }
        }
    }
    return out;
}

CheckReport verify_frames(const MetricSpace& X, const Rational& max_length) {
    CheckReport report("frames");
    const FourCutScan scan = four_cuts(X);
    const auto n = static_cast<Point>(X.size());
    for (const auto& l : achievable_lengths(X, max_length)) {
        if (l.is_zero() || !scan.below(l)) continue;
        std::size_t instances = 0;
        for (Point a = 0; a < n; ++a) {
            for (Point b = 0; b < n; ++b) {
                if (X(a, b) > l) continue;
                ++instances;
                const auto predicted = framed_betti_prediction(X, a, b, l);
                std::map<int, std::size_t> actual;
                const HomologySummary mh = magnitude_homology(X, a, b, l);
                for (const auto& [k, h] : mh.groups()) {
                    if (h.betti > 0) actual[k] = h.betti;
                }
                if (predicted != actual) {
                    report.fail("l=" + l.str() + " a=" + X.label(a) + " b=" + X.label(b) +
                                " framed prediction differs from homology");
                }
            }
        }
        report.note("l=" + l.str() + " " + std::to_string(instances) + " pairs");
    }
    return report;
}

HasseGraph hasse_graph(const std::vector<std::vector<std::string>>& facets) {
    std::set<std::vector<std::string>> faces;
    for (auto f : facets) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        if (f.empty()) continue;
        if (f.size() > 20) throw MetricError("facet too large");
        for (unsigned long mask = 1; mask < (1UL << f.size()); ++mask) {
            std::vector<std::string> face;
            for (std::size_t i = 0; i < f.size(); ++i) {
                if (mask & (1UL << i)) face.push_back(f[i]);
            }
            faces.insert(std::move(face));
        }
    }
    if (faces.empty()) throw EmptyComplex("the complex has no vertices");

    auto name = [](const std::vector<std::string>& face) {
        std::string s = "{";
        for (std::size_t i = 0; i < face.size(); ++i) s += (i ? "," : "") + face[i];
        return s + "}";
    };
    std::size_t dim = 0;
    for (const auto& f : faces) dim = std::max(dim, f.size() - 1);

    HasseGraph g;
    g.vertices.push_back(g.bottom);
    for (const auto& f : faces) g.vertices.push_back(name(f));
    g.vertices.push_back(g.top);
    for (const auto& f : faces) {
        if (f.size() == 1) g.edges.push_back({g.bottom, name(f), Rational(1)});
        bool maximal = true;
        for (std::size_t i = 0; i < f.size() && f.size() > 1; ++i) {
            std::vector<std::string> below = f;
            below.erase(below.begin() + static_cast<std::ptrdiff_t>(i));
            g.edges.push_back({name(below), name(f), Rational(1)});
        }
        for (const auto& other : faces) {
            if (other.size() == f.size() + 1 && std::includes(other.begin(), other.end(), f.begin(), f.end())) {
                maximal = false;
                break;
            }
        }
        if (maximal) {
            g.edges.push_back({name(f), g.top, Rational(static_cast<long>(dim + 1 - (f.size() - 1)))});
        }
    }
    g.length = Rational(static_cast<long>(dim + 2));
    return g;
}

}  // namespace magtop
