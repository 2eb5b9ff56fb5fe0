#include "magtop/verify.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>

#include "magtop/causal.hpp"
#include "magtop/chain_complex.hpp"
#include "magtop/errors.hpp"
#include "magtop/parallel.hpp"
#include "magtop/simplicial.hpp"

namespace magtop {

namespace {

std::string where(const MetricSpace& X, Point a, Point b, const Rational& l) {
    return "l=" + l.str() + " a=" + X.label(a) + " b=" + X.label(b);
}

std::string show(const HomologySummary& h) {
    if (h.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, g] : h.groups()) {
        if (!first) os << ' ';
        first = false;
        os << 'H' << k << '=' << g.betti;
        for (const auto& t : g.torsion) os << "+Z/" << t;
    }
    return os.str();
}

std::optional<std::size_t> vertex_index(const SimplicialPair& pair, const CausalPoint& p) {
    const auto it = std::lower_bound(pair.vertices.begin(), pair.vertices.end(), p);
    if (it == pair.vertices.end() || *it != p) return std::nullopt;
    return static_cast<std::size_t>(it - pair.vertices.begin());
}

}  // namespace

CheckReport verify_mainisom(const MetricSpace& X, Point a, Point b, const Rational& l) {
    CheckReport report{"mainisom"};
    const std::string at = where(X, a, b, l);
    const ChainComplex mc = magnitude_chain_complex(X, a, b, l);
    const SimplicialPair pair = order_complex_pair(X, a, b, l);
    const ChainComplex rc = relative_chain_complex(pair, true);

    for (int k = std::min(mc.min_degree, rc.min_degree); k <= std::max(mc.max_degree(), rc.max_degree()); ++k) {
        if (mc.rank(k) != rc.rank(k)) {
            report.fail(at + " rank mismatch in degree " + std::to_string(k));
            return report;
        }
    }

    // Time stamps carried by the relative generators must be the partial sums.
    for (const auto& degree : rc.basis) {
        for (const auto& s : degree) {
            const PointSequence pts = pair.points_of(s);
            const auto stamped = time_stamped(X, pts);
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (pair.vertices[static_cast<std::size_t>(s[i])] != stamped[i] || pts.front() != a || pts.back() != b) {
                    report.fail(at + " relative generator is not a time-stamped light-like sequence");
                    return report;
                }
            }
        }
    }

    for (std::size_t d = 0; d < mc.basis.size(); ++d) {
        const int k = mc.min_degree + static_cast<int>(d);
        // Image of each sequence in the relative basis of degree k.
        std::map<std::vector<int>, std::size_t> rel_index;
        const auto rd = static_cast<std::size_t>(k - rc.min_degree);
        for (std::size_t i = 0; i < rc.basis[rd].size(); ++i) rel_index.emplace(rc.basis[rd][i], i);
        std::vector<std::size_t> image;
        for (const auto& s : mc.basis[d]) {
            Simplex simplex;
            for (const auto& p : time_stamped(X, s)) {
                const auto v = vertex_index(pair, p);
                if (!v) {
                    report.fail(at + " time-stamped point missing from the essential poset");
                    return report;
                }
                simplex.push_back(static_cast<int>(*v));
            }
            const auto it = rel_index.find(simplex);
            if (it == rel_index.end()) {
                report.fail(at + " image of a sequence is not a relative generator");
                return report;
            }
            image.push_back(it->second);
        }
        std::vector<std::size_t> sorted = image;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            report.fail(at + " time-stamp map is not injective in degree " + std::to_string(k));
            return report;
        }
        if (d == 0) continue;
        // Boundary columns must agree after renaming rows and columns.
        std::map<std::vector<int>, std::size_t> below;
        for (std::size_t i = 0; i < rc.basis[rd - 1].size(); ++i) below.emplace(rc.basis[rd - 1][i], i);
        std::vector<std::size_t> row_image;
        for (const auto& s : mc.basis[d - 1]) {
            Simplex simplex;
            for (const auto& p : time_stamped(X, s)) simplex.push_back(static_cast<int>(*vertex_index(pair, p)));
            row_image.push_back(below.at(simplex));
        }
        const IntMatrix& dm = mc.boundary[d];
        const IntMatrix& dr = rc.boundary[rd];
        for (std::size_t c = 0; c < dm.cols(); ++c) {
            std::vector<IntMatrix::Entry> mapped;
            for (const auto& [r, v] : dm.column(c)) mapped.emplace_back(row_image[r], v);
            std::sort(mapped.begin(), mapped.end());
            if (mapped != dr.column(image[c])) {
                report.fail(at + " boundaries differ in degree " + std::to_string(k));
                return report;
            }
        }
    }
    std::ostringstream os;
    os << at << " generators";
    for (int k = 0; k <= mc.max_degree(); ++k) os << ' ' << mc.rank(k);
    report.note(os.str() + " ok");
    return report;
}

CheckReport verify_double_suspension(const MetricSpace& X, Point a, Point b, const Rational& l) {
    CheckReport report{"double"};
    const std::string at = where(X, a, b, l);
    const HomologySummary mh = magnitude_homology(X, a, b, l);
    const HomologySummary pair_h = homology(relative_chain_complex(ai_pair(X, a, b, l), true)).shifted(2);
    if (mh == pair_h) {
        report.note(at + " MH " + show(mh) + " ok");
    } else {
        report.fail(at + " MH " + show(mh) + " but shifted pair homology " + show(pair_h));
    }
    return report;
}

std::vector<BettiRow> betti_table(const MetricSpace& X, const Rational& max_length, unsigned jobs) {
    std::vector<BettiRow> rows;
    const auto n = static_cast<Point>(X.size());
    for (const auto& l : achievable_lengths(X, max_length)) {
        for (Point a = 0; a < n; ++a) {
            for (Point b = 0; b < n; ++b) {
                if (X(a, b) <= l) rows.push_back({l, a, b, {}});
            }
        }
    }
    parallel_for(rows.size(), jobs,
                 [&](std::size_t i) { rows[i].homology = magnitude_homology(X, rows[i].a, rows[i].b, rows[i].length); });
    return rows;
}

CheckReport verify_kunneth(const MetricSpace& X, const MetricSpace& Y, const Rational& max_length, unsigned jobs) {
    CheckReport report{"kunneth"};
    const MetricSpace P = product(X, Y);
    const auto ny = static_cast<Point>(Y.size());

    using Key = std::tuple<Rational, Point, Point>;
    std::map<Key, HomologySummary> fx;
    std::map<Key, HomologySummary> fy;
    for (const auto& row : betti_table(X, max_length, jobs)) fx.emplace(Key{row.length, row.a, row.b}, row.homology);
    for (const auto& row : betti_table(Y, max_length, jobs)) fy.emplace(Key{row.length, row.a, row.b}, row.homology);
    const auto lx = achievable_lengths(X, max_length);
    const auto ly = achievable_lengths(Y, max_length);
    const bool factors_torsion_free =
        std::all_of(fx.begin(), fx.end(), [](const auto& e) {
            return std::all_of(e.second.groups().begin(), e.second.groups().end(),
                               [](const auto& g) { return g.second.torsion.empty(); });
        }) &&
        std::all_of(fy.begin(), fy.end(), [](const auto& e) {
            return std::all_of(e.second.groups().begin(), e.second.groups().end(),
                               [](const auto& g) { return g.second.torsion.empty(); });
        });

    const auto rows = betti_table(P, max_length, jobs);
    for (const auto& row : rows) {
        const Point a1 = row.a / ny, a2 = row.a % ny;
        const Point b1 = row.b / ny, b2 = row.b % ny;
        std::map<int, std::size_t> predicted;
        for (const auto& l1 : lx) {
            const Rational l2 = row.length - l1;
            if (!std::binary_search(ly.begin(), ly.end(), l2)) continue;
            const auto ix = fx.find(Key{l1, a1, b1});
            const auto iy = fy.find(Key{l2, a2, b2});
            if (ix == fx.end() || iy == fy.end()) continue;
            for (const auto& [i, gx] : ix->second.groups()) {
                for (const auto& [j, gy] : iy->second.groups()) predicted[i + j] += gx.betti * gy.betti;
            }
        }
        std::map<int, std::size_t> actual;
        for (const auto& [k, g] : row.homology.groups()) {
            if (g.betti > 0) actual[k] = g.betti;
            if (factors_torsion_free && !g.torsion.empty()) {
                report.fail(where(P, row.a, row.b, row.length) + " torsion in the product of torsion-free factors");
            }
        }
        std::erase_if(predicted, [](const auto& e) { return e.second == 0; });
        if (actual != predicted) {
            report.fail(where(P, row.a, row.b, row.length) + " product Betti numbers differ from the convolution");
        }
    }
    report.note("product of " + std::to_string(X.size()) + " and " + std::to_string(Y.size()) + " points, " +
                std::to_string(rows.size()) + " (l, a, b) instances");
    return report;
}

}  // namespace magtop
