#include "magtop/glue_mv.hpp"

#include <algorithm>
#include <set>

#include "magtop/causal.hpp"
#include "magtop/chain_complex.hpp"
#include "magtop/errors.hpp"
#include "magtop/parallel.hpp"

namespace magtop {

namespace {

std::vector<bool> interior_mask(const GluingSpec& g) {
    std::vector<bool> interior(g.H.size(), true);
    for (Point k : g.k_in_h) interior[k] = false;
    return interior;
}

// Keeps the generators satisfying keep; rows of dropped generators must not
// appear in kept columns.
ChainComplex restrict_complex(const ChainComplex& cc, const std::vector<bool>& interior) {
    auto touches = [&](const std::vector<int>& s) {
        return std::any_of(s.begin(), s.end(), [&](int x) { return interior[x]; });
    };
    ChainComplex out;
    out.min_degree = cc.min_degree;
    std::vector<std::vector<std::ptrdiff_t>> renumber(cc.basis.size());
    for (std::size_t i = 0; i < cc.basis.size(); ++i) {
        out.basis.emplace_back();
        for (const auto& s : cc.basis[i]) {
            if (touches(s)) {
                renumber[i].push_back(static_cast<std::ptrdiff_t>(out.basis[i].size()));
                out.basis[i].push_back(s);
            } else {
                renumber[i].push_back(-1);
            }
        }
    }
    for (std::size_t i = 0; i < cc.basis.size(); ++i) {
        const std::size_t rows = i == 0 ? 0 : out.basis[i - 1].size();
        IntMatrix m(rows, out.basis[i].size());
        const IntMatrix& src = cc.boundary[i];
        for (std::size_t j = 0; j < src.cols(); ++j) {
            if (renumber[i][j] < 0) continue;
            for (const auto& [r, v] : src.column(j)) {
                if (renumber[i - 1][r] < 0) {
                    throw InternalError("length-preserving face of an interior sequence lies in K");
                }
                m.add(static_cast<std::size_t>(renumber[i - 1][r]), static_cast<std::size_t>(renumber[i][j]), v);
            }
        }
        out.boundary.push_back(std::move(m));
    }
    return out;
}

std::string degree_line(const Rational& l, const HomologySummary& lhs, const HomologySummary& rhs) {
    std::string s = "l=" + l.str();
    std::set<int> degrees;
    for (const auto& [k, h] : lhs.groups()) degrees.insert(k);
    for (const auto& [k, h] : rhs.groups()) degrees.insert(k);
    for (int k : degrees) {
        s += " deg " + std::to_string(k) + ": " + std::to_string(lhs.betti(k)) + "/" + std::to_string(rhs.betti(k));
    }
    return s;
}

// Compares ranks first so rank and torsion failures are reported apart.
void compare(CheckReport& report, const std::string& what, const Rational& l, const HomologySummary& lhs,
             const HomologySummary& rhs) {
    std::set<int> degrees;
    for (const auto& [k, h] : lhs.groups()) degrees.insert(k);
    for (const auto& [k, h] : rhs.groups()) degrees.insert(k);
    for (int k : degrees) {
        if (lhs.betti(k) != rhs.betti(k)) {
            report.fail(what + " l=" + l.str() + " degree " + std::to_string(k) + " rank " +
                        std::to_string(lhs.betti(k)) + " vs " + std::to_string(rhs.betti(k)));
        } else if (lhs.torsion(k) != rhs.torsion(k)) {
            report.fail(what + " l=" + l.str() + " degree " + std::to_string(k) + " torsion differs");
        }
    }
}

std::vector<Rational> lengths_of(const GluingSpec& g, const Rational& max_length) {
    std::vector<Rational> out = achievable_lengths(g.glued, max_length);
    for (const auto& l : achievable_lengths(g.H, max_length)) out.push_back(l);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

GatedVerdict check_gated(const GluingSpec& g) {
    if (!g.neutral.empty()) return {std::nullopt, g.neutral.front()};
    return {GatedGluing{g}, std::nullopt};
}

GatedGluing require_gated(const GluingSpec& g) {
    GatedVerdict v = check_gated(g);
    if (!v.gated()) {
        throw NotGated("neutral point " + g.H.label(*v.neutral_witness) + " does not project to K");
    }
    return std::move(*v.gluing);
}

HomologySummary interior_part_homology(const GatedGluing& g, const Rational& l, unsigned jobs) {
    const MetricSpace& H = g.base.H;
    const std::vector<bool> interior = interior_mask(g.base);
    const std::size_t n = H.size();
    std::vector<HomologySummary> parts(n * n);
    parallel_for(n * n, jobs, [&](std::size_t i) {
        const auto a = static_cast<Point>(i / n);
        const auto b = static_cast<Point>(i % n);
        if (H(a, b) > l) return;
        parts[i] = homology(restrict_complex(magnitude_chain_complex(H, a, b, l), interior));
    });
    HomologySummary total;
    for (const auto& p : parts) total += p;
    return total;
}

CheckReport verify_union(const GatedGluing& g, const Rational& max_length, unsigned jobs) {
    CheckReport report("union");
    const GluingSpec& s = g.base;
    const MetricSpace K = s.k_space();
    for (const auto& l : lengths_of(s, max_length)) {
        const HomologySummary interior = interior_part_homology(g, l, jobs);
        HomologySummary x_side = total_magnitude_homology(s.glued, l, jobs);
        HomologySummary wedge = interior;
        wedge += total_magnitude_homology(s.G, l, jobs);
        compare(report, "X vs interior(H) + G", l, x_side, wedge);

        HomologySummary h_split = interior;
        h_split += total_magnitude_homology(K, l, jobs);
        compare(report, "H vs interior(H) + K", l, total_magnitude_homology(s.H, l, jobs), h_split);
        report.note(degree_line(l, x_side, wedge));
    }
    return report;
}

CheckReport verify_mv(const GatedGluing& g, const Rational& max_length, unsigned jobs) {
    CheckReport report("mv");
    const GluingSpec& s = g.base;
    const std::vector<bool> interior = interior_mask(s);
    for (Point a : s.k_in_h) {
        for (Point c : s.k_in_h) {
            for (Point b = 0; b < static_cast<Point>(s.H.size()); ++b) {
                if (interior[b] && !(s.H(a, c) < s.H(a, b) + s.H(b, c))) {
                    report.fail("shortcut fails at " + s.H.label(a) + "," + s.H.label(b) + "," + s.H.label(c));
                }
            }
        }
    }
    const MetricSpace K = s.k_space();
    for (const auto& l : lengths_of(s, max_length)) {
        HomologySummary lhs = total_magnitude_homology(s.glued, l, jobs);
        lhs += total_magnitude_homology(K, l, jobs);
        HomologySummary rhs = total_magnitude_homology(s.G, l, jobs);
        rhs += total_magnitude_homology(s.H, l, jobs);
        compare(report, "X + K vs G + H", l, lhs, rhs);
        report.note(degree_line(l, lhs, rhs));
    }
    return report;
}

}  // namespace magtop
