#include "magtop/projecting.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>

#include "magtop/causal.hpp"
#include "magtop/errors.hpp"

namespace magtop {

namespace {

bool is_biased(const GluingSpec& g, Point x) { return g.region[static_cast<std::size_t>(x)] == Region::biased; }
bool is_neutral(const GluingSpec& g, Point x) { return g.region[static_cast<std::size_t>(x)] == Region::neutral; }
bool is_k(const GluingSpec& g, Point x) { return g.region[static_cast<std::size_t>(x)] == Region::boundary; }
bool is_interior_g(const GluingSpec& g, Point x) {
    return g.region[static_cast<std::size_t>(x)] == Region::interior_g;
}

bool inside_g_or_neutral(const GluingSpec& g, std::span<const Point> s) {
    return std::none_of(s.begin(), s.end(), [&](Point x) { return is_biased(g, x); });
}

bool inside_h(const GluingSpec& g, std::span<const Point> s) {
    return std::none_of(s.begin(), s.end(), [&](Point x) { return is_interior_g(g, x); });
}

/// Sticky subsequence starting at i, if any: x_i and x_j are one interior
/// point of G and one biased point, with only K points in between.
std::optional<std::size_t> sticky_end(const GluingSpec& g, std::span<const Point> s, std::size_t i) {
    if (!is_interior_g(g, s[i]) && !is_biased(g, s[i])) return std::nullopt;
    std::size_t j = i + 1;
    while (j < s.size() && is_k(g, s[j])) ++j;
    if (j >= s.size()) return std::nullopt;
    const bool g_to_h = is_interior_g(g, s[i]) && is_biased(g, s[j]);
    const bool h_to_g = is_biased(g, s[i]) && is_interior_g(g, s[j]);
    if (g_to_h || h_to_g) return j;
    return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> first_sticky(const GluingSpec& g, std::span<const Point> s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (auto j = sticky_end(g, s, i)) return std::pair{i, *j};
    }
    return std::nullopt;
}

/// Partner of a light-like sequence under the projecting matching, with a flag
/// telling whether the sequence is the face of the pair.
std::optional<std::pair<Cell, bool>> partner(const GluingSpec& g, const Cell& s) {
    const auto first = first_sticky(g, s);
    if (!first) return std::nullopt;
    const auto [i, j] = *first;
    const bool left = is_biased(g, s[i]);
    const std::size_t y = left ? i : j;  // the biased endpoint
    const Point pi = g.gate_of_glued(s[y]);
    const std::size_t next = left ? i + 1 : j - 1;  // neighbour inside the sticky part
    Cell out = s;
    if (s[next] != pi) {
        out.insert(out.begin() + static_cast<std::ptrdiff_t>(left ? i + 1 : j), pi);
        return std::pair{out, true};
    }
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(next));
    return std::pair{out, false};
}

}  // namespace

bool is_flat(const GluingSpec& g, std::span<const Point> s) { return inside_g_or_neutral(g, s) || inside_h(g, s); }

SequenceClass classify_sequence(const GluingSpec& g, std::span<const Point> s) {
    SequenceClass out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (auto j = sticky_end(g, s, i)) out.sticky.emplace_back(i, *j);
    }
    if (!out.sticky.empty()) {
        out.kind = SequenceKind::sticky;
        return out;
    }
    if (is_flat(g, s)) {
        out.kind = SequenceKind::flat;
        return out;
    }
    // Split off maximal flat prefixes at neutral points.
    out.kind = SequenceKind::twistable;
    std::size_t start = 0;
    while (!is_flat(g, s.subspan(start))) {
        std::size_t k = start;
        while (k + 1 < s.size() && is_flat(g, s.subspan(start, k + 2 - start))) ++k;
        std::size_t j = k;
        while (j > start && is_k(g, s[j])) --j;
        if (j == start || !is_neutral(g, s[j])) throw InternalError("flat decomposition failed on a sticky-free sequence");
        out.splits.push_back(j);
        start = j;
    }
    return out;
}

ProjectingMatching projecting_matching(const GluingSpec& g, const Rational& l) {
    ProjectingMatching pm;
    pm.length = l;
    const auto n = static_cast<Point>(g.glued.size());
    for (Point a = 0; a < n; ++a) {
        for (Point b = 0; b < n; ++b) {
            for (auto& s : lightlike_sequences(g.glued, a, b, l)) pm.cells.push_back(std::move(s));
        }
    }
    std::sort(pm.cells.begin(), pm.cells.end());
    const std::set<Cell> cell_set(pm.cells.begin(), pm.cells.end());

    for (const auto& s : pm.cells) {
        const auto p = partner(g, s);
        if (!p) {
            pm.critical.push_back(s);
            continue;
        }
        const auto& [other, is_face] = *p;
        if (!cell_set.count(other)) {
            throw NotAMatching("partner of a light-like sequence is not light-like");
        }
        const auto back = partner(g, other);
        if (!back || back->first != s || back->second == is_face) {
            throw NotAMatching("projecting rule is not an involution");
        }
        if (is_face) pm.matching.pairs.push_back({s, other});
    }
    return pm;
}

std::map<std::size_t, std::size_t> critical_cells(const GluingSpec& g, const Rational& l) {
    const ProjectingMatching pm = projecting_matching(g, l);
    std::map<std::size_t, std::size_t> counts;
    for (const auto& s : pm.cells) {
        const bool twistable = classify_sequence(g, s).kind != SequenceKind::sticky;
        const bool critical = std::binary_search(pm.critical.begin(), pm.critical.end(), s);
        if (twistable != critical) throw InternalError("critical cells differ from the twistable sequences");
        if (critical) ++counts[s.size() - 1];
    }
    return counts;
}

SycamoreTwist make_sycamore_twist(const MetricSpace& G, const MetricSpace& H, std::vector<Point> k_in_g,
                                  std::vector<Point> k_in_h, std::vector<std::size_t> alpha) {
    const std::size_t m = k_in_g.size();
    if (alpha.size() != m) throw NotASycamoreTwist("alpha must list one K position per K point");
    std::vector<std::size_t> inverse(m, m);
    for (std::size_t k = 0; k < m; ++k) {
        if (alpha[k] >= m || inverse[alpha[k]] != m) throw NotASycamoreTwist("alpha is not a permutation of K");
        inverse[alpha[k]] = k;
    }
    GluingSpec x = glue(G, H, k_in_g, k_in_h);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (G(k_in_g[i], k_in_g[j]) != G(k_in_g[alpha[i]], k_in_g[alpha[j]])) {
                throw NotASycamoreTwist("alpha is not an isometry of K at " + G.label(k_in_g[i]) + ", " +
                                        G.label(k_in_g[j]));
            }
        }
    }
    for (Point h : x.neutral) {
        for (std::size_t k = 0; k < m; ++k) {
            if (H(h, k_in_h[k]) != H(h, k_in_h[alpha[k]])) {
                throw NotASycamoreTwist("neutral point " + H.label(h) + " sees " + H.label(k_in_h[k]) + " and " +
                                        H.label(k_in_h[alpha[k]]) + " at different distances");
            }
        }
    }
    std::vector<Point> twisted(m);
    for (std::size_t k = 0; k < m; ++k) twisted[k] = k_in_h[alpha[k]];
    GluingSpec y = glue(G, H, std::move(k_in_g), std::move(twisted));
    return SycamoreTwist{std::move(x), std::move(y), std::move(alpha), std::move(inverse)};
}

PointSequence sycamore_tau(const SycamoreTwist& twist, std::span<const Point> s) {
    const GluingSpec& g = twist.x;
    const SequenceClass cls = classify_sequence(g, s);
    if (cls.kind == SequenceKind::sticky) throw InternalError("tau is defined on twistable sequences only");
    std::vector<std::size_t> cuts{0};
    for (std::size_t c : cls.splits) cuts.push_back(c);
    cuts.push_back(s.size() - 1);

    PointSequence out(s.begin(), s.end());
    for (std::size_t piece = 0; piece + 1 < cuts.size(); ++piece) {
        const auto part = s.subspan(cuts[piece], cuts[piece + 1] - cuts[piece] + 1);
        if (inside_g_or_neutral(g, part)) continue;  // tau_G fixes every glued index
        for (std::size_t i = cuts[piece]; i <= cuts[piece + 1]; ++i) {
            if (!is_k(g, s[i])) continue;
            const auto k = static_cast<std::size_t>(
                std::find(g.k_in_g.begin(), g.k_in_g.end(), s[i]) - g.k_in_g.begin());
            out[i] = twist.y.k_in_g[twist.alpha_inverse[k]];
        }
    }
    return out;
}

CheckReport verify_sycamore(const SycamoreTwist& twist, const Rational& max_length) {
    CheckReport report("sycamore");
    const MetricSpace& X = twist.x.glued;
    const MetricSpace& Y = twist.y.glued;
    std::vector<Rational> lengths = achievable_lengths(X, max_length);
    for (auto& l : achievable_lengths(Y, max_length)) lengths.push_back(std::move(l));
    std::sort(lengths.begin(), lengths.end());
    lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());

    for (const auto& l : lengths) {
        const std::string at = "l=" + l.str();
        const ProjectingMatching px = projecting_matching(twist.x, l);
        const ProjectingMatching py = projecting_matching(twist.y, l);
        for (const auto* pm : {&px, &py}) {
            const AcyclicityResult acyclic = verify_acyclic(pm->cells, pm->matching);
            if (!acyclic.acyclic) report.fail(at + " projecting matching has a cycle");
            if (!verify_bounded(pm->cells, pm->matching).bounded) report.fail(at + " projecting matching is unbounded");
            if (acyclic.critical != pm->critical) report.fail(at + " critical cells disagree with the checker");
        }
        const auto cx = critical_cells(twist.x, l);
        const auto cy = critical_cells(twist.y, l);

        // The explicit bijection: images are distinct twistable light-like
        // sequences of Y with the same degree and length.
        std::set<Cell> images;
        for (const auto& s : px.critical) {
            const PointSequence t = sycamore_tau(twist, s);
            if (t.size() != s.size() || !is_sequence(Y, t) || seq_length(Y, t) != l ||
                !std::binary_search(py.critical.begin(), py.critical.end(), t)) {
                report.fail(at + " tau sends a twistable sequence outside the critical cells of Y");
                break;
            }
            images.insert(t);
        }
        if (images.size() != px.critical.size() || images.size() != py.critical.size()) {
            report.fail(at + " tau is not a bijection between critical cells");
        }
        long chi_x = 0, chi_y = 0;
        for (const auto& [dim, count] : cx) chi_x += (dim % 2 == 0 ? 1 : -1) * static_cast<long>(count);
        for (const auto& [dim, count] : cy) chi_y += (dim % 2 == 0 ? 1 : -1) * static_cast<long>(count);
        std::string counts;
        for (const auto& [dim, count] : cx) {
            const auto it = cy.find(dim);
            const std::size_t other = it == cy.end() ? 0 : it->second;
            counts += " dim " + std::to_string(dim) + ": " + std::to_string(count) + "/" + std::to_string(other);
        }
        if (cx != cy) report.fail(at + " critical counts differ:" + counts);
        if (chi_x != chi_y) report.fail(at + " Euler characteristics differ");
        report.note(at + counts + " chi " + std::to_string(chi_x) + "/" + std::to_string(chi_y));
    }
    const HahnPolynomial mx = magnitude(X, max_length);
    const HahnPolynomial my = magnitude(Y, max_length);
    if (mx != my) {
        report.fail("magnitudes differ: " + mx.str() + " vs " + my.str());
    } else {
        report.note("Mag = " + mx.str());
    }
    return report;
}

}  // namespace magtop
