#include "magtop/simplicial.hpp"

#include <algorithm>
#include <ostream>

#include "magtop/errors.hpp"

namespace magtop {

SimplicialComplex SimplicialComplex::from_simplices(std::vector<Simplex> simplices) {
    std::vector<Simplex> closed;
    for (auto& s : simplices) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (s.empty()) continue;
        const std::size_t n = s.size();
        if (n > 20) throw InternalError("simplex too large to close under faces");
        for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
            Simplex face;
            for (std::size_t i = 0; i < n; ++i) {
                if (mask & (1UL << i)) face.push_back(s[i]);
            }
            closed.push_back(std::move(face));
        }
    }
    std::sort(closed.begin(), closed.end(), SimplexOrder{});
    closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
    if (closed.empty()) return empty_complex();
    return SimplicialComplex(ComplexState::nonempty, std::move(closed));
}

SimplicialComplex SimplicialComplex::from_face_closed(std::vector<Simplex> simplices) {
    std::sort(simplices.begin(), simplices.end(), SimplexOrder{});
    simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
    if (simplices.empty()) return empty_complex();
    SimplicialComplex out(ComplexState::nonempty, std::move(simplices));
    for (const auto& s : out.simplices_) {
        if (s.size() < 2) continue;
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex face = s;
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
            if (!out.contains(face)) throw InternalError("simplex list is not closed under faces");
        }
    }
    return out;
}

bool SimplicialComplex::contains(const Simplex& s) const {
    return std::binary_search(simplices_.begin(), simplices_.end(), s, SimplexOrder{});
}

int SimplicialComplex::dimension() const {
    if (simplices_.empty()) return -1;
    return static_cast<int>(simplices_.back().size()) - 1;
}

std::vector<Simplex> SimplicialComplex::facets() const {
    std::vector<Simplex> out;
    for (const auto& s : simplices_) {
        bool maximal = true;
        for (const auto& t : simplices_) {
            if (t.size() == s.size() + 1 && std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(s);
    }
    return out;
}

std::vector<Simplex> SimplicialPair::relative_simplices() const {
    std::vector<Simplex> out;
    for (const auto& s : total.simplices()) {
        if (!sub.contains(s)) out.push_back(s);
    }
    return out;
}

PointSequence SimplicialPair::points_of(const Simplex& s) const {
    PointSequence out;
    out.reserve(s.size());
    for (int v : s) out.push_back(vertices[static_cast<std::size_t>(v)].point);
    return out;
}

std::vector<Simplex> poset_chains(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq) {
    std::vector<Simplex> out;
    Simplex chain;
    std::function<void(std::size_t)> extend = [&](std::size_t last) {
        for (std::size_t j = last + 1; j < n; ++j) {
            if (!leq(last, j)) continue;
            chain.push_back(static_cast<int>(j));
            out.push_back(chain);
            extend(j);
            chain.pop_back();
        }
    };
    for (std::size_t i = 0; i < n; ++i) {
        chain.assign(1, static_cast<int>(i));
        out.push_back(chain);
        extend(i);
    }
    std::sort(out.begin(), out.end(), SimplexOrder{});
    return out;
}

namespace {

SimplicialComplex complex_or_empty(std::vector<Simplex> simplices) {
    return SimplicialComplex::from_face_closed(std::move(simplices));
}

}  // namespace

SimplicialPair order_complex_pair(const MetricSpace& X, Point a, Point b, const Rational& l) {
    const CausalPoset P = essential_poset(X, a, b, l);
    SimplicialPair pair;
    pair.vertices = P.elements();
    if (P.empty()) {
        pair.total = SimplicialComplex::empty_complex();
        pair.sub = SimplicialComplex::empty_complex();
        return pair;
    }
    std::vector<Simplex> chains = poset_chains(P.size(), [&](std::size_t i, std::size_t j) { return P.leq(i, j); });
    std::vector<Simplex> shorter;
    for (const auto& c : chains) {
        if (seq_length(X, pair.points_of(c)) < l) shorter.push_back(c);
    }
    pair.total = complex_or_empty(std::move(chains));
    pair.sub = complex_or_empty(std::move(shorter));
    return pair;
}

SimplicialPair ai_pair(const MetricSpace& X, Point a, Point b, const Rational& l) {
    if (l.sign() <= 0) throw InvalidLength("the pair (K_l, K'_l) needs l > 0, got " + l.str());
    SimplicialPair pair;
    if (X(a, b) > l) return pair;  // (void, void)

    const CausalPoset P = essential_poset(X, a, b, l);
    const CausalPoint start{a, Rational(0)};
    const CausalPoint end{b, l};
    std::vector<std::size_t> inner;
    for (std::size_t i = 0; i < P.size(); ++i) {
        if (P[i] != start && P[i] != end) {
            inner.push_back(i);
            pair.vertices.push_back(P[i]);
        }
    }
    std::vector<Simplex> chains =
        poset_chains(inner.size(), [&](std::size_t i, std::size_t j) { return P.leq(inner[i], inner[j]); });

    if (X(a, b) < l) {
        std::vector<Simplex> shorter;
        for (const auto& c : chains) {
            PointSequence s{a};
            for (Point x : pair.points_of(c)) s.push_back(x);
            s.push_back(b);
            if (seq_length(X, s) < l) shorter.push_back(c);
        }
        pair.sub = complex_or_empty(std::move(shorter));
    }
    pair.total = complex_or_empty(std::move(chains));
    return pair;
}

SimplicialPair interval_complex(const MetricSpace& X, Point a, Point b) {
    if (a == b) throw InvalidLength("interval complex needs distinct endpoints");
    const IntervalPoset I = interval(X, a, b, IntervalKind::closed);
    SimplicialPair pair;
    for (Point x : I.carrier) pair.vertices.push_back({x, X(a, x)});
    std::vector<Simplex> chains =
        poset_chains(I.carrier.size(), [&](std::size_t i, std::size_t j) { return static_cast<bool>(I.leq[i][j]); });
    std::vector<Simplex> missing;
    for (const auto& c : chains) {
        const PointSequence pts = pair.points_of(c);
        if (pts.front() != a || pts.back() != b) missing.push_back(c);
    }
    pair.total = complex_or_empty(std::move(chains));
    pair.sub = complex_or_empty(std::move(missing));
    return pair;
}

void dump_pair(std::ostream& os, const MetricSpace& X, const SimplicialPair& pair) {
    for (const auto& s : pair.total.simplices()) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            const auto& v = pair.vertices[static_cast<std::size_t>(s[i])];
            if (i > 0) os << ' ';
            os << '(' << X.label(v.point) << ',' << v.time << ')';
        }
        os << '\t' << (pair.sub.contains(s) ? 'S' : 'T') << '\n';
    }
}

}  // namespace magtop
