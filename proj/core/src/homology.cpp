#include "magtop/homology.hpp"

#include <algorithm>

#include "magtop/causal.hpp"
#include "magtop/parallel.hpp"
#include "magtop/smith.hpp"

namespace magtop {

std::size_t HomologySummary::betti(int k) const {
    const auto it = groups_.find(k);
    return it == groups_.end() ? 0 : it->second.betti;
}

std::vector<Integer> HomologySummary::torsion(int k) const {
    const auto it = groups_.find(k);
    return it == groups_.end() ? std::vector<Integer>{} : it->second.torsion;
}

long HomologySummary::euler_characteristic() const {
    long chi = 0;
    for (const auto& [k, h] : groups_) chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(h.betti);
    return chi;
}

std::size_t HomologySummary::total_betti() const {
    std::size_t n = 0;
    for (const auto& [k, h] : groups_) n += h.betti;
    return n;
}

void HomologySummary::set(int k, DegreeHomology h) {
    h.torsion = invariant_factors(std::move(h.torsion));
    h.torsion.erase(std::remove(h.torsion.begin(), h.torsion.end(), Integer(1)), h.torsion.end());
    if (h.betti == 0 && h.torsion.empty()) {
        groups_.erase(k);
    } else {
        groups_[k] = std::move(h);
    }
}

HomologySummary& HomologySummary::operator+=(const HomologySummary& rhs) {
    for (const auto& [k, h] : rhs.groups_) {
        DegreeHomology merged = groups_.count(k) ? groups_[k] : DegreeHomology{};
        merged.betti += h.betti;
        merged.torsion.insert(merged.torsion.end(), h.torsion.begin(), h.torsion.end());
        set(k, std::move(merged));
    }
    return *this;
}

HomologySummary HomologySummary::shifted(int shift) const {
    HomologySummary out;
    for (const auto& [k, h] : groups_) out.groups_[k + shift] = h;
    return out;
}

HomologySummary homology(const ChainComplex& cc) {
    cc.check_square_zero();
    HomologySummary out;
    if (cc.basis.empty()) return out;
    std::vector<SNFResult> snf;
    for (int d = cc.min_degree; d <= cc.max_degree() + 1; ++d) snf.push_back(smith_normal_form(cc.boundary_at(d)));
    for (int d = cc.min_degree; d <= cc.max_degree(); ++d) {
        const auto i = static_cast<std::size_t>(d - cc.min_degree);
        DegreeHomology h;
        h.betti = cc.rank(d) - snf[i].rank - snf[i + 1].rank;
        h.torsion = snf[i + 1].diag;
        out.set(d, std::move(h));
    }
    return out;
}

HomologySummary magnitude_homology(const MetricSpace& X, Point a, Point b, const Rational& l) {
    return homology(magnitude_chain_complex(X, a, b, l));
}

HomologySummary total_magnitude_homology(const MetricSpace& X, const Rational& l, unsigned jobs) {
    const auto n = X.size();
    std::vector<HomologySummary> parts(n * n);
    parallel_for(n * n, jobs, [&](std::size_t i) {
        const auto a = static_cast<Point>(i / n);
        const auto b = static_cast<Point>(i % n);
        if (X(a, b) <= l) parts[i] = magnitude_homology(X, a, b, l);
    });
    HomologySummary total;
    for (const auto& p : parts) total += p;
    return total;
}

}  // namespace magtop
