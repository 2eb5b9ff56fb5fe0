#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "magtop/chain_complex.hpp"
#include "magtop/metric_space.hpp"
#include "magtop/rational.hpp"

namespace magtop {

struct DegreeHomology {
    std::size_t betti = 0;
    /// Invariant factors greater than one.
    std::vector<Integer> torsion;

    friend bool operator==(const DegreeHomology&, const DegreeHomology&) = default;
};

/// Integral homology by degree. Degrees with trivial homology are not stored,
/// so two summaries compare equal exactly when the groups are isomorphic.
class HomologySummary {
public:
    [[nodiscard]] const std::map<int, DegreeHomology>& groups() const& noexcept { return groups_; }
    /// By value on temporaries, so `for (auto& g : homology(cc).groups())` is safe.
    [[nodiscard]] std::map<int, DegreeHomology> groups() && { return std::move(groups_); }
    [[nodiscard]] std::size_t betti(int k) const;
    [[nodiscard]] std::vector<Integer> torsion(int k) const;
    [[nodiscard]] bool is_zero() const noexcept { return groups_.empty(); }
    /// Sum of (-1)^k betti_k.
    [[nodiscard]] long euler_characteristic() const;
    [[nodiscard]] std::size_t total_betti() const;

    void set(int k, DegreeHomology h);
    /// Direct sum.
    HomologySummary& operator+=(const HomologySummary& rhs);
    /// Same groups in degree k + shift.
    [[nodiscard]] HomologySummary shifted(int shift) const;

    friend bool operator==(const HomologySummary&, const HomologySummary&) = default;

private:
    std::map<int, DegreeHomology> groups_;
};

/// Checks that the boundary squares to zero, then reads Betti numbers and
/// torsion off the Smith normal forms of the boundary maps.
HomologySummary homology(const ChainComplex& cc);

HomologySummary magnitude_homology(const MetricSpace& X, Point a, Point b, const Rational& l);

/// Direct sum over all ordered pairs (a, b), computed on `jobs` threads.
HomologySummary total_magnitude_homology(const MetricSpace& X, const Rational& l, unsigned jobs = 1);

}  // namespace magtop
