#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <vector>

#include "magtop/causal.hpp"
#include "magtop/metric_space.hpp"

namespace magtop {

/// Nonempty simplex as a strictly increasing list of vertex indices.
using Simplex = std::vector<int>;

/// Orders simplices by dimension, then lexicographically.
struct SimplexOrder {
    bool operator()(const Simplex& lhs, const Simplex& rhs) const {
        if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
        return lhs < rhs;
    }
};

/// void: no simplices at all, not even the empty one.
/// empty: only the empty simplex.
/// nonempty: at least one vertex.
enum class ComplexState { void_complex, empty_complex, nonempty };

/// Finite simplicial complex with the void / empty distinction. The empty
/// simplex is implicit in every non-void complex and never stored.
class SimplicialComplex {
public:
    static SimplicialComplex void_complex() { return SimplicialComplex(ComplexState::void_complex, {}); }
    static SimplicialComplex empty_complex() { return SimplicialComplex(ComplexState::empty_complex, {}); }
    /// Closes the given simplices under faces. No simplices gives the empty complex.
    static SimplicialComplex from_simplices(std::vector<Simplex> simplices);
    /// For lists already closed under faces (checked on codimension one faces).
    static SimplicialComplex from_face_closed(std::vector<Simplex> simplices);

    [[nodiscard]] ComplexState state() const noexcept { return state_; }
    [[nodiscard]] bool is_void() const noexcept { return state_ == ComplexState::void_complex; }
    /// Sorted by SimplexOrder.
    [[nodiscard]] const std::vector<Simplex>& simplices() const noexcept { return simplices_; }
    [[nodiscard]] bool contains(const Simplex& s) const;
    /// -1 for the empty and the void complex.
    [[nodiscard]] int dimension() const;
    [[nodiscard]] std::vector<Simplex> facets() const;

private:
    SimplicialComplex(ComplexState state, std::vector<Simplex> simplices)
        : state_(state), simplices_(std::move(simplices)) {}

    ComplexState state_ = ComplexState::void_complex;
    std::vector<Simplex> simplices_;
};

/// A complex with a subcomplex over a common list of causal vertices.
struct SimplicialPair {
    std::vector<CausalPoint> vertices;
    SimplicialComplex total = SimplicialComplex::void_complex();
    SimplicialComplex sub = SimplicialComplex::void_complex();

    /// Simplices of total that are not in sub, sorted by SimplexOrder.
    [[nodiscard]] std::vector<Simplex> relative_simplices() const;
    /// Point sequence underlying a simplex.
    [[nodiscard]] PointSequence points_of(const Simplex& s) const;
};

/// All nonempty chains of a finite poset on {0, ..., n-1} whose order is
/// compatible with the index order (i <= j in the poset implies i <= j).
std::vector<Simplex> poset_chains(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq);

/// (Delta Cau_ess, chains of length < l). When Cau_ess is empty both parts
/// are the empty complex; otherwise a sub without vertices is the empty
/// complex as well, so the relative chains carry no degree -1 term.
SimplicialPair order_complex_pair(const MetricSpace& X, Point a, Point b, const Rational& l);

/// (K_l, K'_l) with the void / empty table. Throws InvalidLength for l <= 0.
SimplicialPair ai_pair(const MetricSpace& X, Point a, Point b, const Rational& l);

/// (Delta I[a, b], chains missing a or b); vertices are timed by d(a, x).
/// Throws InvalidLength when a == b.
SimplicialPair interval_complex(const MetricSpace& X, Point a, Point b);

/// One simplex per line as "(label,time) ..." followed by T (total only) or S (in sub).
void dump_pair(std::ostream& os, const MetricSpace& X, const SimplicialPair& pair);

}  // namespace magtop
