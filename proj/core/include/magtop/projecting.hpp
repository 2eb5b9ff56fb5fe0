#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "magtop/gluing.hpp"
#include "magtop/morse.hpp"
#include "magtop/report.hpp"
#include "magtop/series.hpp"

namespace magtop {

enum class SequenceKind { flat, sticky, twistable };

/// Classification of a sequence in a glued space. A flat sequence is also
/// twistable (with no splits); `kind` reports the most specific label.
struct SequenceClass {
    SequenceKind kind = SequenceKind::flat;
    /// All sticky subsequences as (start, end) index pairs, by start.
    std::vector<std::pair<std::size_t, std::size_t>> sticky;
    /// For twistable sequences: indices of the concatenation points, all neutral.
    std::vector<std::size_t> splits;
};

bool is_flat(const GluingSpec& g, std::span<const Point> s);
SequenceClass classify_sequence(const GluingSpec& g, std::span<const Point> s);

/// Projecting matching on the light-like sequences of length l of the glued
/// space (all endpoint pairs). Cells are point sequences.
struct ProjectingMatching {
    Rational length;
    /// Light-like sequences of length l, sorted.
    std::vector<Cell> cells;
    Matching matching;
    /// Unmatched light-like sequences, sorted.
    std::vector<Cell> critical;
};

/// Applies the insert/delete rule at the first sticky subsequence of each
/// light-like sequence and checks that the rule is an involution. Throws
/// GateMissing when a biased endpoint has no gate and NotAMatching when the
/// rule fails to pair cells consistently.
ProjectingMatching projecting_matching(const GluingSpec& g, const Rational& l);

/// Critical light-like cells counted by dimension. Also checks they are
/// exactly the twistable light-like sequences; throws InternalError otherwise.
std::map<std::size_t, std::size_t> critical_cells(const GluingSpec& g, const Rational& l);

/// X = G ∪_K H and Y glued through the isometry alpha of K: the K point at
/// position k of the G list meets the H point at position alpha[k].
struct SycamoreTwist {
    GluingSpec x;
    GluingSpec y;
    std::vector<std::size_t> alpha;
    std::vector<std::size_t> alpha_inverse;
};

/// Checks that alpha is an isometry of K and that every neutral point h
/// satisfies d(h, k) = d(h, alpha(k)). Throws NotASycamoreTwist with a witness.
SycamoreTwist make_sycamore_twist(const MetricSpace& G, const MetricSpace& H, std::vector<Point> k_in_g,
                                  std::vector<Point> k_in_h, std::vector<std::size_t> alpha);

/// Image of a twistable sequence of X in Y: flat pieces inside G ∪ H_0 are
/// fixed, the other pieces move their K points by alpha^{-1}.
PointSequence sycamore_tau(const SycamoreTwist& twist, std::span<const Point> s);

/// For every achievable l <= max_length of X or Y: critical-cell counts by
/// dimension, the explicit tau bijection, Euler characteristics, acyclicity
/// and boundedness of both matchings; finally the truncated magnitudes.
CheckReport verify_sycamore(const SycamoreTwist& twist, const Rational& max_length);

}  // namespace magtop
