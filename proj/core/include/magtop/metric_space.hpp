#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "magtop/rational.hpp"

namespace magtop {

/// Index of a point in a MetricSpace.
using Point = int;

/// Points (x_0, ..., x_k) of a sequence of degree k. Consecutive entries are
/// distinct; see is_sequence().
using PointSequence = std::vector<Point>;

struct WeightedEdge {
    std::string u;
    std::string v;
    Rational weight;
};

/// Finite metric space with an exact rational distance matrix.
///
/// Instances are immutable and always satisfy the metric axioms; the
/// factories validate them exhaustively.
class MetricSpace {
public:
    /// Validates symmetry, zero diagonal, positivity off the diagonal and every
    /// triangle inequality. Throws a MetricError subclass naming a witness.
    static MetricSpace from_distance_matrix(std::vector<std::string> labels,
                                            std::vector<std::vector<Rational>> dist);

    /// All-pairs shortest path metric of a connected graph with positive weights.
    static MetricSpace from_weighted_graph(std::vector<std::string> vertices, const std::vector<WeightedEdge>& edges);

    [[nodiscard]] std::size_t size() const noexcept { return labels_.size(); }
    [[nodiscard]] const std::string& label(Point p) const { return labels_.at(static_cast<std::size_t>(p)); }
    [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }

    /// Throws LabelError when the label is unknown.
    [[nodiscard]] Point index_of(const std::string& label) const;

    [[nodiscard]] const Rational& operator()(Point x, Point y) const {
        return dist_[static_cast<std::size_t>(x) * labels_.size() + static_cast<std::size_t>(y)];
    }

    /// Minimum positive distance r_0, or nothing for a one-point space.
    [[nodiscard]] std::optional<Rational> min_positive_distance() const;
    [[nodiscard]] Rational diameter() const;

    /// Distinct positive distances in increasing order.
    [[nodiscard]] std::vector<Rational> positive_distances() const;

    /// Metric subspace on the given points, in the given order.
    [[nodiscard]] MetricSpace subspace(std::span<const Point> points) const;

    friend bool operator==(const MetricSpace& lhs, const MetricSpace& rhs) = default;

private:
    MetricSpace(std::vector<std::string> labels, std::vector<Rational> dist)
        : labels_(std::move(labels)), dist_(std::move(dist)) {}

    std::vector<std::string> labels_;
    std::vector<Rational> dist_;  // row-major
};

/// True when consecutive entries differ and every index is a point of X.
bool is_sequence(const MetricSpace& X, std::span<const Point> s);

/// d(x_0, x_1) + ... + d(x_{k-1}, x_k); zero for degree 0.
Rational seq_length(const MetricSpace& X, std::span<const Point> s);

/// An interior point x_k is smooth when removing it keeps the length.
/// Endpoints are always singular.
bool is_smooth(const MetricSpace& X, std::span<const Point> s, std::size_t k);

/// Product space with the l1-sum metric. Point (i, j) has index i * |Y| + j
/// and label "(x,y)".
MetricSpace product(const MetricSpace& X, const MetricSpace& Y);

enum class IntervalKind { closed, open, half_open_left, half_open_right };

/// Interval poset between a and b: points x with d(a, x, b) = d(a, b), minus the
/// endpoints the kind excludes. half_open_left is I(a, b], half_open_right is I[a, b).
struct IntervalPoset {
    Point a = 0;
    Point b = 0;
    IntervalKind kind = IntervalKind::closed;
    /// Sorted by (d(a, x), x).
    std::vector<Point> carrier;
    /// leq[i][j] iff carrier[i] <= carrier[j], i.e. d(a, x, y, b) = d(a, b).
    std::vector<std::vector<bool>> leq;

    [[nodiscard]] bool empty() const noexcept { return carrier.empty(); }
    [[nodiscard]] bool is_totally_ordered() const;
};

IntervalPoset interval(const MetricSpace& X, Point a, Point b, IntervalKind kind);

/// Result of the exhaustive 4-cut scan. m_x is empty when X has no 4-cut
/// (m_X is infinite).
struct FourCutScan {
    std::vector<std::array<Point, 4>> cuts;
    std::optional<Rational> m_x;

    /// True when l < m_X.
    [[nodiscard]] bool below(const Rational& l) const { return !m_x || l < *m_x; }
};

FourCutScan four_cuts(const MetricSpace& X);

/// Diameter at most 2 plus the paw condition on every triple.
bool is_pawful(const MetricSpace& X);

}  // namespace magtop
