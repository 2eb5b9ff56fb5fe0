#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "magtop/metric_space.hpp"

namespace magtop {

/// Visits every sequence from a to b whose length is at most max_length, in
/// lexicographic order of the point tuples. The callback receives the points
/// and the exact length.
void for_each_sequence(const MetricSpace& X, Point a, Point b, const Rational& max_length,
                       const std::function<void(std::span<const Point>, const Rational&)>& visit);

/// All sequences from a to b of length exactly l, in lexicographic order.
/// Depth-first search that prunes a branch once d(current, b) exceeds the
/// remaining budget.
std::vector<PointSequence> lightlike_sequences(const MetricSpace& X, Point a, Point b, const Rational& l);

/// Every length <= max_length realised by some sequence in X, ascending.
/// Always contains 0.
std::vector<Rational> achievable_lengths(const MetricSpace& X, const Rational& max_length);

/// Blocks of the finest partition of X with all cross distances > l.
/// Light-like sequences of length l never leave a block.
std::vector<std::vector<Point>> disjoint_split(const MetricSpace& X, const Rational& l);

/// Point of the space-time X x R.
struct CausalPoint {
    Point point = 0;
    Rational time;

    friend bool operator==(const CausalPoint&, const CausalPoint&) = default;
    /// Vertex order: by time, then by point index.
    friend std::strong_ordering operator<=>(const CausalPoint& lhs, const CausalPoint& rhs) {
        if (auto c = lhs.time <=> rhs.time; c != 0) return c;
        return lhs.point <=> rhs.point;
    }
};

/// Finite essential subposet of the causal interval between (a, 0) and (b, l)
/// under (x, t) <= (x', t') iff d(x, x') <= t' - t.
class CausalPoset {
public:
    CausalPoset() = default;
    CausalPoset(const MetricSpace& X, Point a, Point b, Rational l, std::vector<CausalPoint> elements);

    [[nodiscard]] Point a() const noexcept { return a_; }
    [[nodiscard]] Point b() const noexcept { return b_; }
    [[nodiscard]] const Rational& length() const noexcept { return length_; }
    [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
    [[nodiscard]] bool empty() const noexcept { return elements_.empty(); }
    [[nodiscard]] const std::vector<CausalPoint>& elements() const noexcept { return elements_; }
    [[nodiscard]] const CausalPoint& operator[](std::size_t i) const { return elements_[i]; }

    [[nodiscard]] bool leq(std::size_t i, std::size_t j) const { return leq_[i * elements_.size() + j]; }
    [[nodiscard]] std::optional<std::size_t> index_of(const CausalPoint& p) const;

private:
    Point a_ = 0;
    Point b_ = 0;
    Rational length_;
    std::vector<CausalPoint> elements_;  // sorted by (time, point)
    std::vector<bool> leq_;
};

/// Time stamps t_i = d(x_0, ..., x_i) of a sequence.
std::vector<CausalPoint> time_stamped(const MetricSpace& X, std::span<const Point> s);

/// Union of the time-stamped points of every light-like sequence from a to b
/// of length l.
CausalPoset essential_poset(const MetricSpace& X, Point a, Point b, const Rational& l);

}  // namespace magtop
