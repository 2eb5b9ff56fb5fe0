#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "magtop/metric_space.hpp"
#include "magtop/report.hpp"

namespace magtop {

/// Singular subsequence of a sequence; endpoints always included.
struct Frame {
    PointSequence points;
    Rational length;

    friend bool operator==(const Frame&, const Frame&) = default;
};

Frame frame_of(const MetricSpace& X, std::span<const Point> s);

/// True when every point of s is singular in s.
bool is_singular_sequence(const MetricSpace& X, std::span<const Point> s);

/// Singular sequences from a to b of length l, lexicographically ordered.
/// Throws FourCutObstruction when l >= m_X.
std::vector<Frame> singular_sequences(const MetricSpace& X, Point a, Point b, const Rational& l);

/// Rational Betti numbers of the reduced homology of Delta I(a, b), the open
/// interval; the empty interval has a single class in degree -1.
std::map<int, std::size_t> open_interval_betti(const MetricSpace& X, Point a, Point b);

/// Sum over singular sequences F from a to b of length l of the convolution
/// of the factors' reduced Betti numbers, each shifted up by two. Throws
/// FourCutObstruction when l >= m_X.
std::map<int, std::size_t> framed_betti_prediction(const MetricSpace& X, Point a, Point b, const Rational& l);

/// Singular sequences of length l (any endpoints) whose consecutive open
/// intervals are all empty.
std::vector<Frame> thin_frames(const MetricSpace& X, const Rational& l);

/// Prediction against Smith normal form Betti numbers for every pair and every
/// achievable l <= max_length with l < m_X.
CheckReport verify_frames(const MetricSpace& X, const Rational& max_length);

/// Hasse diagram of the extended face poset of a complex as a weighted graph.
struct HasseGraph {
    std::vector<std::string> vertices;
    std::vector<WeightedEdge> edges;
    std::string bottom = "0^";
    std::string top = "1^";
    /// n + 2 for an n-dimensional complex; equals d(bottom, top).
    Rational length;

    [[nodiscard]] MetricSpace space() const { return MetricSpace::from_weighted_graph(vertices, edges); }
};

/// Facets are lists of vertex names. Faces are labelled "{v1,v2,...}" with the
/// names sorted. Edges between a maximal face sigma and the top have length
/// n + 1 - dim sigma, all other edges length 1. Throws EmptyComplex.
HasseGraph hasse_graph(const std::vector<std::vector<std::string>>& facets);

}  // namespace magtop
