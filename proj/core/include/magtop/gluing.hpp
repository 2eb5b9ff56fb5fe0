#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "magtop/metric_space.hpp"

namespace magtop {

/// Where a point of the glued space X = G ∪_K H comes from.
enum class Region {
    interior_g,  // G minus the image of K
    boundary,    // the image of K
    biased,      // H minus K, projecting to K through a unique gate
    neutral,     // H minus K, not projecting to K
};

/// Gluing of G and H along a common finite K.
///
/// Point layout of the glued space: the points of G keep their indices, then
/// the points of H minus K follow in H order. K is addressed by position in
/// the two embedding lists.
struct GluingSpec {
    MetricSpace G;
    MetricSpace H;
    std::vector<Point> k_in_g;
    std::vector<Point> k_in_h;
    MetricSpace glued;

    /// Glued index of every point of H.
    std::vector<Point> h_to_glued;
    /// Region of every glued point.
    std::vector<Region> region;
    /// For biased H points, the K position of the gate pi(y); empty otherwise.
    std::vector<std::optional<std::size_t>> gate;
    /// Points of H (H indices) that are biased / neutral.
    std::vector<Point> biased;
    std::vector<Point> neutral;

    [[nodiscard]] std::size_t k_size() const noexcept { return k_in_g.size(); }
    /// Glued index of the K point at position k.
    [[nodiscard]] Point k_point(std::size_t k) const { return k_in_g.at(k); }
    /// Glued index of the gate of a glued biased point.
    [[nodiscard]] Point gate_of_glued(Point x) const;
    /// K as a metric space (induced from G).
    [[nodiscard]] MetricSpace k_space() const;

    [[nodiscard]] bool in_g(Point x) const { return region[x] == Region::interior_g || region[x] == Region::boundary; }
    [[nodiscard]] bool in_h(Point x) const { return region[x] != Region::interior_g; }
};

/// Throws EmptyK when K is empty and NotIsometricEmbedding when the two
/// embeddings disagree on a pair. Labels of H minus K that collide with labels
/// of G are prefixed with "H:".
GluingSpec glue(const MetricSpace& G, const MetricSpace& H, std::vector<Point> k_in_g, std::vector<Point> k_in_h);

}  // namespace magtop
