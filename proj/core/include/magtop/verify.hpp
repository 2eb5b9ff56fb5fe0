#pragma once

#include <vector>

#include "magtop/homology.hpp"
#include "magtop/metric_space.hpp"
#include "magtop/report.hpp"

namespace magtop {

/// Matches the magnitude chain complex against the relative chains of
/// order_complex_pair: the time-stamp map must be a degreewise bijection of
/// bases that carries one boundary matrix onto the other, entry by entry.
CheckReport verify_mainisom(const MetricSpace& X, Point a, Point b, const Rational& l);

/// MH_k = H_{k-2}(K_l, K'_l) for every k, with augmented relative homology.
CheckReport verify_double_suspension(const MetricSpace& X, Point a, Point b, const Rational& l);

struct BettiRow {
    Rational length;
    Point a = 0;
    Point b = 0;
    HomologySummary homology;
};

/// Homology for every achievable l <= max_length and every ordered pair with
/// d(a, b) <= l, sorted by (l, a, b).
std::vector<BettiRow> betti_table(const MetricSpace& X, const Rational& max_length, unsigned jobs = 1);

/// Rational Betti numbers of X x Y against the convolution of the factors'
/// Betti numbers over l1 + l2 = l and i + j = n, for all achievable l <= max_length
/// and all pairs of product points.
CheckReport verify_kunneth(const MetricSpace& X, const MetricSpace& Y, const Rational& max_length,
                           unsigned jobs = 1);

}  // namespace magtop
