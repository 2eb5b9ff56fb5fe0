#pragma once

#include <cstddef>
#include <random>

#include "magtop/metric_space.hpp"

namespace magtop {

/// Shortest-path metric of a complete graph with weights p/q, 1 <= p <= 6,
/// 1 <= q <= 3. Labels are "x0", "x1", ...
MetricSpace random_rational_space(std::size_t n, std::mt19937_64& rng);

/// Random tree on n vertices with the same weight distribution.
MetricSpace random_tree(std::size_t n, std::mt19937_64& rng);

}  // namespace magtop
