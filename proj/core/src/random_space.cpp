#include "magtop/random_space.hpp"

#include <string>
#include <vector>

namespace magtop {

namespace {

Rational random_weight(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(1, 6);
    std::uniform_int_distribution<long> den(1, 3);
    const long p = num(rng);
    const long q = den(rng);
    return Rational(p) / Rational(q);
}

std::vector<std::string> labels(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i));
    return out;
}

}  // namespace

MetricSpace random_rational_space(std::size_t n, std::mt19937_64& rng) {
    auto names = labels(n);
    std::vector<WeightedEdge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) edges.push_back({names[i], names[j], random_weight(rng)});
    }
    return MetricSpace::from_weighted_graph(std::move(names), edges);
}

MetricSpace random_tree(std::size_t n, std::mt19937_64& rng) {
    auto names = labels(n);
    std::vector<WeightedEdge> edges;
    for (std::size_t i = 1; i < n; ++i) {
        std::uniform_int_distribution<std::size_t> parent(0, i - 1);
        edges.push_back({names[parent(rng)], names[i], random_weight(rng)});
    }
    return MetricSpace::from_weighted_graph(std::move(names), edges);
}

}  // namespace magtop
