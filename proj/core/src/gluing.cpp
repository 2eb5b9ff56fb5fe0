#include "magtop/gluing.hpp"

#include <algorithm>
#include <set>

#include "magtop/errors.hpp"

namespace magtop {

Point GluingSpec::gate_of_glued(Point x) const {
    const auto it = std::find(h_to_glued.begin(), h_to_glued.end(), x);
    if (it == h_to_glued.end()) throw GateMissing("point is not in H");
    const auto& g = gate[static_cast<std::size_t>(it - h_to_glued.begin())];
    if (!g) throw GateMissing("point " + glued.label(x) + " has no gate");
    return k_point(*g);
}

MetricSpace GluingSpec::k_space() const { return G.subspace(k_in_g); }

GluingSpec glue(const MetricSpace& G, const MetricSpace& H, std::vector<Point> k_in_g, std::vector<Point> k_in_h) {
    if (k_in_g.empty() || k_in_h.empty()) throw EmptyK("gluing along an empty K");
    if (k_in_g.size() != k_in_h.size()) throw NotIsometricEmbedding(0, 0, "K lists have different sizes");
    const std::size_t nk = k_in_g.size();
    for (std::size_t i = 0; i < nk; ++i) {
        if (k_in_g[i] < 0 || static_cast<std::size_t>(k_in_g[i]) >= G.size() || k_in_h[i] < 0 ||
            static_cast<std::size_t>(k_in_h[i]) >= H.size()) {
            throw LabelError("K point out of range");
        }
    }
    for (std::size_t i = 0; i < nk; ++i) {
        for (std::size_t j = 0; j < nk; ++j) {
            if (G(k_in_g[i], k_in_g[j]) != H(k_in_h[i], k_in_h[j])) {
                throw NotIsometricEmbedding(i, j, "K embeddings disagree on (" + G.label(k_in_g[i]) + ", " +
                                                      G.label(k_in_g[j]) + ")");
            }
        }
    }
    for (std::size_t i = 0; i < nk; ++i) {
        for (std::size_t j = i + 1; j < nk; ++j) {
            if (k_in_g[i] == k_in_g[j]) throw NotIsometricEmbedding(i, j, "K list repeats a point");
        }
    }

    const auto ng = G.size();
    const auto nh = H.size();
    std::vector<Point> h_to_glued(nh, -1);
    std::vector<std::optional<std::size_t>> h_k(nh);
    for (std::size_t i = 0; i < nk; ++i) {
        h_to_glued[static_cast<std::size_t>(k_in_h[i])] = k_in_g[i];
        h_k[static_cast<std::size_t>(k_in_h[i])] = i;
    }
    std::set<std::string> g_labels(G.labels().begin(), G.labels().end());
    std::vector<std::string> labels = G.labels();
    std::vector<Point> h_interior;
    for (std::size_t y = 0; y < nh; ++y) {
        if (h_k[y]) continue;
        h_to_glued[y] = static_cast<Point>(labels.size());
        const auto& name = H.label(static_cast<Point>(y));
        labels.push_back(g_labels.count(name) ? "H:" + name : name);
        h_interior.push_back(static_cast<Point>(y));
    }
    const std::size_t n = labels.size();

    // Inverse of the layout: for each glued point, its G index or H index.
    std::vector<std::optional<Point>> as_g(n);
    std::vector<std::optional<Point>> as_h(n);
    for (std::size_t x = 0; x < ng; ++x) as_g[x] = static_cast<Point>(x);
    for (std::size_t y = 0; y < nh; ++y) as_h[static_cast<std::size_t>(h_to_glued[y])] = static_cast<Point>(y);

    std::vector<std::vector<Rational>> dist(n, std::vector<Rational>(n));
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (as_g[x] && as_g[y]) {
                dist[x][y] = G(*as_g[x], *as_g[y]);
            } else if (as_h[x] && as_h[y]) {
                dist[x][y] = H(*as_h[x], *as_h[y]);
            } else {
                const bool x_in_g = as_g[x].has_value();
                const Point g = x_in_g ? *as_g[x] : *as_g[y];
                const Point h = x_in_g ? *as_h[y] : *as_h[x];
                std::optional<Rational> best;
                for (std::size_t k = 0; k < nk; ++k) {
                    Rational via = G(g, k_in_g[k]) + H(k_in_h[k], h);
                    if (!best || via < *best) best = std::move(via);
                }
                dist[x][y] = *best;
            }
        }
    }

    GluingSpec spec{G, H, k_in_g, k_in_h, MetricSpace::from_distance_matrix(labels, std::move(dist)), h_to_glued,
                    std::vector<Region>(n, Region::interior_g), std::vector<std::optional<std::size_t>>(nh), {}, {}};
    for (std::size_t k = 0; k < nk; ++k) spec.region[static_cast<std::size_t>(k_in_g[k])] = Region::boundary;
    for (const Point y : h_interior) {
        std::vector<std::size_t> gates;
        for (std::size_t p = 0; p < nk; ++p) {
            const Point gp = k_in_h[p];
            bool projects = true;
            for (std::size_t k = 0; k < nk && projects; ++k) {
                projects = H(k_in_h[k], y) == H(k_in_h[k], gp) + H(gp, y);
            }
            if (projects) gates.push_back(p);
        }
        if (gates.size() > 1) {
            // Two gates p1, p2 force d(p1, p2) <= 0; unreachable for a valid metric.
            throw InternalError("point " + H.label(y) + " has more than one gate");
        }
        const auto gx = static_cast<std::size_t>(h_to_glued[static_cast<std::size_t>(y)]);
        if (gates.empty()) {
            spec.region[gx] = Region::neutral;
            spec.neutral.push_back(y);
        } else {
            spec.region[gx] = Region::biased;
            spec.gate[static_cast<std::size_t>(y)] = gates.front();
            spec.biased.push_back(y);
        }
    }
    return spec;
}

}  // namespace magtop
