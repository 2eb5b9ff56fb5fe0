#include "magtop/metric_space.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "magtop/errors.hpp"

namespace magtop {

namespace {

std::string witness_labels(const std::vector<std::string>& labels, std::initializer_list<std::size_t> idx) {
    std::string out = "(";
    bool first = true;
    for (auto i : idx) {
        if (!first) out += ", ";
        out += labels[i];
        first = false;
    }
    return out + ")";
}

void check_labels(const std::vector<std::string>& labels) {
    if (labels.empty()) throw MetricError("empty metric space");
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) throw ParseError("duplicate point label '" + *dup + "'");
}

}  // namespace

MetricSpace MetricSpace::from_distance_matrix(std::vector<std::string> labels,
                                              std::vector<std::vector<Rational>> dist) {
    check_labels(labels);
    const std::size_t n = labels.size();
    if (dist.size() != n) throw ParseError("distance matrix does not match the number of labels");
    for (const auto& row : dist) {
        if (row.size() != n) throw ParseError("distance matrix is not square");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!dist[i][i].is_zero()) {
            throw MetricError("nonzero diagonal entry at " + labels[i]);
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (dist[i][j].sign() < 0) {
                throw NegativeDistance("negative distance " + witness_labels(labels, {i, j}));
            }
            if (dist[i][j] != dist[j][i]) {
                throw AsymmetryError(i, j, "asymmetric distance " + witness_labels(labels, {i, j}));
            }
            if (i != j && dist[i][j].is_zero()) {
                throw ZeroOffDiagonal("zero distance between distinct points " + witness_labels(labels, {i, j}));
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                if (dist[i][k] > dist[i][j] + dist[j][k]) {
                    throw TriangleViolation({i, j, k}, "triangle inequality fails for " + witness_labels(labels, {i, j, k}));
                }
            }
        }
    }
    std::vector<Rational> flat;
    flat.reserve(n * n);
    for (auto& row : dist) {
        for (auto& v : row) flat.push_back(std::move(v));
    }
    return MetricSpace(std::move(labels), std::move(flat));
}

MetricSpace MetricSpace::from_weighted_graph(std::vector<std::string> vertices, const std::vector<WeightedEdge>& edges) {
    check_labels(vertices);
    const std::size_t n = vertices.size();
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index.emplace(vertices[i], i);
    auto lookup = [&](const std::string& name) {
        const auto it = index.find(name);
        if (it == index.end()) throw LabelError("edge endpoint '" + name + "' is not a vertex");
        return it->second;
    };

    std::vector<std::optional<Rational>> d(n * n);
    for (std::size_t i = 0; i < n; ++i) d[i * n + i] = Rational(0);
    for (const auto& e : edges) {
        const auto u = lookup(e.u);
        const auto v = lookup(e.v);
        if (e.weight.sign() <= 0) throw NonpositiveWeight("nonpositive weight on edge " + e.u + "-" + e.v);
        if (u == v) throw MetricError("self-loop at " + e.u);
        auto& slot = d[u * n + v];
        if (!slot || e.weight < *slot) {
            slot = e.weight;
            d[v * n + u] = e.weight;
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!d[i * n + k]) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (!d[k * n + j]) continue;
                Rational via = *d[i * n + k] + *d[k * n + j];
                auto& slot = d[i * n + j];
                if (!slot || via < *slot) slot = std::move(via);
            }
        }
    }
    std::vector<Rational> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n * n; ++i) {
        if (!d[i]) {
            throw DisconnectedGraph("graph is disconnected: no path " + vertices[i / n] + " -> " + vertices[i % n]);
        }
        flat.push_back(*d[i]);
    }
    return MetricSpace(std::move(vertices), std::move(flat));
}

Point MetricSpace::index_of(const std::string& label) const {
    const auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw LabelError("unknown point label '" + label + "'");
    return static_cast<Point>(it - labels_.begin());
}

std::optional<Rational> MetricSpace::min_positive_distance() const {
    std::optional<Rational> best;
    for (const auto& v : dist_) {
        if (v.sign() > 0 && (!best || v < *best)) best = v;
    }
    return best;
}

Rational MetricSpace::diameter() const { return *std::max_element(dist_.begin(), dist_.end()); }

std::vector<Rational> MetricSpace::positive_distances() const {
    std::vector<Rational> out;
    for (const auto& v : dist_) {
        if (v.sign() > 0) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

MetricSpace MetricSpace::subspace(std::span<const Point> points) const {
    std::vector<std::string> labels;
    std::vector<Rational> flat;
    labels.reserve(points.size());
    for (auto p : points) labels.push_back(label(p));
    for (auto p : points) {
        for (auto q : points) flat.push_back((*this)(p, q));
    }
    check_labels(labels);
    return MetricSpace(std::move(labels), std::move(flat));
}

bool is_sequence(const MetricSpace& X, std::span<const Point> s) {
    if (s.empty()) return false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || static_cast<std::size_t>(s[i]) >= X.size()) return false;
        if (i > 0 && s[i - 1] == s[i]) return false;
    }
    return true;
}

Rational seq_length(const MetricSpace& X, std::span<const Point> s) {
    Rational total;
    for (std::size_t i = 1; i < s.size(); ++i) total += X(s[i - 1], s[i]);
    return total;
}

bool is_smooth(const MetricSpace& X, std::span<const Point> s, std::size_t k) {
    if (k == 0 || k + 1 >= s.size()) return false;
    return X(s[k - 1], s[k]) + X(s[k], s[k + 1]) == X(s[k - 1], s[k + 1]);
}

MetricSpace product(const MetricSpace& X, const MetricSpace& Y) {
    const std::size_t nx = X.size();
    const std::size_t ny = Y.size();
    std::vector<std::string> labels;
    labels.reserve(nx * ny);
    for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t j = 0; j < ny; ++j) {
            labels.push_back("(" + X.label(static_cast<Point>(i)) + "," + Y.label(static_cast<Point>(j)) + ")");
        }
    }
    std::vector<std::vector<Rational>> dist(nx * ny, std::vector<Rational>(nx * ny));
    for (std::size_t p = 0; p < nx * ny; ++p) {
        for (std::size_t q = 0; q < nx * ny; ++q) {
            dist[p][q] = X(static_cast<Point>(p / ny), static_cast<Point>(q / ny)) +
                         Y(static_cast<Point>(p % ny), static_cast<Point>(q % ny));
        }
    }
    return MetricSpace::from_distance_matrix(std::move(labels), std::move(dist));
}

bool IntervalPoset::is_totally_ordered() const {
    for (std::size_t i = 0; i < carrier.size(); ++i) {
        for (std::size_t j = 0; j < carrier.size(); ++j) {
            if (!leq[i][j] && !leq[j][i]) return false;
        }
    }
    return true;
}

IntervalPoset interval(const MetricSpace& X, Point a, Point b, IntervalKind kind) {
    IntervalPoset out;
    out.a = a;
    out.b = b;
    out.kind = kind;
    const bool drop_a = kind == IntervalKind::open || kind == IntervalKind::half_open_left;
    const bool drop_b = kind == IntervalKind::open || kind == IntervalKind::half_open_right;
    const Rational& dab = X(a, b);
    for (Point x = 0; x < static_cast<Point>(X.size()); ++x) {
        if (X(a, x) + X(x, b) != dab) continue;
        if ((drop_a && x == a) || (drop_b && x == b)) continue;
        out.carrier.push_back(x);
    }
    std::stable_sort(out.carrier.begin(), out.carrier.end(),
                     [&](Point x, Point y) { return X(a, x) < X(a, y); });
    const std::size_t m = out.carrier.size();
    out.leq.assign(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const Point x = out.carrier[i];
            const Point y = out.carrier[j];
            out.leq[i][j] = X(a, x) + X(x, y) + X(y, b) == dab;
        }
    }
    return out;
}

FourCutScan four_cuts(const MetricSpace& X) {
    FourCutScan scan;
    const auto n = static_cast<Point>(X.size());
    for (Point x0 = 0; x0 < n; ++x0) {
        for (Point x1 = 0; x1 < n; ++x1) {
            if (x1 == x0) continue;
            for (Point x2 = 0; x2 < n; ++x2) {
                if (x2 == x1) continue;
                for (Point x3 = 0; x3 < n; ++x3) {
                    if (x3 == x2) continue;
                    const Rational full = X(x0, x1) + X(x1, x2) + X(x2, x3);
                    if (!(X(x0, x3) < full)) continue;
                    if (X(x0, x2) + X(x2, x3) != full) continue;
                    if (X(x0, x1) + X(x1, x3) != full) continue;
                    scan.cuts.push_back({x0, x1, x2, x3});
                    if (!scan.m_x || full < *scan.m_x) scan.m_x = full;
                }
            }
        }
    }
    return scan;
}

bool is_pawful(const MetricSpace& X) {
    const auto n = static_cast<Point>(X.size());
    const Rational one(1);
    const Rational two(2);
    if (X.diameter() > two) return false;
    for (Point x = 0; x < n; ++x) {
        for (Point y = 0; y < n; ++y) {
            if (X(x, y) != two) continue;
            for (Point z = 0; z < n; ++z) {
                if (X(y, z) != two || X(x, z) != one) continue;
                bool found = false;
                for (Point a = 0; a < n && !found; ++a) {
                    found = X(a, x) == one && X(a, y) == one && X(a, z) == one;
                }
                if (!found) return false;
            }
        }
    }
    return true;
}

}  // namespace magtop
