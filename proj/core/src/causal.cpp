#include "magtop/causal.hpp"

#include <algorithm>
#include <set>

#include "magtop/errors.hpp"

namespace magtop {

namespace {

struct SequenceSearch {
    const MetricSpace& X;
    Point b;
    const Rational& budget;
    bool exact;  // only emit sequences of length exactly budget
    const std::function<void(std::span<const Point>, const Rational&)>& visit;
    PointSequence path;

    void run(const Rational& used) {
        const Point x = path.back();
        if (x == b && (!exact || used == budget)) visit(path, used);
        if (exact && used == budget) return;
        const auto n = static_cast<Point>(X.size());
        for (Point y = 0; y < n; ++y) {
            if (y == x) continue;
            Rational next = used + X(x, y);
            if (next + X(y, b) > budget) continue;
            path.push_back(y);
            run(next);
            path.pop_back();
        }
    }
};

}  // namespace

void for_each_sequence(const MetricSpace& X, Point a, Point b, const Rational& max_length,
                       const std::function<void(std::span<const Point>, const Rational&)>& visit) {
    if (max_length.sign() < 0 || X(a, b) > max_length) return;
    SequenceSearch search{X, b, max_length, false, visit, {a}};
    search.run(Rational(0));
}

std::vector<PointSequence> lightlike_sequences(const MetricSpace& X, Point a, Point b, const Rational& l) {
    std::vector<PointSequence> out;
    if (l.sign() < 0 || X(a, b) > l) return out;
    const std::function<void(std::span<const Point>, const Rational&)> collect =
        [&](std::span<const Point> s, const Rational&) { out.emplace_back(s.begin(), s.end()); };
    SequenceSearch search{X, b, l, true, collect, {a}};
    search.run(Rational(0));
    return out;
}

std::vector<Rational> achievable_lengths(const MetricSpace& X, const Rational& max_length) {
    // Reachable (endpoint, length) states, explored in increasing length.
    const auto n = static_cast<Point>(X.size());
    std::set<std::pair<Rational, Point>> frontier;
    std::set<std::pair<Rational, Point>> seen;
    for (Point x = 0; x < n; ++x) frontier.emplace(Rational(0), x);
    std::set<Rational> lengths;
    if (max_length.sign() < 0) return {};
    while (!frontier.empty()) {
        auto node = *frontier.begin();
        frontier.erase(frontier.begin());
        if (!seen.insert(node).second) continue;
        lengths.insert(node.first);
        for (Point y = 0; y < n; ++y) {
            if (y == node.second) continue;
            Rational next = node.first + X(node.second, y);
            if (next > max_length) continue;
            std::pair<Rational, Point> state{std::move(next), y};
            if (!seen.count(state)) frontier.insert(std::move(state));
        }
    }
    return {lengths.begin(), lengths.end()};
}

std::vector<std::vector<Point>> disjoint_split(const MetricSpace& X, const Rational& l) {
    const auto n = static_cast<Point>(X.size());
    std::vector<int> block(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<Point>> blocks;
    for (Point start = 0; start < n; ++start) {
        if (block[static_cast<std::size_t>(start)] >= 0) continue;
        const int id = static_cast<int>(blocks.size());
        blocks.emplace_back();
        std::vector<Point> stack{start};
        block[static_cast<std::size_t>(start)] = id;
        while (!stack.empty()) {
            const Point x = stack.back();
            stack.pop_back();
            blocks.back().push_back(x);
            for (Point y = 0; y < n; ++y) {
                if (block[static_cast<std::size_t>(y)] < 0 && X(x, y) <= l) {
                    block[static_cast<std::size_t>(y)] = id;
                    stack.push_back(y);
                }
            }
        }
        std::sort(blocks.back().begin(), blocks.back().end());
    }
    return blocks;
}

CausalPoset::CausalPoset(const MetricSpace& X, Point a, Point b, Rational l, std::vector<CausalPoint> elements)
    : a_(a), b_(b), length_(std::move(l)), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    const std::size_t n = elements_.size();
    leq_.assign(n * n, false);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            leq_[i * n + j] = X(elements_[i].point, elements_[j].point) <= elements_[j].time - elements_[i].time;
        }
    }
}

std::optional<std::size_t> CausalPoset::index_of(const CausalPoint& p) const {
    const auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it == elements_.end() || *it != p) return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
}

std::vector<CausalPoint> time_stamped(const MetricSpace& X, std::span<const Point> s) {
    std::vector<CausalPoint> out;
    out.reserve(s.size());
    Rational t;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0) t += X(s[i - 1], s[i]);
        out.push_back({s[i], t});
    }
    return out;
}

CausalPoset essential_poset(const MetricSpace& X, Point a, Point b, const Rational& l) {
    std::vector<CausalPoint> points;
    for (const auto& s : lightlike_sequences(X, a, b, l)) {
        for (auto& p : time_stamped(X, s)) points.push_back(std::move(p));
    }
    return CausalPoset(X, a, b, l, std::move(points));
}

}  // namespace magtop
