#pragma once

#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "magtop/chain_complex.hpp"
#include "magtop/document.hpp"
#include "magtop/metric_space.hpp"

namespace testing {

using namespace magtop;

inline MetricSpace fixture(const std::string& name) {
    return load_document(std::string(MAGTOP_FIXTURES) + "/" + name + ".json").metric();
}

inline Document fixture_document(const std::string& name) {
    return load_document(std::string(MAGTOP_FIXTURES) + "/" + name + ".json");
}

inline MetricSpace unit_graph(std::vector<std::string> vertices, const std::vector<std::pair<std::string, std::string>>& edges) {
    std::vector<WeightedEdge> list;
    for (const auto& [u, v] : edges) list.push_back({u, v, Rational(1)});
    return MetricSpace::from_weighted_graph(std::move(vertices), list);
}

// Oracles below avoid the library's enumeration and elimination code.

/// Every sequence from a to b with consecutive points distinct and length
/// exactly l, found by unpruned recursion up to max_degree.
inline std::vector<PointSequence> naive_sequences(const MetricSpace& X, Point a, Point b, const Rational& l,
                                                  std::size_t max_degree) {
    std::vector<PointSequence> out;
    PointSequence s{a};
    std::function<void(Rational)> walk = [&](Rational so_far) {
        if (s.back() == b && so_far == l) out.push_back(s);
        if (s.size() > max_degree) return;
        for (Point y = 0; y < static_cast<Point>(X.size()); ++y) {
            if (y == s.back()) continue;
            s.push_back(y);
            walk(so_far + X(s[s.size() - 2], y));
            s.pop_back();
        }
    };
    walk(Rational(0));
    std::sort(out.begin(), out.end());
    return out;
}

/// Rank over the rationals by Gaussian elimination.
inline std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c].is_zero()) continue;
            const Rational f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

inline std::vector<std::vector<Rational>> dense(const IntMatrix& A) {
    std::vector<std::vector<Rational>> m(A.rows(), std::vector<Rational>(A.cols()));
    for (std::size_t j = 0; j < A.cols(); ++j) {
        for (const auto& [i, v] : A.column(j)) m[i][j] = Rational(static_cast<long>(v));
    }
    return m;
}

/// Rational Betti numbers of a chain complex from ranks of its boundaries.
inline std::vector<std::pair<int, std::size_t>> rational_betti(const ChainComplex& cc) {
    std::vector<std::pair<int, std::size_t>> out;
    for (int k = cc.min_degree; k <= cc.max_degree(); ++k) {
        const std::size_t dim = cc.rank(k);
        const std::size_t out_rank = k == cc.min_degree ? 0 : rational_rank(dense(cc.boundary_at(k)));
        const std::size_t in_rank = k == cc.max_degree() ? 0 : rational_rank(dense(cc.boundary_at(k + 1)));
        if (dim - out_rank - in_rank > 0) out.emplace_back(k, dim - out_rank - in_rank);
    }
    return out;
}

/// Determinant by cofactor expansion; matrices here are at most 4 x 4.
inline Integer det(const std::vector<std::vector<Integer>>& m) {
    if (m.empty()) return 1;
    if (m.size() == 1) return m[0][0];
    Integer total = 0;
    for (std::size_t j = 0; j < m.size(); ++j) {
        std::vector<std::vector<Integer>> minor;
        for (std::size_t i = 1; i < m.size(); ++i) {
            minor.emplace_back();
            for (std::size_t c = 0; c < m.size(); ++c) {
                if (c != j) minor.back().push_back(m[i][c]);
            }
        }
        total += (j % 2 ? -1 : 1) * m[0][j] * det(minor);
    }
    return total;
}

/// Invariant factors as ratios of determinantal divisors d_k / d_{k-1},
/// d_k being the gcd of all k x k minors.
inline std::vector<Integer> determinantal_factors(const std::vector<std::vector<Integer>>& A) {
    const std::size_t rows = A.size();
    const std::size_t cols = rows ? A[0].size() : 0;
    std::vector<Integer> d{Integer(1)};
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
        Integer g = 0;
        std::vector<std::size_t> ri(k), ci(k);
        std::function<void(std::size_t, std::size_t, std::vector<std::size_t>&, std::size_t, std::function<void()>)> choose =
            [&](std::size_t start, std::size_t n, std::vector<std::size_t>& pick, std::size_t depth, std::function<void()> f) {
                if (depth == pick.size()) return f();
                for (std::size_t x = start; x < n; ++x) {
                    pick[depth] = x;
                    choose(x + 1, n, pick, depth + 1, f);
                }
            };
        choose(0, rows, ri, 0, [&] {
            choose(0, cols, ci, 0, [&] {
                std::vector<std::vector<Integer>> sub(k, std::vector<Integer>(k));
                for (std::size_t i = 0; i < k; ++i) {
                    for (std::size_t j = 0; j < k; ++j) sub[i][j] = A[ri[i]][ci[j]];
                }
                Integer v = det(sub);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
            });
        });
        if (g == 0) break;
        d.push_back(g);
    }
    std::vector<Integer> out;
    for (std::size_t k = 1; k < d.size(); ++k) out.push_back(d[k] / d[k - 1]);
    return out;
}

}  // namespace testing
