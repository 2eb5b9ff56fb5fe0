#include "magtop/smith.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace magtop {

namespace {

using DenseMatrix = std::vector<std::vector<Integer>>;

/// Rows as sparse maps plus a column-to-rows index, for unit-pivot elimination.
class SparseWorkspace {
public:
    explicit SparseWorkspace(const IntMatrix& A) : rows_(A.rows()), cols_(A.cols()) {
        for (std::size_t j = 0; j < A.cols(); ++j) {
            for (const auto& [i, v] : A.column(j)) {
                rows_[i].emplace(j, Integer(static_cast<long>(v)));
                cols_[j].insert(i);
            }
        }
    }

    /// Removes unit pivots one at a time; returns how many were removed.
    std::size_t eliminate_units() {
        std::size_t units = 0;
        bool progress = true;
        while (progress) {
            progress = false;
            for (std::size_t j = 0; j < cols_.size(); ++j) {
                if (cols_[j].empty()) continue;
                std::size_t best = rows_.size();
                for (std::size_t i : cols_[j]) {
                    if (abs(rows_[i].at(j)) != 1) continue;
                    if (best == rows_.size() || rows_[i].size() < rows_[best].size()) best = i;
                }
                if (best == rows_.size()) continue;
                pivot(best, j);
                ++units;
                progress = true;
            }
        }
        return units;
    }

    DenseMatrix remainder() const {
        std::vector<std::size_t> live_rows;
        std::vector<std::size_t> col_pos(cols_.size(), cols_.size());
        std::size_t ncols = 0;
        for (std::size_t j = 0; j < cols_.size(); ++j) {
            if (!cols_[j].empty()) col_pos[j] = ncols++;
        }
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (!rows_[i].empty()) live_rows.push_back(i);
        }
        DenseMatrix M(live_rows.size(), std::vector<Integer>(ncols));
        for (std::size_t r = 0; r < live_rows.size(); ++r) {
            for (const auto& [j, v] : rows_[live_rows[r]]) M[r][col_pos[j]] = v;
        }
        return M;
    }

private:
    void pivot(std::size_t p, std::size_t j) {
        const Integer unit = rows_[p].at(j);
        const std::vector<std::size_t> targets(cols_[j].begin(), cols_[j].end());
        for (std::size_t r : targets) {
            if (r == p) continue;
            const Integer factor = rows_[r].at(j) * unit;  // unit is its own inverse
            for (const auto& [c, v] : rows_[p]) {
                auto& row = rows_[r];
                Integer updated = (row.count(c) ? row[c] : Integer(0)) - factor * v;
                if (updated == 0) {
                    row.erase(c);
                    cols_[c].erase(r);
                } else {
                    row[c] = std::move(updated);
                    cols_[c].insert(r);
                }
            }
        }
        // Column j is now zero outside row p, so column operations clear row p.
        for (const auto& [c, v] : rows_[p]) cols_[c].erase(p);
        rows_[p].clear();
    }

    std::vector<std::map<std::size_t, Integer>> rows_;
    std::vector<std::set<std::size_t>> cols_;
};

/// Reduces M to a diagonal matrix and returns the nonzero diagonal entries.
std::vector<Integer> diagonalize(DenseMatrix M) {
    std::vector<Integer> out;
    const std::size_t m = M.size();
    const std::size_t n = m == 0 ? 0 : M.front().size();
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        // Smallest nonzero entry of the trailing block.
        std::size_t pi = m, pj = n;
        for (std::size_t i = t; i < m; ++i) {
            for (std::size_t j = t; j < n; ++j) {
                if (M[i][j] != 0 && (pi == m || abs(M[i][j]) < abs(M[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
            }
        }
        if (pi == m) break;
        std::swap(M[t], M[pi]);
        for (auto& row : M) std::swap(row[t], row[pj]);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (M[i][t] == 0) continue;
                const Integer q = M[i][t] / M[t][t];
                for (std::size_t j = t; j < n; ++j) M[i][j] -= q * M[t][j];
                if (M[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (M[t][j] == 0) continue;
                const Integer q = M[t][j] / M[t][t];
                for (std::size_t i = t; i < m; ++i) M[i][j] -= q * M[i][t];
                if (M[t][j] != 0) clean = false;
            }
            if (clean) break;
            // A remainder smaller than the pivot is left; move it to the pivot.
            std::size_t bi = t, bj = t;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (M[i][t] != 0 && abs(M[i][t]) < abs(M[bi][bj])) {
                    bi = i;
                    bj = t;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (M[t][j] != 0 && abs(M[t][j]) < abs(M[bi][bj])) {
                    bi = t;
                    bj = j;
                }
            }
            std::swap(M[t], M[bi]);
            for (auto& row : M) std::swap(row[t], row[bj]);
        }
        out.push_back(abs(M[t][t]));
    }
    return out;
}

}  // namespace

std::vector<Integer> invariant_factors(std::vector<Integer> diagonal) {
    for (auto& d : diagonal) d = abs(d);
    diagonal.erase(std::remove(diagonal.begin(), diagonal.end(), Integer(0)), diagonal.end());
    for (std::size_t i = 0; i < diagonal.size(); ++i) {
        for (std::size_t j = i + 1; j < diagonal.size(); ++j) {
            Integer g;
            mpz_gcd(g.get_mpz_t(), diagonal[i].get_mpz_t(), diagonal[j].get_mpz_t());
            Integer lcm = diagonal[i] / g * diagonal[j];
            diagonal[i] = g;
            diagonal[j] = std::move(lcm);
        }
    }
    return diagonal;
}

SNFResult smith_normal_form(const IntMatrix& A) {
    SparseWorkspace work(A);
    const std::size_t units = work.eliminate_units();
    std::vector<Integer> diag(units, Integer(1));
    for (auto& d : diagonalize(work.remainder())) diag.push_back(std::move(d));
    SNFResult result;
    result.diag = invariant_factors(std::move(diag));
    result.rank = result.diag.size();
    return result;
}

}  // namespace magtop
