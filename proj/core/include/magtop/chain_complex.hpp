#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "magtop/metric_space.hpp"
#include "magtop/simplicial.hpp"

namespace magtop {

/// Sparse integer matrix stored by columns. Entries are small (boundary
/// coefficients); exact elimination happens in smith_normal_form.
class IntMatrix {
public:
    using Entry = std::pair<std::size_t, std::int64_t>;

    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return columns_.size(); }

    /// Adds v to entry (i, j).
    void add(std::size_t i, std::size_t j, std::int64_t v);
    [[nodiscard]] std::int64_t at(std::size_t i, std::size_t j) const;
    /// Nonzero entries of column j, sorted by row.
    [[nodiscard]] const std::vector<Entry>& column(std::size_t j) const { return columns_[j]; }
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] std::size_t nonzeros() const;

    static IntMatrix from_dense(const std::vector<std::vector<std::int64_t>>& rows);

    friend IntMatrix operator*(const IntMatrix& A, const IntMatrix& B);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::vector<std::vector<Entry>> columns_;
};

/// Chain complex of free abelian groups with chosen bases.
///
/// Degree d has index d - min_degree. boundary[i] maps degree
/// min_degree + i to the degree below; for the lowest degree it has no rows.
struct ChainComplex {
    int min_degree = 0;
    std::vector<std::vector<std::vector<int>>> basis;
    std::vector<IntMatrix> boundary;

    [[nodiscard]] int max_degree() const { return min_degree + static_cast<int>(basis.size()) - 1; }
    [[nodiscard]] std::size_t rank(int degree) const;
    /// Zero matrix of the right shape outside the stored range.
    [[nodiscard]] IntMatrix boundary_at(int degree) const;
    /// Throws BoundarySquareNonzero naming the first degree where the square is nonzero.
    void check_square_zero() const;
};

/// Generators in degree k are the sequences from a to b of degree k and
/// length exactly l, lexicographically ordered. The differential is the
/// alternating sum over interior points whose removal keeps the length.
ChainComplex magnitude_chain_complex(const MetricSpace& X, Point a, Point b, const Rational& l);

/// Chains of the pair with the standard simplicial boundary. With augmentation
/// the empty simplex is a generator in degree -1 exactly when total is not
/// void and sub is void. Basis keys are the simplices (vertex indices).
ChainComplex relative_chain_complex(const SimplicialPair& pair, bool augmented);

}  // namespace magtop
