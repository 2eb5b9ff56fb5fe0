#include "magtop/chain_complex.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "magtop/causal.hpp"
#include "magtop/errors.hpp"

namespace magtop {

void IntMatrix::add(std::size_t i, std::size_t j, std::int64_t v) {
    if (v == 0) return;
    auto& col = columns_[j];
    auto it = std::lower_bound(col.begin(), col.end(), i, [](const Entry& e, std::size_t r) { return e.first < r; });
    if (it != col.end() && it->first == i) {
        it->second += v;
        if (it->second == 0) col.erase(it);
    } else {
        col.insert(it, {i, v});
    }
}

std::int64_t IntMatrix::at(std::size_t i, std::size_t j) const {
    const auto& col = columns_[j];
    auto it = std::lower_bound(col.begin(), col.end(), i, [](const Entry& e, std::size_t r) { return e.first < r; });
    return (it != col.end() && it->first == i) ? it->second : 0;
}

bool IntMatrix::is_zero() const {
    return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
}

std::size_t IntMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
}

IntMatrix IntMatrix::from_dense(const std::vector<std::vector<std::int64_t>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.add(i, j, rows[i][j]);
    }
    return m;
}

IntMatrix operator*(const IntMatrix& A, const IntMatrix& B) {
    if (A.cols() != B.rows()) throw InternalError("matrix shapes do not compose");
    IntMatrix C(A.rows(), B.cols());
    for (std::size_t j = 0; j < B.cols(); ++j) {
        for (const auto& [k, b] : B.column(j)) {
            for (const auto& [i, a] : A.column(k)) C.add(i, j, a * b);
        }
    }
    return C;
}

std::size_t ChainComplex::rank(int degree) const {
    const int i = degree - min_degree;
    if (i < 0 || i >= static_cast<int>(basis.size())) return 0;
    return basis[static_cast<std::size_t>(i)].size();
}

IntMatrix ChainComplex::boundary_at(int degree) const {
    const int i = degree - min_degree;
    if (i >= 0 && i < static_cast<int>(boundary.size())) return boundary[static_cast<std::size_t>(i)];
    return IntMatrix(rank(degree - 1), rank(degree));
}

void ChainComplex::check_square_zero() const {
    for (int d = min_degree + 1; d <= max_degree(); ++d) {
        if (!(boundary_at(d - 1) * boundary_at(d)).is_zero()) {
            throw BoundarySquareNonzero("boundary squares to a nonzero map from degree " + std::to_string(d));
        }
    }
}

namespace {

using KeyIndex = std::map<std::vector<int>, std::size_t>;

ChainComplex assemble(int min_degree, std::vector<std::vector<std::vector<int>>> basis) {
    ChainComplex cc;
    cc.min_degree = min_degree;
    cc.basis = std::move(basis);
    for (std::size_t i = 0; i < cc.basis.size(); ++i) {
        cc.boundary.emplace_back(i == 0 ? 0 : cc.basis[i - 1].size(), cc.basis[i].size());
    }
    return cc;
}

}  // namespace

ChainComplex magnitude_chain_complex(const MetricSpace& X, Point a, Point b, const Rational& l) {
    std::vector<std::vector<std::vector<int>>> basis;
    for (auto& s : lightlike_sequences(X, a, b, l)) {
        const std::size_t k = s.size() - 1;
        if (basis.size() <= k) basis.resize(k + 1);
        basis[k].push_back(std::move(s));
    }
    for (auto& degree : basis) std::sort(degree.begin(), degree.end());
    ChainComplex cc = assemble(0, std::move(basis));

    for (std::size_t k = 2; k < cc.basis.size(); ++k) {
        KeyIndex below;
        for (std::size_t r = 0; r < cc.basis[k - 1].size(); ++r) below.emplace(cc.basis[k - 1][r], r);
        for (std::size_t c = 0; c < cc.basis[k].size(); ++c) {
            const auto& s = cc.basis[k][c];
            for (std::size_t i = 1; i + 1 < s.size(); ++i) {
                if (X(s[i - 1], s[i + 1]) != X(s[i - 1], s[i]) + X(s[i], s[i + 1])) continue;
                std::vector<int> face = s;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
                const auto it = below.find(face);
                if (it == below.end()) throw InternalError("length-preserving face missing from the basis");
                cc.boundary[k].add(it->second, c, (i % 2 == 0) ? 1 : -1);
            }
        }
    }
    return cc;
}

ChainComplex relative_chain_complex(const SimplicialPair& pair, bool augmented) {
    if (pair.total.is_void()) return ChainComplex{};
    const bool empty_generator = augmented && pair.sub.is_void();

    // With the empty simplex in degree -1, the face of a vertex is the key {}.
    std::vector<std::vector<std::vector<int>>> basis;
    if (empty_generator) basis.emplace_back(1, std::vector<int>{});
    const std::size_t offset = empty_generator ? 1 : 0;
    for (auto& s : pair.relative_simplices()) {
        const std::size_t slot = s.size() - 1 + offset;
        if (basis.size() <= slot) basis.resize(slot + 1);
        basis[slot].push_back(std::move(s));
    }
    ChainComplex cc = assemble(empty_generator ? -1 : 0, std::move(basis));
    for (std::size_t i = 1; i < cc.basis.size(); ++i) {
        KeyIndex below;
        for (std::size_t r = 0; r < cc.basis[i - 1].size(); ++r) below.emplace(cc.basis[i - 1][r], r);
        for (std::size_t c = 0; c < cc.basis[i].size(); ++c) {
            const auto& s = cc.basis[i][c];
            for (std::size_t j = 0; j < s.size(); ++j) {
                std::vector<int> face = s;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
                const auto it = below.find(face);
                if (it != below.end()) cc.boundary[i].add(it->second, c, (j % 2 == 0) ? 1 : -1);
            }
        }
    }
    return cc;
}

}  // namespace magtop
