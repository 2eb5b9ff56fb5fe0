#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "magtop/metric_space.hpp"
#include "magtop/rational.hpp"
#include "magtop/report.hpp"

namespace magtop {

/// Finite sum of c q^e with rational exponents 0 <= e <= truncation.
/// Terms above the truncation are dropped by every operation, so identities
/// hold modulo q^{>truncation}.
class HahnPolynomial {
public:
    explicit HahnPolynomial(Rational truncation = Rational(0)) : truncation_(std::move(truncation)) {}

    static HahnPolynomial monomial(const Rational& coefficient, const Rational& exponent, const Rational& truncation);
    static HahnPolynomial constant(const Rational& c, const Rational& truncation) {
        return monomial(c, Rational(0), truncation);
    }

    [[nodiscard]] const std::map<Rational, Rational>& terms() const noexcept { return terms_; }
    [[nodiscard]] const Rational& truncation() const noexcept { return truncation_; }
    [[nodiscard]] Rational coefficient(const Rational& exponent) const;
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    /// Smallest exponent with a nonzero coefficient; the series must be nonzero.
    [[nodiscard]] const Rational& valuation() const { return terms_.begin()->first; }

    /// Adds c q^e, ignoring e above the truncation.
    void add_term(const Rational& exponent, const Rational& c);

    HahnPolynomial& operator+=(const HahnPolynomial& rhs);
    HahnPolynomial& operator-=(const HahnPolynomial& rhs);
    friend HahnPolynomial operator+(HahnPolynomial lhs, const HahnPolynomial& rhs) { return lhs += rhs; }
    friend HahnPolynomial operator-(HahnPolynomial lhs, const HahnPolynomial& rhs) { return lhs -= rhs; }
    friend HahnPolynomial operator-(const HahnPolynomial& x);
    /// Truncated at the smaller of the two truncations.
    friend HahnPolynomial operator*(const HahnPolynomial& lhs, const HahnPolynomial& rhs);

    /// Compares terms only; truncations may differ.
    friend bool operator==(const HahnPolynomial& lhs, const HahnPolynomial& rhs) { return lhs.terms_ == rhs.terms_; }

    /// "2 - 2 q^1 + 1/2 q^{3/2}"; "0" for the zero series.
    [[nodiscard]] std::string str() const;

private:
    Rational truncation_;
    std::map<Rational, Rational> terms_;
};

/// Square matrix of truncated series indexed by points.
class SeriesMatrix {
public:
    SeriesMatrix(std::size_t n, const Rational& truncation);
    static SeriesMatrix identity(std::size_t n, const Rational& truncation);

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] HahnPolynomial& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    [[nodiscard]] const HahnPolynomial& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    [[nodiscard]] bool is_zero() const;

    SeriesMatrix& operator+=(const SeriesMatrix& rhs);
    friend SeriesMatrix operator*(const SeriesMatrix& lhs, const SeriesMatrix& rhs);
    friend bool operator==(const SeriesMatrix&, const SeriesMatrix&) = default;

private:
    std::size_t n_;
    std::vector<HahnPolynomial> entries_;
};

/// Entries q^{d(x, y)}, truncated at max_length.
SeriesMatrix z_matrix(const MetricSpace& X, const Rational& max_length);

/// Neumann sum of (I - Z)^k for k <= ceil(max_length / r_0). Throws
/// InternalError if the next power still has a term below the truncation.
SeriesMatrix z_inverse(const MetricSpace& X, const Rational& max_length);

/// Sum over sequences x from a to b of (-1)^{deg x} q^{d(x)}, truncated.
HahnPolynomial perturbative_inverse(const MetricSpace& X, Point a, Point b, const Rational& max_length);

/// w(x) = sum_y Z^{-1}(x, y).
std::vector<HahnPolynomial> weighting(const MetricSpace& X, const Rational& max_length);
HahnPolynomial magnitude(const MetricSpace& X, const Rational& max_length);

/// Reduced Euler characteristic of M^l(X; a, b) from the chain ranks:
/// sum_k (-1)^k #{sequences of degree k and length l}.
long chain_euler_characteristic(const MetricSpace& X, Point a, Point b, const Rational& l);

/// Coefficient of q^l in Z^{-1}(a, b) against the Euler characteristic of
/// magnitude homology, for every achievable l and pair; also the weighting
/// and magnitude sums.
CheckReport euler_check(const MetricSpace& X, const Rational& max_length, unsigned jobs = 1);

struct RecoverVerdict {
    bool isometry = false;
    /// Euler characteristic tables agree on every compared (l, a, b).
    bool tables_equal = false;
    Rational max_length;
    std::string witness;
};

/// Compares the Euler characteristic tables of X and Y through f up to
/// three times the larger diameter, then confirms the verdict against the
/// distance matrices. Throws SizeMismatch when f is not a bijection of the
/// right size.
RecoverVerdict recover_check(const MetricSpace& X, const MetricSpace& Y, const std::vector<Point>& f);

}  // namespace magtop
