#include "magtop/series.hpp"

#include <algorithm>
#include <sstream>

#include "magtop/causal.hpp"
#include "magtop/errors.hpp"
#include "magtop/homology.hpp"
#include "magtop/parallel.hpp"

namespace magtop {

HahnPolynomial HahnPolynomial::monomial(const Rational& coefficient, const Rational& exponent,
                                        const Rational& truncation) {
    HahnPolynomial p(truncation);
    p.add_term(exponent, coefficient);
    return p;
}

Rational HahnPolynomial::coefficient(const Rational& exponent) const {
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

void HahnPolynomial::add_term(const Rational& exponent, const Rational& c) {
    if (c.is_zero() || exponent > truncation_) return;
    if (exponent.sign() < 0) throw InternalError("negative exponent " + exponent.str());
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HahnPolynomial& HahnPolynomial::operator+=(const HahnPolynomial& rhs) {
    if (rhs.truncation_ < truncation_) {
        truncation_ = rhs.truncation_;
        terms_.erase(terms_.upper_bound(truncation_), terms_.end());
    }
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

HahnPolynomial& HahnPolynomial::operator-=(const HahnPolynomial& rhs) { return *this += -rhs; }

HahnPolynomial operator-(const HahnPolynomial& x) {
    HahnPolynomial out(x.truncation_);
    for (const auto& [e, c] : x.terms_) out.terms_.emplace(e, -c);
    return out;
}

HahnPolynomial operator*(const HahnPolynomial& lhs, const HahnPolynomial& rhs) {
    HahnPolynomial out(std::min(lhs.truncation_, rhs.truncation_));
    for (const auto& [e1, c1] : lhs.terms_) {
        for (const auto& [e2, c2] : rhs.terms_) {
            Rational e = e1 + e2;
            if (e > out.truncation_) break;
            out.add_term(e, c1 * c2);
        }
    }
    return out;
}

std::string HahnPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            os << c.str();
        } else {
            os << (c.sign() < 0 ? " - " : " + ") << (c.sign() < 0 ? (-c).str() : c.str());
        }
        first = false;
        if (!e.is_zero()) {
            if (e.is_integer()) {
                os << " q^" << e.str();
            } else {
                os << " q^{" << e.str() << '}';
            }
        }
    }
    return os.str();
}

SeriesMatrix::SeriesMatrix(std::size_t n, const Rational& truncation)
    : n_(n), entries_(n * n, HahnPolynomial(truncation)) {}

SeriesMatrix SeriesMatrix::identity(std::size_t n, const Rational& truncation) {
    SeriesMatrix m(n, truncation);
    for (std::size_t i = 0; i < n; ++i) m(i, i).add_term(Rational(0), Rational(1));
    return m;
}

bool SeriesMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const HahnPolynomial& p) { return p.is_zero(); });
}

SeriesMatrix& SeriesMatrix::operator+=(const SeriesMatrix& rhs) {
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
    return *this;
}

SeriesMatrix operator*(const SeriesMatrix& lhs, const SeriesMatrix& rhs) {
    const std::size_t n = lhs.n_;
    SeriesMatrix out(n, std::min(lhs.entries_.empty() ? Rational(0) : lhs.entries_[0].truncation(),
                                 rhs.entries_.empty() ? Rational(0) : rhs.entries_[0].truncation()));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const HahnPolynomial& a = lhs(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
        }
    }
    return out;
}

SeriesMatrix z_matrix(const MetricSpace& X, const Rational& max_length) {
    const std::size_t n = X.size();
    SeriesMatrix Z(n, max_length);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) Z(i, j).add_term(X(static_cast<Point>(i), static_cast<Point>(j)), Rational(1));
    }
    return Z;
}

SeriesMatrix z_inverse(const MetricSpace& X, const Rational& max_length) {
    const std::size_t n = X.size();
    SeriesMatrix sum = SeriesMatrix::identity(n, max_length);
    const auto r0 = X.min_positive_distance();
    if (!r0) return sum;

    SeriesMatrix N(n, max_length);  // I - Z
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) N(i, j).add_term(X(static_cast<Point>(i), static_cast<Point>(j)), Rational(-1));
        }
    }
    const Integer K = (max_length / *r0).ceil();
    SeriesMatrix power = SeriesMatrix::identity(n, max_length);
    for (Integer k = 1; k <= K; ++k) {
        power = power * N;
        sum += power;
    }
    if (!(power * N).is_zero()) throw InternalError("Neumann series did not terminate below the truncation");
    return sum;
}

HahnPolynomial perturbative_inverse(const MetricSpace& X, Point a, Point b, const Rational& max_length) {
    HahnPolynomial out(max_length);
    for_each_sequence(X, a, b, max_length, [&](std::span<const Point> s, const Rational& length) {
        out.add_term(length, Rational(s.size() % 2 == 1 ? 1 : -1));
    });
    return out;
}

std::vector<HahnPolynomial> weighting(const MetricSpace& X, const Rational& max_length) {
    const SeriesMatrix inv = z_inverse(X, max_length);
    std::vector<HahnPolynomial> w(X.size(), HahnPolynomial(max_length));
    for (std::size_t x = 0; x < X.size(); ++x) {
        for (std::size_t y = 0; y < X.size(); ++y) w[x] += inv(x, y);
    }
    return w;
}

HahnPolynomial magnitude(const MetricSpace& X, const Rational& max_length) {
    HahnPolynomial total(max_length);
    for (const auto& w : weighting(X, max_length)) total += w;
    return total;
}

long chain_euler_characteristic(const MetricSpace& X, Point a, Point b, const Rational& l) {
    long chi = 0;
    for (const auto& s : lightlike_sequences(X, a, b, l)) chi += (s.size() % 2 == 1) ? 1 : -1;
    return chi;
}

CheckReport euler_check(const MetricSpace& X, const Rational& max_length, unsigned jobs) {
    CheckReport report("euler");
    const std::size_t n = X.size();
    const SeriesMatrix inv = z_inverse(X, max_length);
    const auto w = weighting(X, max_length);
    const HahnPolynomial mag = magnitude(X, max_length);
    const auto lengths = achievable_lengths(X, max_length);

    for (const auto& l : lengths) {
        std::vector<long> chi(n * n, 0);
        parallel_for(n * n, jobs, [&](std::size_t i) {
            const auto a = static_cast<Point>(i / n);
            const auto b = static_cast<Point>(i % n);
            if (X(a, b) <= l) chi[i] = magnitude_homology(X, a, b, l).euler_characteristic();
        });
        long mag_sum = 0;
        for (std::size_t a = 0; a < n; ++a) {
            long row = 0;
            for (std::size_t b = 0; b < n; ++b) {
                const long c = chi[a * n + b];
                row += c;
                if (inv(a, b).coefficient(l) != Rational(c)) {
                    report.fail("l=" + l.str() + " a=" + X.label(static_cast<Point>(a)) + " b=" +
                                X.label(static_cast<Point>(b)) + " coefficient " + inv(a, b).coefficient(l).str() +
                                " vs Euler characteristic " + std::to_string(c));
                }
            }
            mag_sum += row;
            if (w[a].coefficient(l) != Rational(row)) {
                report.fail("l=" + l.str() + " weighting of " + X.label(static_cast<Point>(a)) + " disagrees");
            }
        }
        if (mag.coefficient(l) != Rational(mag_sum)) report.fail("l=" + l.str() + " magnitude coefficient disagrees");
        report.note("l=" + l.str() + " Mag coefficient " + std::to_string(mag_sum));
    }
    // Exponents of Z^{-1} are achievable lengths.
    for (std::size_t i = 0; i < n * n; ++i) {
        for (const auto& [e, c] : inv(i / n, i % n).terms()) {
            if (!std::binary_search(lengths.begin(), lengths.end(), e)) {
                report.fail("exponent " + e.str() + " of the inverse is not an achievable length");
            }
        }
    }
    return report;
}

RecoverVerdict recover_check(const MetricSpace& X, const MetricSpace& Y, const std::vector<Point>& f) {
    const std::size_t n = X.size();
    if (Y.size() != n || f.size() != n) throw SizeMismatch("recover_check needs |X| = |Y| = |f|");
    std::vector<bool> hit(n, false);
    for (Point p : f) {
        if (p < 0 || static_cast<std::size_t>(p) >= n || hit[static_cast<std::size_t>(p)]) {
            throw SizeMismatch("the point map is not a bijection");
        }
        hit[static_cast<std::size_t>(p)] = true;
    }
    RecoverVerdict verdict;
    verdict.max_length = Rational(3) * std::max(X.diameter(), Y.diameter());
    std::vector<Rational> lengths = achievable_lengths(X, verdict.max_length);
    for (auto& l : achievable_lengths(Y, verdict.max_length)) lengths.push_back(std::move(l));
    std::sort(lengths.begin(), lengths.end());
    lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());

    verdict.tables_equal = true;
    for (const auto& l : lengths) {
        for (std::size_t a = 0; a < n && verdict.tables_equal; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                const auto pa = static_cast<Point>(a), pb = static_cast<Point>(b);
                const long cx = chain_euler_characteristic(X, pa, pb, l);
                const long cy = chain_euler_characteristic(Y, f[a], f[b], l);
                if (cx != cy) {
                    verdict.tables_equal = false;
                    verdict.witness = "l=" + l.str() + " a=" + X.label(pa) + " b=" + X.label(pb) + ": " +
                                      std::to_string(cx) + " vs " + std::to_string(cy);
                    break;
                }
            }
        }
        if (!verdict.tables_equal) break;
    }

    bool distances_equal = true;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (X(static_cast<Point>(a), static_cast<Point>(b)) != Y(f[a], f[b])) distances_equal = false;
        }
    }
    if (distances_equal != verdict.tables_equal) {
        throw InternalError("Euler characteristic tables and distance matrices disagree on the verdict");
    }
    verdict.isometry = distances_equal;
    return verdict;
}

}  // namespace magtop
