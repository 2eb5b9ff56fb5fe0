#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace magtop {

using Integer = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
///
/// Every distance, time stamp and length in the library is a Rational;
/// classification of points (smooth, biased, ...) branches on equalities
/// that only make sense in exact arithmetic.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& numerator, const Integer& denominator);
    explicit Rational(mpq_class value);

    /// Accepts "p", "-p" or "p/q". Decimal notation is rejected.
    static Rational parse(std::string_view text);

    [[nodiscard]] const mpq_class& value() const noexcept { return value_; }
    [[nodiscard]] Integer numerator() const { return value_.get_num(); }
    [[nodiscard]] Integer denominator() const { return value_.get_den(); }

    [[nodiscard]] bool is_zero() const noexcept { return sgn(value_) == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const noexcept { return sgn(value_); }

    /// Smallest integer >= this value.
    [[nodiscard]] Integer ceil() const;

    /// "p" for integers, "p/q" otherwise.
    [[nodiscard]] std::string str() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational& x) { return Rational(mpq_class(-x.value_)); }

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return cmp(lhs.value_, rhs.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        const int c = cmp(lhs.value_, rhs.value_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& x);

private:
    mpq_class value_;
};

}  // namespace magtop
