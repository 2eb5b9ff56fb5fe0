#include "magtop/rational.hpp"

#include <cctype>
#include <ostream>

#include "magtop/errors.hpp"

namespace magtop {

namespace {

bool is_integer_literal(std::string_view text) {
    if (text.empty()) return false;
    std::size_t i = (text.front() == '-' || text.front() == '+') ? 1 : 0;
    if (i == text.size()) return false;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    }
    return true;
}

}  // namespace

Rational::Rational(const Integer& numerator, const Integer& denominator) : value_(numerator, denominator) {
    if (denominator == 0) throw ParseError("rational with zero denominator");
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    if (!is_integer_literal(num_text)) throw ParseError("not a rational number: '" + std::string(text) + "'");
    Integer num(std::string(num_text.front() == '+' ? num_text.substr(1) : num_text));
    if (slash == std::string_view::npos) return Rational(num, 1);
    const auto den_text = text.substr(slash + 1);
    if (!is_integer_literal(den_text) || den_text.front() == '-' || den_text.front() == '+') {
        throw ParseError("not a rational number: '" + std::string(text) + "'");
    }
    Integer den{std::string(den_text)};
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

Integer Rational::ceil() const {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

std::string Rational::str() const { return value_.get_str(); }

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw InternalError("division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

}  // namespace magtop
