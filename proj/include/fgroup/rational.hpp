#pragma once

#include <compare>
#include <ostream>
#include <string>

#include "fgroup/bigint.hpp"

namespace fgroup {

/// Exact fraction in lowest terms with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(const BigInt& integer) : value_(integer) {}
    Rational(std::int64_t integer) : value_(big(integer)) {}
    Rational(const BigInt& num, const BigInt& den)
    {
        if (den == 0) {
            fail(ErrorCode::DomainError, "zero denominator");
        }
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    static Rational parse(const std::string& text)
    {
        auto slash = text.find('/');
        try {
            if (slash == std::string::npos) {
                return Rational(BigInt(text));
            }
            return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
        } catch (const std::invalid_argument&) {
            fail(ErrorCode::DomainError, "not a rational: " + text);
        }
    }

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }
    int sign() const { return sgn(value_); }
    bool is_integer() const { return value_.get_den() == 1; }

    /// "p/q", or just "p" when q = 1.
    std::string str() const { return value_.get_str(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return from(a.value_ + b.value_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return from(a.value_ - b.value_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return from(a.value_ * b.value_); }
    friend Rational operator/(const Rational& a, const Rational& b)
    {
        if (b.sign() == 0) {
            fail(ErrorCode::DomainError, "division by zero");
        }
        return from(a.value_ / b.value_);
    }
    Rational operator-() const { return from(-value_); }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

private:
    static Rational from(mpq_class v)
    {
        Rational out;
        out.value_ = std::move(v);
        out.value_.canonicalize();
        return out;
    }

    mpq_class value_ {0};
};

} // namespace fgroup
