#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fundcoef {

// Arbitrary-precision integer.
using BigInt = mpz_class;

// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n); // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(const BigInt& n);
    Rational(const BigInt& num, const BigInt& den);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    double to_double() const { return value_.get_d(); }

    // "num/den", with "/den" omitted when den = 1.
    std::string to_string() const;
    // Inverse of to_string; throws ParseError on malformed input.
    static Rational parse(std::string_view text);

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    // Adds a*b to *this without building a temporary.
    void add_product(const Rational& a, const Rational& b);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Rational abs() const;
    Rational pow(unsigned e) const;

    const mpq_class& raw() const { return value_; }

private:
    explicit Rational(mpq_class v);
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace fundcoef
