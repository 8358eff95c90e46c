#include "fundcoef/rational.hpp"

#include <utility>

#include "fundcoef/errors.hpp"

namespace fundcoef {

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign)
{
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && s[0] == '-') i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
}

} // namespace

Rational::Rational(std::int64_t n) : value_(static_cast<long>(n)) {}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)))
{
}

Rational::Rational(const BigInt& n) : value_(n) {}

Rational::Rational(const BigInt& num, const BigInt& den)
{
    if (den == 0) throw DomainError("Rational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) {}

std::string Rational::to_string() const
{
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    if (!is_integer_literal(num_text, true)) {
        throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    BigInt num{std::string(num_text)};
    BigInt den = 1;
    if (slash != std::string_view::npos) {
        const auto den_text = text.substr(slash + 1);
        if (!is_integer_literal(den_text, false)) {
            throw ParseError("malformed rational '" + std::string(text) + "'");
        }
        den = BigInt{std::string(den_text)};
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    Rational r(num, den);
    // Serialized rationals must already be canonical.
    if (r.to_string() != text) {
        throw ParseError("non-canonical rational '" + std::string(text) + "'");
    }
    return r;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero()) throw DomainError("Rational: division by zero");
    value_ /= rhs.value_;
    return *this;
}

void Rational::add_product(const Rational& a, const Rational& b)
{
    if (a.value_.get_den() == 1 && b.value_.get_den() == 1 && value_.get_den() == 1) {
        // Integer fast path; mpq would re-canonicalize needlessly.
        mpz_addmul(value_.get_num_mpz_t(), a.value_.get_num_mpz_t(), b.value_.get_num_mpz_t());
        return;
    }
    value_ += a.value_ * b.value_;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::pow(unsigned e) const
{
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), e);
    mpq_class q(num, den);
    return Rational(std::move(q));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

} // namespace fundcoef
