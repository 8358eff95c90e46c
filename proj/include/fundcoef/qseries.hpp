#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "fundcoef/rational.hpp"

namespace fundcoef {

// Truncated formal power series in q^(1/denom) over the rationals.
//
// The series is known exactly for every exponent e (meaning q^(e/denom))
// strictly below prec_exponent(); asking for a coefficient at or above that
// bound is an error rather than a silent zero. Only nonzero coefficients are
// stored. Products propagate precision as
//     prec(ab) = min(prec(a) + val(b), prec(b) + val(a)),
// with val of the zero series taken to be its precision.
class QSeries {
public:
    using Terms = std::map<std::int64_t, Rational>;

    QSeries() = default;
    QSeries(int denom, std::int64_t prec_exponent);
    QSeries(int denom, std::int64_t prec_exponent, Terms terms);

    // Constant series c, known to q^prec_q.
    static QSeries constant(const Rational& c, std::int64_t prec_q);

    int denom() const { return denom_; }
    std::int64_t prec_exponent() const { return prec_; }
    // Precision in powers of q, i.e. prec_exponent() / denom().
    Rational precision() const { return Rational(prec_, denom_); }

    Rational coeff(std::int64_t e) const;
    // Coefficient of q^n for integral n; PrecisionError if n*denom is unknown.
    Rational coeff_q(std::int64_t n) const { return coeff(n * denom_); }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::optional<std::int64_t> valuation() const;

    QSeries rescaled(int new_denom) const;
    QSeries truncated(std::int64_t prec_exponent) const;
    // Multiplies by q^(shift/denom).
    QSeries shifted(std::int64_t shift) const;
    // Multiplicative inverse of a series whose lowest exponent is 0 with a
    // nonzero coefficient; DomainError "non-unit divisor" otherwise.
    QSeries inverse() const;
    QSeries pow(unsigned e) const;
    // Re-keys a series supported on multiples of denom to integral powers of q;
    // InvariantError "fractional residue" otherwise.
    QSeries integralize() const;

    QSeries operator-() const;
    QSeries& operator+=(const QSeries& rhs);
    QSeries& operator-=(const QSeries& rhs);
    QSeries& operator*=(const Rational& c);

    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend QSeries operator*(QSeries a, const Rational& c) { return a *= c; }
    friend QSeries operator*(const Rational& c, QSeries a) { return a *= c; }
    // a / b where b has a nonzero leading coefficient at any exponent.
    friend QSeries operator/(const QSeries& a, const QSeries& b);

    friend bool operator==(const QSeries& a, const QSeries& b) = default;

private:
    int denom_ = 1;
    std::int64_t prec_ = 0;
    Terms terms_;
};

// Laurent polynomial in w = zeta^(1/2) with rational coefficients; zero
// coefficients are never stored.
using LaurentPoly = std::map<int, Rational>;

// Truncated series in q^(1/denom) whose coefficients are Laurent polynomials
// in w. Precision semantics are those of QSeries.
class TwoVarSeries {
public:
    using Terms = std::map<std::int64_t, LaurentPoly>;

    TwoVarSeries() = default;
    TwoVarSeries(int denom, std::int64_t prec_exponent);
    TwoVarSeries(int denom, std::int64_t prec_exponent, Terms terms);

    int denom() const { return denom_; }
    std::int64_t prec_exponent() const { return prec_; }
    const Terms& terms() const { return terms_; }
    std::optional<std::int64_t> valuation() const;

    // Coefficient of q^(e/denom) w^j.
    Rational coeff(std::int64_t e, int j) const;

    TwoVarSeries rescaled(int new_denom) const;
    TwoVarSeries shifted(std::int64_t shift) const;
    TwoVarSeries integralize() const;

    TwoVarSeries& operator+=(const TwoVarSeries& rhs);
    TwoVarSeries& operator-=(const TwoVarSeries& rhs);
    TwoVarSeries& operator*=(const Rational& c);

    friend TwoVarSeries operator+(TwoVarSeries a, const TwoVarSeries& b) { return a += b; }
    friend TwoVarSeries operator-(TwoVarSeries a, const TwoVarSeries& b) { return a -= b; }
    friend TwoVarSeries operator*(TwoVarSeries a, const Rational& c) { return a *= c; }
    friend TwoVarSeries operator*(const TwoVarSeries& a, const TwoVarSeries& b);
    friend TwoVarSeries operator*(const TwoVarSeries& a, const QSeries& b);
    friend TwoVarSeries operator/(const TwoVarSeries& a, const QSeries& b);

    friend bool operator==(const TwoVarSeries& a, const TwoVarSeries& b) = default;

private:
    int denom_ = 1;
    std::int64_t prec_ = 0;
    Terms terms_;
};

} // namespace fundcoef
