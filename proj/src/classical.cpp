#include "fundcoef/classical.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "fundcoef/arith.hpp"
#include "fundcoef/errors.hpp"

namespace fundcoef::classical {

namespace {

BigInt binomial(int n, int k)
{
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

} // namespace

Rational bernoulli(int m)
{
    if (m < 0) throw DomainError("bernoulli: index must be non-negative");
    std::vector<Rational> b(static_cast<std::size_t>(m) + 1);
    b[0] = Rational(1);
    for (int n = 1; n <= m; ++n) {
        Rational acc;
        for (int j = 0; j < n; ++j) acc += Rational(binomial(n + 1, j)) * b[j];
        b[n] = -acc / Rational(n + 1);
    }
    return b[m];
}

ClassicalForm eisenstein(int k, std::int64_t prec)
{
    if (k < 4 || k % 2 != 0) throw DomainError("eisenstein: weight must be even and at least 4");
    if (prec < 1) throw DomainError("eisenstein: prec must be positive");
    const Rational factor = Rational(-2 * k) / bernoulli(k);
    QSeries::Terms t{{0, Rational(1)}};
    for (std::int64_t n = 1; n < prec; ++n) {
        BigInt sigma = 0;
        for (const auto d : arith::divisors(n)) {
            BigInt p;
            mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k - 1));
            sigma += p;
        }
        t.emplace_hint(t.end(), n, factor * Rational(sigma));
    }
    return {2 * k, 1, QSeries(1, prec, std::move(t))};
}

QSeries euler_product(std::int64_t prec)
{
    if (prec < 1) throw DomainError("euler_product: prec must be positive");
    // Coefficients of prod (1 - q^n) lie in {-1, 0, 1}; dense int64 is exact.
    std::vector<std::int64_t> c(static_cast<std::size_t>(prec), 0);
    c[0] = 1;
    for (std::int64_t n = 1; n < prec; ++n) {
        for (std::int64_t e = prec - 1; e >= n; --e) c[e] -= c[e - n];
    }
    QSeries::Terms t;
    for (std::int64_t e = 0; e < prec; ++e) {
        if (c[e] != 0) t.emplace_hint(t.end(), e, Rational(c[e]));
    }
    return QSeries(1, prec, std::move(t));
}

ClassicalForm eta(std::int64_t prec)
{
    return {1, 1, euler_product(prec).rescaled(24).shifted(1).truncated(24 * prec)};
}

ClassicalForm delta(std::int64_t prec)
{
    return {24, 1, euler_product(prec).pow(24).shifted(1).truncated(prec)};
}

ClassicalForm theta(std::int64_t prec)
{
    if (prec < 1) throw DomainError("theta: prec must be positive");
    QSeries::Terms t;
    for (std::int64_t n = 0; n * n < prec; ++n) t.emplace(n * n, Rational(n == 0 ? 1 : 2));
    return {1, 4, QSeries(1, prec, std::move(t))};
}

GrowthBound fit_growth(const QSeries& s, double exponent)
{
    GrowthBound g{0.0, exponent};
    for (const auto& [e, c] : s.terms()) {
        if (e <= 0) continue;
        const double x = static_cast<double>(e) / s.denom();
        g.constant = std::max(g.constant, std::abs(c.to_double()) / std::pow(x, exponent));
    }
    return g;
}

Evaluation evaluate(const QSeries& s, std::complex<double> z, GrowthBound growth, double tolerance)
{
    if (!(z.imag() > 0.0)) throw DomainError("evaluate: Im z must be positive");
    using std::numbers::pi;
    const double denom = s.denom();
    const std::complex<double> two_pi_i_z = 2.0 * pi * std::complex<double>(0.0, 1.0) * z / denom;
    std::complex<double> value = 0.0;
    for (const auto& [e, c] : s.terms()) value += c.to_double() * std::exp(two_pi_i_z * static_cast<double>(e));

    // Tail over exponents P, P+1, ... with |a(e)| <= C (e/denom)^alpha and
    // |q-term| = x^e; consecutive ratios are at most x (1 + 1/P)^alpha.
    const double x = std::exp(-2.0 * pi * z.imag() / denom);
    const auto p = static_cast<double>(std::max<std::int64_t>(s.prec_exponent(), 1));
    double tail = std::numeric_limits<double>::infinity();
    const double ratio = x * std::pow(1.0 + 1.0 / p, growth.exponent);
    if (ratio < 1.0) {
        const double log_lead = std::log(growth.constant > 0 ? growth.constant : 0.0) +
                                growth.exponent * std::log(p / denom) + p * std::log(x);
        tail = growth.constant > 0 ? std::exp(log_lead) / (1.0 - ratio) : 0.0;
    }
    if (tail > tolerance) throw PrecisionError("insufficient precision");
    return {value, tail};
}

} // namespace fundcoef::classical
