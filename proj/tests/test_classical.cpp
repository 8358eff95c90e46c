#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fundcoef/arith.hpp"
#include "fundcoef/classical.hpp"
#include "fundcoef/errors.hpp"

namespace classical = fundcoef::classical;
using fundcoef::QSeries;
using fundcoef::Rational;

TEST_CASE("Bernoulli numbers")
{
    CHECK(classical::bernoulli(0) == Rational(1));
    CHECK(classical::bernoulli(1) == Rational(-1, 2));
    CHECK(classical::bernoulli(2) == Rational(1, 6));
    CHECK(classical::bernoulli(3) == Rational(0));
    CHECK(classical::bernoulli(4) == Rational(-1, 30));
    CHECK(classical::bernoulli(12) == Rational(-691, 2730));
}

TEST_CASE("Eisenstein series")
{
    const auto e4 = classical::eisenstein(4, 20).series;
    const auto e6 = classical::eisenstein(6, 20).series;
    for (std::int64_t n = 1; n < 20; ++n) {
        CHECK(e4.coeff(n) == Rational(240 * fundcoef::arith::sigma(n, 3)));
        CHECK(e6.coeff(n) == Rational(-504 * fundcoef::arith::sigma(n, 5)));
    }
    // E_4^2 = E_8 (dim M_8 = 1).
    CHECK(e4 * e4 == classical::eisenstein(8, 20).series);
    CHECK_THROWS_AS(classical::eisenstein(2, 10), fundcoef::DomainError);
}

TEST_CASE("Euler product against the pentagonal number theorem")
{
    const std::int64_t prec = 400;
    QSeries::Terms t;
    for (std::int64_t k = -30; k <= 30; ++k) {
        const std::int64_t e = k * (3 * k - 1) / 2;
        if (e < prec) t[e] = Rational(k % 2 == 0 ? 1 : -1);
    }
    CHECK(classical::euler_product(prec) == QSeries(1, prec, t));
}

TEST_CASE("Delta = (E_4^3 - E_6^2) / 1728 to q^50")
{
    const std::int64_t prec = 50;
    const auto e4 = classical::eisenstein(4, prec).series;
    const auto e6 = classical::eisenstein(6, prec).series;
    const auto d = (e4.pow(3) - e6.pow(2)) * Rational(1, 1728);
    CHECK(classical::delta(prec).series == d);
    const auto& s = classical::delta(prec).series;
    CHECK(s.coeff(1) == Rational(1));
    CHECK(s.coeff(2) == Rational(-24));
    CHECK(s.coeff(3) == Rational(252));
    CHECK(s.coeff(11) == Rational(534612));
}

TEST_CASE("eta^24 is Delta")
{
    const auto eta = classical::eta(30).series;
    CHECK(eta.denom() == 24);
    CHECK(eta.coeff(1) == Rational(1));
    // eta known below q^30 gives eta^24 below q^31 (valuation 1/24 each).
    const auto d = eta.pow(24).integralize();
    CHECK(d.prec_exponent() == 31);
    CHECK(d.truncated(30) == classical::delta(30).series);
}

TEST_CASE("theta^4 counts sums of four squares")
{
    const std::int64_t prec = 200;
    const auto t4 = classical::theta(prec).series.pow(4);
    for (std::int64_t n = 1; n < prec; ++n) {
        std::int64_t r4 = 0;
        for (const auto d : fundcoef::arith::divisors(n)) {
            if (d % 4 != 0) r4 += 8 * d;
        }
        CHECK(t4.coeff(n) == Rational(r4));
    }
}

TEST_CASE("numerical evaluation")
{
    // theta(i/2) = sum e^(-pi n^2) = pi^(1/4) / Gamma(3/4).
    const auto th = classical::theta(60);
    const auto v = classical::evaluate(th, {0.0, 0.5}, {2.0, 0.0}, 1e-14);
    CHECK(v.value.real() == doctest::Approx(std::pow(std::numbers::pi, 0.25) / std::tgamma(0.75)).epsilon(1e-14));
    CHECK(std::abs(v.value.imag()) < 1e-15);
    CHECK(v.tail < 1e-14);
    // Direct summation of sum_n e^(2 pi i n^2 z) at a generic point.
    const std::complex<double> z(0.3, 0.2);
    std::complex<double> direct = 0.0;
    for (int n = -40; n <= 40; ++n) {
        direct += std::exp(2.0 * std::numbers::pi * std::complex<double>(0, 1) * static_cast<double>(n * n) * z);
    }
    const auto w = classical::evaluate(classical::theta(1000), z, {2.0, 0.0}, 1e-12);
    CHECK(std::abs(w.value - direct) < 1e-12);
    CHECK_THROWS_WITH_AS(classical::evaluate(classical::theta(5), {0.0, 0.01}, {2.0, 0.0}, 1e-8),
                         "insufficient precision", fundcoef::PrecisionError);
    CHECK_THROWS_AS(classical::evaluate(th, {0.0, -1.0}), fundcoef::DomainError);
}

TEST_CASE("growth fit bounds every known coefficient")
{
    const auto d = classical::delta(100).series;
    const auto g = classical::fit_growth(d, 6.0);
    for (const auto& [e, c] : d.terms()) {
        CHECK(std::abs(c.to_double()) <= g.constant * std::pow(static_cast<double>(e), 6.0) * (1 + 1e-12));
    }
}

TEST_CASE("small worked cases")
{
    const auto e4 = classical::eisenstein(4, 5).series;
    CHECK(e4.coeff(1) == Rational(240));
    CHECK(e4.coeff(1) == Rational(-8) / classical::bernoulli(4) * Rational(fundcoef::arith::sigma(1, 3)));
    CHECK(e4.coeff(2) == Rational(2160));
    CHECK(classical::eisenstein(6, 5).series.coeff(0) == Rational(1));
    const auto d = classical::delta(5).series;
    CHECK(d.coeff(0) == Rational(0));
    CHECK(d.coeff(1) == Rational(1));
    CHECK(d.coeff(2) == Rational(-24));
    const auto th = classical::theta(10).series;
    CHECK(th.coeff(0) == Rational(1));
    CHECK(th.coeff(4) == Rational(2));
    CHECK(th.coeff(3) == Rational(0));

    double direct = 0.0;
    for (int n = -7; n <= 7; ++n) direct += std::exp(-2.0 * std::numbers::pi * n * n);
    const auto v = classical::evaluate(classical::theta(50), {0.0, 1.0}, {2.0, 0.0}, 1e-15);
    CHECK(std::abs(v.value - direct) < 1e-15);

    const auto one = classical::evaluate(QSeries::constant(Rational(1), 10), {0.3, 0.7});
    CHECK(one.value == std::complex<double>(1.0, 0.0));

    const auto dl = classical::delta(80).series;
    const auto g = classical::fit_growth(dl, 6.5);
    const auto d60 = classical::evaluate(classical::delta(60), {0.0, 1.0}, g, 1e-20).value;
    const auto d80 = classical::evaluate(classical::delta(80), {0.0, 1.0}, g, 1e-20).value;
    CHECK(std::abs(d60 - d80) < 1e-20);
}
