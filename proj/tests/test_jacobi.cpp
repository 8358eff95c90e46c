#include <doctest.h>

#include <map>
#include <utility>

#include "fundcoef/classical.hpp"
#include "fundcoef/errors.hpp"
#include "fundcoef/jacobi.hpp"

namespace jacobi = fundcoef::jacobi;
using fundcoef::BigInt;
using fundcoef::Rational;
using fundcoef::TwoVarSeries;

namespace {

// (zeta - 2 + zeta^-1) prod_n (1 - q^n zeta)^2 (1 - q^n zeta^-1)^2 / (1 - q^n)^4,
// as (n, r) -> coefficient of q^n zeta^r for n < prec.
std::map<std::pair<int, int>, BigInt> phi_m2_product(int prec)
{
    std::map<std::pair<int, int>, BigInt> c{{{0, 1}, 1}, {{0, 0}, -2}, {{0, -1}, 1}};
    auto times_binomial = [&](int n, int r) { // multiply by (1 - q^n zeta^r)
        std::map<std::pair<int, int>, BigInt> out = c;
        for (const auto& [key, v] : c) {
            if (key.first + n < prec) out[{key.first + n, key.second + r}] -= v;
        }
        c = std::move(out);
    };
    for (int n = 1; n < prec; ++n) {
        for (int i = 0; i < 2; ++i) {
            times_binomial(n, 1);
            times_binomial(n, -1);
        }
        for (int i = 0; i < 4; ++i) { // divide by (1 - q^n): prefix sums along stride n
            for (int m = n; m < prec; ++m) {
                for (int r = -2 * prec; r <= 2 * prec; ++r) {
                    const auto src = c.find({m - n, r});
                    if (src != c.end() && src->second != 0) c[{m, r}] += src->second;
                }
            }
        }
    }
    return c;
}

std::int64_t isqrt_bound(std::int64_t n) { return static_cast<std::int64_t>(std::sqrt(4.0 * n + 1.0)) + 1; }

} // namespace

TEST_CASE("phi_{-2,1} matches its product formula")
{
    const int prec = 8;
    const auto oracle = phi_m2_product(prec);
    const auto gens = jacobi::weak_generators(4 * prec - 4);
    for (int n = 0; n + 1 < prec; ++n) {
        for (int r = -2 * n - 2; r <= 2 * n + 2; ++r) {
            if (4 * n - r * r >= gens.phi_m2_1.prec_d()) continue;
            const auto it = oracle.find({n, r});
            const BigInt expected = it == oracle.end() ? BigInt(0) : it->second;
            CAPTURE(n);
            CAPTURE(r);
            CHECK(gens.phi_m2_1.c(n, r) == Rational(expected));
        }
    }
}

TEST_CASE("weak generators: known coefficients")
{
    const auto g = jacobi::weak_generators(20);
    CHECK(g.phi_m2_1.c(-1) == Rational(1));
    CHECK(g.phi_m2_1.c(0) == Rational(-2));
    CHECK(g.phi_m2_1.c(3) == Rational(8));
    CHECK(g.phi_m2_1.c(4) == Rational(-12));
    CHECK(g.phi_0_1.c(-1) == Rational(1));
    CHECK(g.phi_0_1.c(0) == Rational(10));
    CHECK(g.phi_0_1.c(3) == Rational(-64));
    CHECK(g.phi_0_1.c(4) == Rational(108));
    CHECK(g.phi_0_1.c(-5) == Rational(0));
    CHECK(g.phi_0_1.c(5) == Rational(0)); // D = 1 mod 4
}

TEST_CASE("specialization at z = 0: phi_{0,1}(tau, 0) = 12, phi_{-2,1}(tau, 0) = 0")
{
    const std::int64_t prec_d = 200;
    const auto g = jacobi::weak_generators(prec_d);
    for (std::int64_t n = 0; 4 * n < prec_d; ++n) {
        Rational s0;
        Rational s2;
        const auto rmax = isqrt_bound(n);
        for (std::int64_t r = -rmax; r <= rmax; ++r) {
            s0 += g.phi_0_1.c(n, r);
            s2 += g.phi_m2_1.c(n, r);
        }
        CAPTURE(n);
        CHECK(s0 == Rational(n == 0 ? 12 : 0));
        CHECK(s2 == Rational(0));
    }
}

TEST_CASE("cusp forms are Delta times the weak generators")
{
    const std::int64_t prec_d = 120;
    const auto g = jacobi::weak_generators(prec_d);
    const auto phi10 = jacobi::jacobi_cusp(10, prec_d);
    const auto phi12 = jacobi::jacobi_cusp(12, prec_d);
    const auto delta = fundcoef::classical::delta(prec_d).series;
    for (std::int64_t n = 1; 4 * n < prec_d; ++n) {
        const auto rmax = isqrt_bound(n);
        for (std::int64_t r = -rmax; r <= rmax; ++r) {
            if (4 * n - r * r >= prec_d) continue;
            Rational e10;
            Rational e12;
            for (std::int64_t k = 1; k <= n; ++k) {
                e10 += delta.coeff(k) * g.phi_m2_1.c(n - k, r);
                e12 += delta.coeff(k) * g.phi_0_1.c(n - k, r);
            }
            CHECK(phi10.c(n, r) == e10);
            CHECK(phi12.c(n, r) == e12);
        }
    }
}

TEST_CASE("cusp form tables")
{
    const std::vector<std::int64_t> ds = {3, 4, 7, 8, 11, 12, 15, 16, 19, 20, 23, 24, 27, 28};
    const std::vector<std::int64_t> c10 = {1,    -2,    -16,   36,    99,    -272,  -240,
                                           1056, -253,  -1800, 2736,  -1464, -4284, 12544};
    const std::vector<std::int64_t> c12 = {1,     10,    -88,    -132,    1275,  736,    -8040,
                                           -2880, 24035, 13080, -14136, -54120, -128844, 115456};
    const auto phi10 = jacobi::jacobi_cusp(10, 30);
    const auto phi12 = jacobi::jacobi_cusp(12, 30);
    for (std::size_t i = 0; i < ds.size(); ++i) {
        CAPTURE(ds[i]);
        CHECK(phi10.c(ds[i]) == Rational(c10[i]));
        CHECK(phi12.c(ds[i]) == Rational(c12[i]));
    }
    for (std::int64_t d = -1; d <= 0; ++d) {
        CHECK(phi10.c(d).is_zero());
        CHECK(phi12.c(d).is_zero());
    }
    // By hand: c(7) = c(2, 1) = tau(1) c_{-2}(1, 1) + tau(2) c_{-2}(0, 1) = 8 - 24 = -16.
    CHECK(phi10.c(7) == Rational(1 * 8 + (-24) * 1));
    CHECK(phi10.c(8) == Rational(1 * (-12) + (-24) * (-2)));
    CHECK(phi12.c(7) == Rational(-64 + (-24) * 1));
    CHECK(phi12.c(8) == Rational(108 + (-24) * 10));
}

TEST_CASE("collapse rejects inconsistent or fractional expansions")
{
    // q^0 zeta^1 has D = -1; q^1 zeta^{+-1} share D = 3 but disagree.
    const TwoVarSeries bad(1, 3, {{0, {{2, Rational(1)}}}, {1, {{2, Rational(5)}, {-2, Rational(7)}}}});
    CHECK_THROWS_AS(jacobi::collapse(bad, 0, 4, false), fundcoef::InvariantError);
    const TwoVarSeries too_negative(1, 3, {{0, {{4, Rational(1)}}}}); // D = -4
    CHECK_THROWS_WITH_AS(jacobi::collapse(too_negative, 0, 4, false), "D-dependence violated",
                         fundcoef::InvariantError);
    const TwoVarSeries odd(1, 3, {{1, {{1, Rational(1)}}}});
    CHECK_THROWS_WITH_AS(jacobi::collapse(odd, 0, 4, false), "fractional residue", fundcoef::InvariantError);
    const TwoVarSeries short_series(1, 1, {});
    CHECK_THROWS_AS(jacobi::collapse(short_series, 0, 40, false), fundcoef::PrecisionError);
}

TEST_CASE("JacobiCoeffs invariants")
{
    CHECK_THROWS_AS(jacobi::JacobiCoeffs(10, 10, {{5, Rational(1)}}, true), fundcoef::InvariantError);
    CHECK_THROWS_AS(jacobi::JacobiCoeffs(10, 10, {{0, Rational(1)}}, true), fundcoef::InvariantError);
    CHECK_THROWS_AS(jacobi::JacobiCoeffs(10, 10, {{12, Rational(1)}}, true), fundcoef::InvariantError);
    const jacobi::JacobiCoeffs phi(10, 10, {{3, Rational(1)}}, true);
    CHECK_THROWS_AS(phi.c(10), fundcoef::PrecisionError);
    CHECK(phi.c(-7).is_zero());
    CHECK_THROWS_AS(jacobi::jacobi_cusp(11, 10), fundcoef::DomainError);
}

TEST_CASE("Eichler-Zagier image")
{
    const auto phi = jacobi::jacobi_cusp(10, 50);
    const auto h = jacobi::ez_to_half(phi);
    CHECK(h.kappa() == 9);
    CHECK(h.level() == 4);
    CHECK(h.prec() == 50);
    for (std::int64_t n = 1; n < 50; ++n) CHECK(h.coeff(n) == phi.c(n));
}
