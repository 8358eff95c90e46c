#pragma once

#include <complex>
#include <cstdint>

#include "fundcoef/bqf.hpp"
#include "fundcoef/half_integral_form.hpp"
#include "fundcoef/qseries.hpp"
#include "fundcoef/siegel.hpp"

namespace fundcoef::halfint {

// a(f, n) n^(1/4 - kappa/2).
double normalized_coeff(const HalfIntegralForm& f, std::int64_t n);

// a(f, n) = 0 whenever n = (-1)^(kappa+1) or 2 mod 4.
bool plus_space_support_ok(const HalfIntegralForm& f);

// The q-expansion sum a(f, n) q^n.
QSeries as_series(const HalfIntegralForm& f);

// j(A, z) = eps_d^(-1) (c/d) (cz + d)^(1/2) for A = [a, b; c, d] in Gamma_0(4),
// principal square root. DomainError unless det A = 1 and 4 | c.
std::complex<double> theta_multiplier(const bqf::Matrix2& a, std::complex<double> z);

std::complex<double> mobius_action(const bqf::Matrix2& a, std::complex<double> z);

struct ModularityReport {
    std::complex<double> lhs; // f(Az)
    std::complex<double> rhs; // j(A, z)^(2 kappa + 1) f(z)
    double relative_error = 0.0;
    double tail = 0.0; // combined truncation bound entering lhs - rhs
    bool pass = false;
};

// Compares f(Az) with j(A, z)^(2 kappa + 1) f(z). Truncation tails use the
// growth model |a(n)| <= C n^((kappa + 1/2)/2) with C fitted to the known
// coefficients; PrecisionError "insufficient precision" when the tails
// exceed a tenth of tol relative to the compared values.
ModularityReport modularity_check(const HalfIntegralForm& f, const bqf::Matrix2& a, std::complex<double> z,
                                  double tol);

// c(m) = sum_{0 <= mu < 2p, mu^2 = -m mod 4p} a(F, [(m + mu^2)/4p, mu/2; mu/2, p]).
Rational extracted_coefficient(const siegel::SiegelForm& f, std::int64_t p, std::int64_t m);

// h = sum_{1 <= m < prec} c(m) q^m, weight k - 1/2 (kappa = k - 1), level
// 4 p level(F). p is an odd prime not dividing level(F); p = 1 is accepted
// as the index-1 special case that reproduces the Eichler-Zagier image of
// a Maass lift. DomainError for odd weight, even p or p | level;
// PrecisionError when prec exceeds the form's disc precision.
HalfIntegralForm extract_half_integral(const siegel::SiegelForm& f, std::int64_t p, std::int64_t prec);

struct DoublingReport {
    std::int64_t p = 0;
    std::int64_t d0 = 0;
    Rational c_d0;        // coefficient of q^d0 in h
    Rational coefficient; // a(F, T)
    bool holds = false;   // c_d0 == 2 a(F, T)
};

// T = (a0, b0, p) with p an odd prime, p not dividing b0 or level(F):
// checks c_h(d0) = 2 a(F, T), d0 = 4 a0 p - b0^2, h = extract(F, p).
DoublingReport doubling_identity_check(const siegel::SiegelForm& f, const bqf::BQF& t);

} // namespace fundcoef::halfint
