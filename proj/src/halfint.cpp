#include "fundcoef/halfint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fundcoef/arith.hpp"
#include "fundcoef/classical.hpp"
#include "fundcoef/errors.hpp"

namespace fundcoef::halfint {

double normalized_coeff(const HalfIntegralForm& f, std::int64_t n)
{
    const Rational& a = f.coeff(n);
    if (a.is_zero()) return 0.0;
    return a.to_double() * std::pow(static_cast<double>(n), 0.25 - 0.5 * f.kappa());
}

bool plus_space_support_ok(const HalfIntegralForm& f)
{
    const std::int64_t forbidden = f.kappa() % 2 == 0 ? 3 : 1; // (-1)^(kappa+1) mod 4
    for (std::int64_t n = 1; n < f.prec(); ++n) {
        const auto r = n % 4;
        if ((r == forbidden || r == 2) && !f.coeff(n).is_zero()) return false;
    }
    return true;
}

QSeries as_series(const HalfIntegralForm& f)
{
    QSeries::Terms t;
    for (std::int64_t n = 1; n < f.prec(); ++n) {
        if (!f.coeff(n).is_zero()) t.emplace_hint(t.end(), n, f.coeff(n));
    }
    return QSeries(1, f.prec(), std::move(t));
}

std::complex<double> theta_multiplier(const bqf::Matrix2& a, std::complex<double> z)
{
    if (a.det() != 1 || a.c % 4 != 0) throw DomainError("theta_multiplier: matrix is not in Gamma_0(4)");
    const std::complex<double> eps_inv = std::conj(arith::eps(a.d));
    const double symbol = arith::kronecker_extended(a.c, a.d);
    const std::complex<double> w = static_cast<double>(a.c) * z + static_cast<double>(a.d);
    return eps_inv * symbol * std::sqrt(w);
}

std::complex<double> mobius_action(const bqf::Matrix2& a, std::complex<double> z)
{
    return (static_cast<double>(a.a) * z + static_cast<double>(a.b)) /
           (static_cast<double>(a.c) * z + static_cast<double>(a.d));
}

ModularityReport modularity_check(const HalfIntegralForm& f, const bqf::Matrix2& a, std::complex<double> z,
                                  double tol)
{
    if (a.det() != 1 || a.c % f.level() != 0) {
        throw DomainError("modularity_check: matrix is not in Gamma_0(" + std::to_string(f.level()) + ")");
    }
    const QSeries s = as_series(f);
    const auto growth = classical::fit_growth(s, (f.kappa() + 0.5) / 2.0);
    const auto inf = std::numeric_limits<double>::infinity();
    const std::complex<double> az = mobius_action(a, z);
    const auto at_z = classical::evaluate(s, z, growth, inf);
    const auto at_az = classical::evaluate(s, az, growth, inf);
    const std::complex<double> j = std::pow(theta_multiplier(a, z), 2 * f.kappa() + 1);

    ModularityReport r;
    r.lhs = at_az.value;
    r.rhs = j * at_z.value;
    r.tail = at_az.tail + std::abs(j) * at_z.tail;
    const double scale = std::max(std::abs(r.lhs), std::abs(r.rhs));
    if (r.tail > 0.1 * tol * scale) throw PrecisionError("insufficient precision");
    r.relative_error = scale == 0.0 ? 0.0 : std::abs(r.lhs - r.rhs) / scale;
    r.pass = r.relative_error < tol;
    return r;
}

namespace {

void check_extraction_args(const siegel::SiegelForm& f, std::int64_t p)
{
    if (f.weight() % 2 != 0) throw DomainError("extraction needs even weight");
    if (p != 1 && (p % 2 == 0 || !arith::is_prime(p))) throw DomainError("extraction needs p odd prime (or 1)");
    if (p != 1 && f.level() % p == 0) throw DomainError("extraction needs p not dividing the level");
}

} // namespace

Rational extracted_coefficient(const siegel::SiegelForm& f, std::int64_t p, std::int64_t m)
{
    check_extraction_args(f, p);
    if (m < 1) throw DomainError("extracted_coefficient: m must be positive");
    Rational sum;
    for (const auto mu : arith::sqrt_classes(m, p)) {
        // disc of [(m + mu^2)/4p, mu/2; mu/2, p] is -m.
        sum += f.coefficient(bqf::BQF{(m + mu * mu) / (4 * p), mu, p});
    }
    return sum;
}

HalfIntegralForm extract_half_integral(const siegel::SiegelForm& f, std::int64_t p, std::int64_t prec)
{
    check_extraction_args(f, p);
    if (prec > f.prec_disc()) {
        throw PrecisionError("extraction to m < " + std::to_string(prec) + " needs |disc| < " +
                             std::to_string(prec) + " but the form stops at " + std::to_string(f.prec_disc()));
    }
    HalfIntegralForm h(f.weight() - 1, 4 * p * f.level(), prec);
    for (std::int64_t m = 1; m < prec; ++m) h.set_coeff(m, extracted_coefficient(f, p, m));
    return h;
}

DoublingReport doubling_identity_check(const siegel::SiegelForm& f, const bqf::BQF& t)
{
    const std::int64_t p = t.c;
    if (p < 3 || !arith::is_prime(p)) throw DomainError("doubling check: lower-right entry must be an odd prime");
    if (t.b % p == 0) throw DomainError("doubling check: p divides b0, so the two mu-classes coincide");
    DoublingReport r;
    r.p = p;
    r.d0 = 4 * t.a * p - t.b * t.b;
    r.coefficient = f.coefficient(t);
    r.c_d0 = extracted_coefficient(f, p, r.d0);
    r.holds = r.c_d0 == Rational(2) * r.coefficient;
    return r;
}

} // namespace fundcoef::halfint
