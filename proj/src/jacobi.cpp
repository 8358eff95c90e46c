#include "fundcoef/jacobi.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "fundcoef/classical.hpp"
#include "fundcoef/errors.hpp"

namespace fundcoef::jacobi {

namespace {

constexpr int kDenom = 24;

enum class ThetaKind { One, Two, Three, Four };

// theta_i(tau, z) in u = q^(1/24), w = zeta^(1/2), all exponents < prec.
//   theta_1 = sum (-1)^n q^((2n+1)^2/8) zeta^((2n+1)/2)
//   theta_2 = sum        q^((2n+1)^2/8) zeta^((2n+1)/2)
//   theta_3 = sum        q^(n^2/2)      zeta^n
//   theta_4 = sum (-1)^n q^(n^2/2)      zeta^n
TwoVarSeries theta_two_var(ThetaKind kind, std::int64_t prec)
{
    TwoVarSeries::Terms t;
    const bool half = kind == ThetaKind::One || kind == ThetaKind::Two;
    const bool alternating = kind == ThetaKind::One || kind == ThetaKind::Four;
    for (std::int64_t n = 0;; ++n) {
        // m = 2n + 1 (half) or n; both signs of m handled together.
        const std::int64_t m = half ? 2 * n + 1 : n;
        const std::int64_t e = half ? 3 * m * m : 12 * m * m;
        if (e >= prec) break;
        // sign for +m and for -m: theta_1 uses (-1)^n with m = 2n+1, and
        // -m = 2(-n-1)+1 carries (-1)^(n+1).
        const int sign_pos = alternating && (n % 2 == 1) ? -1 : 1;
        const int sign_neg = half ? (alternating ? -sign_pos : sign_pos) : sign_pos;
        const int j = half ? static_cast<int>(m) : static_cast<int>(2 * m);
        auto& poly = t[e];
        poly[j] += Rational(sign_pos);
        if (j != 0) poly[-j] += Rational(sign_neg);
    }
    return TwoVarSeries(kDenom, prec, std::move(t));
}

QSeries at_z_zero(const TwoVarSeries& s)
{
    QSeries::Terms t;
    for (const auto& [e, poly] : s.terms()) {
        Rational sum;
        for (const auto& [j, c] : poly) sum += c;
        if (!sum.is_zero()) t.emplace(e, sum);
    }
    return QSeries(s.denom(), s.prec_exponent(), std::move(t));
}

TwoVarSeries finish(const TwoVarSeries& s, std::int64_t prec_q)
{
    if (s.prec_exponent() < kDenom * prec_q) {
        throw InvariantError("theta quotient lost precision: " + std::to_string(s.prec_exponent()) + " < " +
                             std::to_string(kDenom * prec_q));
    }
    TwoVarSeries::Terms t(s.terms().begin(), s.terms().lower_bound(kDenom * prec_q));
    return TwoVarSeries(kDenom, kDenom * prec_q, std::move(t));
}

} // namespace

JacobiCoeffs::JacobiCoeffs(int weight, std::int64_t prec_d, std::map<std::int64_t, Rational> table, bool cusp)
    : weight_(weight), prec_d_(prec_d), table_(std::move(table)), cusp_(cusp)
{
    std::erase_if(table_, [](const auto& kv) { return kv.second.is_zero(); });
    for (const auto& [d, v] : table_) {
        if (d >= prec_d_) throw InvariantError("Jacobi table entry at D = " + std::to_string(d) + " >= prec_D");
        if (d < -1 || (d % 4 + 4) % 4 == 1 || (d % 4 + 4) % 4 == 2) {
            throw InvariantError("Jacobi table entry at impossible D = " + std::to_string(d));
        }
        if (cusp_ && d <= 0) throw InvariantError("Jacobi cusp form with nonzero c(" + std::to_string(d) + ")");
    }
}

Rational JacobiCoeffs::c(std::int64_t d) const
{
    if (d >= prec_d_) throw PrecisionError("c(" + std::to_string(d) + ") is beyond prec_D");
    const auto it = table_.find(d);
    return it == table_.end() ? Rational() : it->second;
}

std::int64_t q_precision_for(std::int64_t prec_d)
{
    if (prec_d < 4) throw DomainError("prec_D must be at least 4");
    return prec_d / 4 + 2;
}

TwoVarSeries phi_m2_1_series(std::int64_t prec_q)
{
    const std::int64_t prec = kDenom * prec_q + 2 * kDenom;
    const TwoVarSeries th1 = theta_two_var(ThetaKind::One, prec);
    // eta^6 = q^(1/4) prod (1 - q^n)^6
    const QSeries eta6 = classical::euler_product(prec_q + 2).pow(6).rescaled(kDenom).shifted(6);
    return finish((th1 * th1) / eta6, prec_q);
}

TwoVarSeries phi_0_1_series(std::int64_t prec_q)
{
    const std::int64_t prec = kDenom * prec_q + 2 * kDenom;
    TwoVarSeries sum(kDenom, prec);
    for (const auto kind : {ThetaKind::Two, ThetaKind::Three, ThetaKind::Four}) {
        const TwoVarSeries th = theta_two_var(kind, prec);
        const QSeries th0 = at_z_zero(th);
        sum += (th * th) / (th0 * th0);
    }
    return finish(sum * Rational(4), prec_q);
}

JacobiCoeffs collapse(const TwoVarSeries& s, int weight, std::int64_t prec_d, bool cusp)
{
    const TwoVarSeries integral = s.integralize();
    const std::int64_t prec_q = integral.prec_exponent();
    if (4 * (prec_q - 1) < prec_d - 1) {
        throw PrecisionError("series precision q^" + std::to_string(prec_q) + " does not cover D < " +
                             std::to_string(prec_d));
    }

    auto cell = [&](std::int64_t n, std::int64_t r) { return integral.coeff(n, static_cast<int>(2 * r)); };

    for (const auto& [n, poly] : integral.terms()) {
        for (const auto& [j, v] : poly) {
            if (j % 2 != 0) throw InvariantError("fractional residue");
            const std::int64_t r = j / 2;
            if (4 * n - r * r < -1) throw InvariantError("D-dependence violated");
        }
    }

    // Canonical representative (n, r) with r in {0, 1}.
    std::map<std::int64_t, Rational> table;
    for (std::int64_t d = -1; d < prec_d; ++d) {
        const auto res = ((d % 4) + 4) % 4;
        if (res != 0 && res != 3) continue;
        const std::int64_t r = res == 0 ? 0 : 1;
        const Rational v = cell((d + r * r) / 4, r);
        if (!v.is_zero()) table.emplace(d, v);
    }

    // Every other cell with the same D must agree, zeros included.
    for (std::int64_t n = 0; n < prec_q; ++n) {
        const auto rmax = static_cast<std::int64_t>(std::sqrt(static_cast<double>(4 * n + 1))) + 1;
        for (std::int64_t r = -rmax; r <= rmax; ++r) {
            const std::int64_t d = 4 * n - r * r;
            if (d < -1 || d >= prec_d) continue;
            const auto it = table.find(d);
            const Rational expected = it == table.end() ? Rational() : it->second;
            if (cell(n, r) != expected) {
                throw InvariantError("D-dependence violated at (n, r) = (" + std::to_string(n) + ", " +
                                     std::to_string(r) + ")");
            }
        }
    }
    return JacobiCoeffs(weight, prec_d, std::move(table), cusp);
}

WeakGenerators weak_generators(std::int64_t prec_d)
{
    const std::int64_t prec_q = q_precision_for(prec_d);
    return {collapse(phi_0_1_series(prec_q), 0, prec_d, false),
            collapse(phi_m2_1_series(prec_q), -2, prec_d, false)};
}

JacobiCoeffs jacobi_cusp(int k, std::int64_t prec_d)
{
    if (k != 10 && k != 12) throw DomainError("jacobi_cusp: weight must be 10 or 12");
    const std::int64_t prec_q = q_precision_for(prec_d);
    const TwoVarSeries weak = k == 10 ? phi_m2_1_series(prec_q) : phi_0_1_series(prec_q);
    const QSeries delta = classical::delta(prec_q + 1).series;
    auto phi = collapse(weak * delta, k, prec_d, true);
    if (phi.c(3) != Rational(1)) throw InvariantError("Jacobi cusp form not normalized to c(3) = 1");
    return phi;
}

HalfIntegralForm ez_to_half(const JacobiCoeffs& phi)
{
    if (!phi.cusp()) throw DomainError("ez_to_half: Jacobi form must be a cusp form");
    std::vector<Rational> coeffs(static_cast<std::size_t>(phi.prec_d()));
    for (const auto& [d, v] : phi.table()) {
        if (d >= 1) coeffs[static_cast<std::size_t>(d)] = v;
    }
    return HalfIntegralForm(phi.weight() - 1, 4, std::move(coeffs));
}

} // namespace fundcoef::jacobi
