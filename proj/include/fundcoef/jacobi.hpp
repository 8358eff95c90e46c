#pragma once

#include <cstdint>
#include <map>

#include "fundcoef/half_integral_form.hpp"
#include "fundcoef/qseries.hpp"
#include "fundcoef/rational.hpp"

namespace fundcoef::jacobi {

// Index-1 Jacobi form stored by discriminant: the coefficient of q^n zeta^r
// is c(4n - r^2). Valid for D < prec_D; zero entries are not stored.
class JacobiCoeffs {
public:
    JacobiCoeffs(int weight, std::int64_t prec_d, std::map<std::int64_t, Rational> table, bool cusp);

    int weight() const { return weight_; }
    int index() const { return 1; }
    std::int64_t prec_d() const { return prec_d_; }
    bool cusp() const { return cusp_; }
    const std::map<std::int64_t, Rational>& table() const { return table_; }

    // c(D); zero for D < -1 or D = 1, 2 mod 4. PrecisionError for D >= prec_D.
    Rational c(std::int64_t d) const;
    Rational c(std::int64_t n, std::int64_t r) const { return c(4 * n - r * r); }

    friend bool operator==(const JacobiCoeffs&, const JacobiCoeffs&) = default;

private:
    int weight_;
    std::int64_t prec_d_;
    std::map<std::int64_t, Rational> table_;
    bool cusp_;
};

// Theta-quotient expansions in u = q^(1/24) (denominator 24) and w = zeta^(1/2),
// known to q^prec_q.
//   phi_{-2,1} = theta_1(tau,z)^2 / eta^6
//   phi_{0,1}  = 4 * sum_{i=2,3,4} theta_i(tau,z)^2 / theta_i(tau,0)^2
TwoVarSeries phi_m2_1_series(std::int64_t prec_q);
TwoVarSeries phi_0_1_series(std::int64_t prec_q);

// q-precision needed so that every D < prec_D has a representative cell.
std::int64_t q_precision_for(std::int64_t prec_d);

// Collapses an index-1 two-variable expansion to its D-table. Throws
// InvariantError "fractional residue" for non-integral q or zeta powers and
// "D-dependence violated" when two cells with equal 4n - r^2 < prec_D
// disagree (or a cell with D < -1 is nonzero).
JacobiCoeffs collapse(const TwoVarSeries& s, int weight, std::int64_t prec_d, bool cusp);

struct WeakGenerators {
    JacobiCoeffs phi_0_1;
    JacobiCoeffs phi_m2_1;
};

WeakGenerators weak_generators(std::int64_t prec_d);

// phi_{10,1} = Delta * phi_{-2,1} and phi_{12,1} = Delta * phi_{0,1}, both
// normalized with c(3) = 1. k must be 10 or 12.
JacobiCoeffs jacobi_cusp(int k, std::int64_t prec_d);

// Eichler-Zagier image sum_{D >= 1} c(D) q^D: weight k - 1/2 (kappa = k - 1)
// on Gamma_0(4), coefficients 1 <= n < prec_D.
HalfIntegralForm ez_to_half(const JacobiCoeffs& phi);

} // namespace fundcoef::jacobi
