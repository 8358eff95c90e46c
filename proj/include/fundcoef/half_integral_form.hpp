#pragma once

#include <cstdint>
#include <vector>

#include "fundcoef/rational.hpp"

namespace fundcoef {

// Coefficients a(f, n), 1 <= n < prec, of a form of weight kappa + 1/2 on
// Gamma_0(level). level is a multiple of 4.
class HalfIntegralForm {
public:
    HalfIntegralForm(int kappa, std::int64_t level, std::int64_t prec);
    // coeffs[n] for n in [0, prec); coeffs[0] must be zero (cusp forms only).
    HalfIntegralForm(int kappa, std::int64_t level, std::vector<Rational> coeffs);

    int kappa() const { return kappa_; }
    std::int64_t level() const { return level_; }
    std::int64_t prec() const { return static_cast<std::int64_t>(coeffs_.size()); }

    // PrecisionError outside [1, prec).
    const Rational& coeff(std::int64_t n) const;
    void set_coeff(std::int64_t n, Rational value);

    friend bool operator==(const HalfIntegralForm&, const HalfIntegralForm&) = default;

private:
    int kappa_;
    std::int64_t level_;
    std::vector<Rational> coeffs_;
};

} // namespace fundcoef
