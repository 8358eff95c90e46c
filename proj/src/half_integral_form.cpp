#include "fundcoef/half_integral_form.hpp"

#include <string>
#include <utility>

#include "fundcoef/errors.hpp"

namespace fundcoef {

HalfIntegralForm::HalfIntegralForm(int kappa, std::int64_t level, std::int64_t prec)
    : HalfIntegralForm(kappa, level, std::vector<Rational>(static_cast<std::size_t>(prec < 1 ? 1 : prec)))
{
}

HalfIntegralForm::HalfIntegralForm(int kappa, std::int64_t level, std::vector<Rational> coeffs)
    : kappa_(kappa), level_(level), coeffs_(std::move(coeffs))
{
    if (level_ < 4 || level_ % 4 != 0) throw DomainError("half-integral level must be a positive multiple of 4");
    if (coeffs_.empty()) coeffs_.emplace_back();
    if (!coeffs_[0].is_zero()) throw InvariantError("half-integral cusp form with nonzero constant term");
}

const Rational& HalfIntegralForm::coeff(std::int64_t n) const
{
    if (n < 1 || n >= prec()) {
        throw PrecisionError("a(f, " + std::to_string(n) + ") outside the computed range [1, " +
                             std::to_string(prec()) + ")");
    }
    return coeffs_[static_cast<std::size_t>(n)];
}

void HalfIntegralForm::set_coeff(std::int64_t n, Rational value)
{
    if (n < 1 || n >= prec()) throw PrecisionError("set_coeff outside the computed range");
    coeffs_[static_cast<std::size_t>(n)] = std::move(value);
}

} // namespace fundcoef
