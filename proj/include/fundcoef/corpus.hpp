#pragma once

#include <cstdint>

#include "fundcoef/half_integral_form.hpp"
#include "fundcoef/jacobi.hpp"
#include "fundcoef/siegel.hpp"

namespace fundcoef {

// The level-1 test corpus: the two index-1 Jacobi cusp forms, their Maass
// lifts (spanning S_10 and S_12 of degree 2) and their Eichler-Zagier images.
struct Corpus {
    jacobi::JacobiCoeffs phi10;
    jacobi::JacobiCoeffs phi12;
    siegel::SiegelForm f10;
    siegel::SiegelForm f12;
    HalfIntegralForm h10;
    HalfIntegralForm h12;
};

Corpus build_corpus(std::int64_t prec_d);

} // namespace fundcoef
