#include "fundcoef/corpus.hpp"

namespace fundcoef {

Corpus build_corpus(std::int64_t prec_d)
{
    auto phi10 = jacobi::jacobi_cusp(10, prec_d);
    auto phi12 = jacobi::jacobi_cusp(12, prec_d);
    auto f10 = siegel::maass_lift(phi10, prec_d);
    auto f12 = siegel::maass_lift(phi12, prec_d);
    auto h10 = jacobi::ez_to_half(phi10);
    auto h12 = jacobi::ez_to_half(phi12);
    return {std::move(phi10), std::move(phi12), std::move(f10), std::move(f12), std::move(h10), std::move(h12)};
}

} // namespace fundcoef
