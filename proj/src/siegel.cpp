#include "fundcoef/siegel.hpp"

#include <mutex>
#include <string>
#include <utility>

#include "fundcoef/arith.hpp"
#include "fundcoef/errors.hpp"

namespace fundcoef::siegel {

SiegelForm::SiegelForm(int weight, std::int64_t level, std::int64_t prec_disc, Provider provider)
    : weight_(weight), level_(level), prec_disc_(prec_disc), provider_(std::move(provider)),
      cache_(std::make_shared<Cache>())
{
    if (weight % 2 != 0) throw DomainError("Siegel forms here have even weight");
    if (level < 1) throw DomainError("Siegel level must be positive");
}

Rational SiegelForm::coefficient(const bqf::BQF& t) const
{
    if (!t.positive_definite()) throw DomainError("a(F, T) needs a positive definite T");
    if (-t.disc() >= prec_disc_) {
        throw PrecisionError("precision exhausted: |disc| = " + std::to_string(-t.disc()) + " >= " +
                             std::to_string(prec_disc_));
    }
    const bqf::BQF key = bqf::reduce(t).form;
    {
        std::shared_lock lock(cache_->mutex);
        const auto it = cache_->values.find(key);
        if (it != cache_->values.end()) return it->second;
    }
    Rational value = provider_(key);
    std::unique_lock lock(cache_->mutex);
    return cache_->values.try_emplace(key, std::move(value)).first->second;
}

SiegelForm maass_lift(const jacobi::JacobiCoeffs& phi, std::int64_t prec_disc)
{
    if (!phi.cusp()) throw DomainError("maass_lift: Jacobi form must be a cusp form");
    if (phi.weight() % 2 != 0) throw DomainError("maass_lift: weight must be even");
    if (prec_disc > phi.prec_d()) throw PrecisionError("maass_lift: prec_disc exceeds the Jacobi table precision");
    auto table = std::make_shared<const jacobi::JacobiCoeffs>(phi);
    const int k = phi.weight();
    return SiegelForm(k, 1, prec_disc, [table, k](const bqf::BQF& t) {
        const std::int64_t big_d = -t.disc();
        Rational sum;
        for (const auto d : arith::divisors(t.content())) {
            const Rational c = table->c(big_d / (d * d));
            if (c.is_zero()) continue;
            sum += Rational(d).pow(static_cast<unsigned>(k - 1)) * c;
        }
        return sum;
    });
}

SiegelForm from_table(int weight, std::int64_t level, std::int64_t prec_disc, std::map<bqf::BQF, Rational> table)
{
    for (const auto& [f, v] : table) {
        if (!bqf::is_reduced(f)) throw InvariantError("Siegel table key is not a reduced form");
        if (-f.disc() >= prec_disc) throw InvariantError("Siegel table entry beyond prec_disc");
    }
    auto shared = std::make_shared<const std::map<bqf::BQF, Rational>>(std::move(table));
    return SiegelForm(weight, level, prec_disc, [shared](const bqf::BQF& t) {
        const auto it = shared->find(t);
        return it == shared->end() ? Rational() : it->second;
    });
}

Rational coefficient_by_class(const SiegelForm& f, const bqf::ClassGroup& g, int class_index)
{
    if (class_index < 0 || class_index >= g.h()) throw DomainError("class index out of range");
    return f.coefficient(g.reduced()[static_cast<std::size_t>(class_index)]);
}

} // namespace fundcoef::siegel
