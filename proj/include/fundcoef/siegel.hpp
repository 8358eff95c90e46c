#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <shared_mutex>

#include "fundcoef/bqf.hpp"
#include "fundcoef/jacobi.hpp"
#include "fundcoef/rational.hpp"

namespace fundcoef::siegel {

// Degree-2 Siegel cusp form given by its Fourier coefficients a(F, T).
// The provider is only ever called on reduced forms; coefficient() reduces
// first, so a(F, A^T T A) = a(F, T) for A in SL2(Z) holds by construction.
// Values are memoized per reduced form; lookups are safe from several
// threads. Copies share the cache.
class SiegelForm {
public:
    using Provider = std::function<Rational(const bqf::BQF&)>;

    SiegelForm(int weight, std::int64_t level, std::int64_t prec_disc, Provider provider);

    int weight() const { return weight_; }
    std::int64_t level() const { return level_; }
    // Coefficients are available for |disc T| < prec_disc.
    std::int64_t prec_disc() const { return prec_disc_; }

    // DomainError for forms that are not positive definite, PrecisionError
    // "precision exhausted" for |disc| >= prec_disc.
    Rational coefficient(const bqf::BQF& t) const;

private:
    struct Cache {
        std::shared_mutex mutex;
        std::map<bqf::BQF, Rational> values;
    };

    int weight_;
    std::int64_t level_;
    std::int64_t prec_disc_;
    Provider provider_;
    std::shared_ptr<Cache> cache_;
};

// Maass (Saito-Kurokawa) lift of an index-1 Jacobi cusp form of even weight:
//   a(F, (a, b, c)) = sum_{d | gcd(a, b, c)} d^(k-1) c_phi((4ac - b^2) / d^2).
// prec_disc must not exceed phi.prec_d().
SiegelForm maass_lift(const jacobi::JacobiCoeffs& phi, std::int64_t prec_disc);

// Form backed by an explicit table keyed by reduced forms; reduced forms
// missing from the table have coefficient zero.
SiegelForm from_table(int weight, std::int64_t level, std::int64_t prec_disc, std::map<bqf::BQF, Rational> table);

Rational coefficient_by_class(const SiegelForm& f, const bqf::ClassGroup& g, int class_index);

} // namespace fundcoef::siegel
