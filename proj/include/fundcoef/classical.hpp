#pragma once

#include <complex>
#include <cstdint>

#include "fundcoef/qseries.hpp"
#include "fundcoef/rational.hpp"

namespace fundcoef::classical {

// A level-N form given by its truncated q-expansion. Weight is stored
// doubled so that theta and eta (weight 1/2) fit in an integer.
struct ClassicalForm {
    int weight_twice = 0;
    int level = 1;
    QSeries series;
};

// Exact Bernoulli number B_m (B_1 = -1/2 convention).
Rational bernoulli(int m);

// Normalized E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n for even k >= 4,
// known to q^prec.
ClassicalForm eisenstein(int k, std::int64_t prec);

// prod_{n >= 1} (1 - q^n), known to q^prec.
QSeries euler_product(std::int64_t prec);

// eta = q^(1/24) prod (1 - q^n), stored at denominator 24, known to q^prec.
ClassicalForm eta(std::int64_t prec);

// Delta = eta^24, integral coefficients, known to q^prec.
ClassicalForm delta(std::int64_t prec);

// theta = sum_{n in Z} q^(n^2), known to q^prec.
ClassicalForm theta(std::int64_t prec);

// Coefficient growth model |a(e)| <= constant * (e/denom)^exponent used by
// the tail estimate of evaluate().
struct GrowthBound {
    double constant = 1.0;
    double exponent = 0.0;
};

// Smallest constant C such that every stored coefficient with positive
// exponent satisfies |a| <= C * (e/denom)^exponent. A heuristic bound for
// the unknown tail, not a proof.
GrowthBound fit_growth(const QSeries& s, double exponent);

struct Evaluation {
    std::complex<double> value;
    // Bound on the omitted terms under the supplied growth model; infinity
    // when the model's ratio test fails at the truncation point.
    double tail = 0.0;
};

// Sums a(e) e(e z / denom) over the known prefix. With exponent 0 the tail
// is C |e(z)|^prec / (1 - |e(z)|). Throws DomainError for Im z <= 0 and
// PrecisionError "insufficient precision" when tail > tolerance.
Evaluation evaluate(const QSeries& s, std::complex<double> z, GrowthBound growth = {},
                    double tolerance = 1.0);

inline Evaluation evaluate(const ClassicalForm& f, std::complex<double> z, GrowthBound growth = {},
                           double tolerance = 1.0)
{
    return evaluate(f.series, z, growth, tolerance);
}

} // namespace fundcoef::classical
