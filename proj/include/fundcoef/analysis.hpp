#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <variant>
#include <vector>

#include "fundcoef/bqf.hpp"
#include "fundcoef/half_integral_form.hpp"
#include "fundcoef/rational.hpp"
#include "fundcoef/siegel.hpp"

namespace fundcoef::analysis {

enum class ScanMode { Half, Fundamental, Primitive };

struct Witness {
    // The reduced form for Siegel scans, or the index n for half-integral scans.
    std::variant<bqf::BQF, std::int64_t> where;
    Rational value;
};

// Indices 0 < d < X with a nonzero witness. For Half and Fundamental scans
// every d is squarefree; Primitive scans range over all d with -d a
// discriminant.
struct ScanReport {
    ScanMode mode = ScanMode::Half;
    std::int64_t x = 0;
    std::vector<std::int64_t> hits;
    std::map<std::int64_t, Witness> witnesses;
};

// Squarefree d < X with a(f, d) != 0. PrecisionError if X > prec(f).
ScanReport scan_half(const HalfIntegralForm& f, std::int64_t x);

// Squarefree d < X such that some reduced S with disc S = -d has
// a(F, S) != 0; the witness is the first such S in reduced_forms order.
ScanReport scan_fundamental(const siegel::SiegelForm& f, std::int64_t x);

// As scan_fundamental, over every discriminant -d and primitive S.
ScanReport scan_primitive(const siegel::SiegelForm& f, std::int64_t x);

// R(F, K, Lambda) = sum_c a(F, c) conj(Lambda(c)).
std::complex<double> bessel_period(const siegel::SiegelForm& f, const bqf::ClassGroup& g,
                                   const bqf::ClassCharacter& chi);

struct InversionReport {
    double defect = 0.0; // max_c |sum_Lambda R(Lambda) Lambda(c) - h a(F, c)|
    double scale = 0.0;  // 1 + max_c |a(F, c)|
    bool within_contract() const { return defect < 1e-9 * scale; }
};

InversionReport fourier_inversion_check(const siegel::SiegelForm& f, const bqf::ClassGroup& g);

// Direct sum over squarefree d <= cutoff with gcd(d, M) = 1 of
// |a~(f, d)|^2 exp(-d/X).
double sieve_sum_direct(const HalfIntegralForm& f, std::int64_t m, double x, std::int64_t cutoff);

// sum_{r squarefree, (r, M) = 1} mu(r) sum_{n r^2 <= cutoff, (n, M) = 1}
// |a~(f, n r^2)|^2 exp(-r^2 n / X); the same finite sum as the direct one.
double sieve_sum_rearranged(const HalfIntegralForm& f, std::int64_t m, double x, std::int64_t cutoff);

struct GrowthRow {
    std::int64_t d;
    double normalized_sq; // |a~(f, d)|^2
    double ratio;         // |a~(f, d)|^2 / d^(1 - delta)
};

struct GrowthReport {
    double max_ratio = 0.0;
    std::int64_t argmax = 0; // 0 when every coefficient vanishes
    std::vector<GrowthRow> table; // squarefree d < X with a(f, d) != 0
};

GrowthReport growth_report(const HalfIntegralForm& f, std::int64_t x, double delta);

} // namespace fundcoef::analysis
