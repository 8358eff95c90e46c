#include "fundcoef/analysis.hpp"

#include <cmath>
#include <string>

#include "fundcoef/arith.hpp"
#include "fundcoef/errors.hpp"
#include "fundcoef/halfint.hpp"

namespace fundcoef::analysis {

namespace {

double normalized_sq(const HalfIntegralForm& f, std::int64_t n)
{
    const Rational& a = f.coeff(n);
    if (a.is_zero()) return 0.0;
    return (a * a).to_double() * std::pow(static_cast<double>(n), 0.5 - f.kappa());
}

ScanReport scan_siegel(const siegel::SiegelForm& f, std::int64_t x, ScanMode mode)
{
    if (x > f.prec_disc()) {
        throw PrecisionError("scan to X = " + std::to_string(x) + " exceeds prec_disc " +
                             std::to_string(f.prec_disc()));
    }
    ScanReport rep;
    rep.mode = mode;
    rep.x = x;
    for (std::int64_t d = 1; d < x; ++d) {
        if (!arith::is_discriminant(-d)) continue;
        if (mode == ScanMode::Fundamental && !arith::is_squarefree(d)) continue;
        for (const auto& s : bqf::reduced_forms(d)) {
            if (!bqf::is_primitive(s)) continue;
            Rational v = f.coefficient(s);
            if (v.is_zero()) continue;
            rep.hits.push_back(d);
            rep.witnesses.emplace(d, Witness{s, std::move(v)});
            break;
        }
    }
    return rep;
}

} // namespace

ScanReport scan_half(const HalfIntegralForm& f, std::int64_t x)
{
    if (x > f.prec()) {
        throw PrecisionError("scan to X = " + std::to_string(x) + " exceeds prec " + std::to_string(f.prec()));
    }
    ScanReport rep;
    rep.mode = ScanMode::Half;
    rep.x = x;
    for (std::int64_t d = 1; d < x; ++d) {
        if (!arith::is_squarefree(d)) continue;
        const Rational& v = f.coeff(d);
        if (v.is_zero()) continue;
        rep.hits.push_back(d);
        rep.witnesses.emplace(d, Witness{d, v});
    }
    return rep;
}

ScanReport scan_fundamental(const siegel::SiegelForm& f, std::int64_t x)
{
    return scan_siegel(f, x, ScanMode::Fundamental);
}

ScanReport scan_primitive(const siegel::SiegelForm& f, std::int64_t x)
{
    return scan_siegel(f, x, ScanMode::Primitive);
}

std::complex<double> bessel_period(const siegel::SiegelForm& f, const bqf::ClassGroup& g,
                                   const bqf::ClassCharacter& chi)
{
    std::complex<double> sum = 0.0;
    for (int i = 0; i < g.h(); ++i) {
        sum += siegel::coefficient_by_class(f, g, i).to_double() * std::conj(bqf::char_eval(g, chi, i));
    }
    return sum;
}

InversionReport fourier_inversion_check(const siegel::SiegelForm& f, const bqf::ClassGroup& g)
{
    const auto chars = bqf::characters(g);
    std::vector<std::complex<double>> periods;
    periods.reserve(chars.size());
    for (const auto& chi : chars) periods.push_back(bessel_period(f, g, chi));

    InversionReport rep;
    double max_abs = 0.0;
    for (int c = 0; c < g.h(); ++c) {
        std::complex<double> recon = 0.0;
        for (std::size_t i = 0; i < chars.size(); ++i) recon += periods[i] * bqf::char_eval(g, chars[i], c);
        const double a = siegel::coefficient_by_class(f, g, c).to_double();
        max_abs = std::max(max_abs, std::abs(a));
        rep.defect = std::max(rep.defect, std::abs(recon - static_cast<double>(g.h()) * a));
    }
    rep.scale = 1.0 + max_abs;
    return rep;
}

double sieve_sum_direct(const HalfIntegralForm& f, std::int64_t m, double x, std::int64_t cutoff)
{
    if (cutoff >= f.prec()) throw PrecisionError("sieve cutoff beyond the form's precision");
    double sum = 0.0;
    for (std::int64_t d = 1; d <= cutoff; ++d) {
        if (arith::gcd(d, m) != 1 || !arith::is_squarefree(d)) continue;
        sum += normalized_sq(f, d) * std::exp(-static_cast<double>(d) / x);
    }
    return sum;
}

double sieve_sum_rearranged(const HalfIntegralForm& f, std::int64_t m, double x, std::int64_t cutoff)
{
    if (cutoff >= f.prec()) throw PrecisionError("sieve cutoff beyond the form's precision");
    double sum = 0.0;
    for (std::int64_t r = 1; r * r <= cutoff; ++r) {
        const int mu = arith::moebius(r);
        if (mu == 0 || arith::gcd(r, m) != 1) continue;
        double inner = 0.0;
        for (std::int64_t n = 1; n * r * r <= cutoff; ++n) {
            if (arith::gcd(n, m) != 1) continue;
            inner += normalized_sq(f, n * r * r) * std::exp(-static_cast<double>(r * r * n) / x);
        }
        sum += mu * inner;
    }
    return sum;
}

GrowthReport growth_report(const HalfIntegralForm& f, std::int64_t x, double delta)
{
    if (x > f.prec()) throw PrecisionError("growth report beyond the form's precision");
    GrowthReport rep;
    for (std::int64_t d = 1; d < x; ++d) {
        if (!arith::is_squarefree(d) || f.coeff(d).is_zero()) continue;
        const double sq = normalized_sq(f, d);
        const double ratio = sq / std::pow(static_cast<double>(d), 1.0 - delta);
        rep.table.push_back({d, sq, ratio});
        if (ratio > rep.max_ratio) {
            rep.max_ratio = ratio;
            rep.argmax = d;
        }
    }
    return rep;
}

} // namespace fundcoef::analysis
