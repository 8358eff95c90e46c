#include "fundcoef/checks.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <sstream>

#include "fundcoef/analysis.hpp"
#include "fundcoef/arith.hpp"
#include "fundcoef/classical.hpp"
#include "fundcoef/corpus.hpp"
#include "fundcoef/errors.hpp"
#include "fundcoef/halfint.hpp"

namespace fundcoef::checks {

namespace {

constexpr std::int64_t kCorpusPrec = 1000;

const Corpus& corpus()
{
    static const Corpus c = build_corpus(kCorpusPrec);
    return c;
}

std::string str(const bqf::Matrix2& m)
{
    std::ostringstream os;
    os << m;
    return os.str();
}

// theta known far enough that the tail 2 x^P / (1 - x) stays below 1e-14
// at the smallest imaginary part involved.
std::int64_t theta_prec_for(double min_imag)
{
    const double rate = 2.0 * std::numbers::pi * min_imag;
    const double x = std::exp(-rate);
    return static_cast<std::int64_t>(std::ceil((std::log(2.0 / (1.0 - x)) + 14.0 * std::log(10.0)) / rate)) + 1;
}

std::vector<CheckResult> theta_suite()
{
    const std::vector<std::string> words = {"T", "U", "u", "TU", "UT", "Tu", "UTU", "TUT", "uTTu", "NUTU"};
    const std::vector<std::complex<double>> points = {{0.0, 0.5}, {0.2, 1.0 / 3.0}, {0.0, 2.0}};
    std::vector<CheckResult> out;
    for (const auto& w : words) {
        const auto a = gamma0_4_word(w);
        for (const auto z : points) {
            const auto az = halfint::mobius_action(a, z);
            const auto th = classical::theta(theta_prec_for(std::min(z.imag(), az.imag())));
            const classical::GrowthBound g{2.0, 0.0};
            const auto lhs = classical::evaluate(th, az, g, 1e-10).value;
            const auto rhs = halfint::theta_multiplier(a, z) * classical::evaluate(th, z, g, 1e-10).value;
            const double err = std::abs(lhs - rhs) / std::max(std::abs(lhs), std::abs(rhs));
            std::ostringstream name;
            name << "theta(Az) = j(A,z) theta(z), A = " << w << " " << str(a) << ", z = " << z;
            out.push_back({"theta", name.str(), err < 1e-8, err, 1e-8, ""});
        }
    }
    return out;
}

std::vector<CheckResult> ez_suite()
{
    const auto& c = corpus();
    std::vector<CheckResult> out;
    for (const auto* pair : {&c.f10, &c.f12}) {
        const auto& ez = pair == &c.f10 ? c.h10 : c.h12;
        const auto h = halfint::extract_half_integral(*pair, 1, 500);
        std::int64_t mismatches = 0;
        for (std::int64_t m = 1; m < 500; ++m) mismatches += h.coeff(m) != ez.coeff(m) ? 1 : 0;
        out.push_back({"ez", "extract(F" + std::to_string(pair->weight()) + ", p=1) = ez_to_half, m < 500",
                       mismatches == 0, static_cast<double>(mismatches), 0.0, ""});
    }
    const auto h3 = halfint::extract_half_integral(c.f10, 3, kCorpusPrec);
    out.push_back({"ez", "plus-space support of extract(F10, 3), m < 1000", halfint::plus_space_support_ok(h3), 0.0,
                   0.0, ""});
    out.push_back({"ez", "plus-space support of ez_to_half(phi10)", halfint::plus_space_support_ok(c.h10), 0.0, 0.0,
                   ""});
    out.push_back({"ez", "plus-space support of ez_to_half(phi12)", halfint::plus_space_support_ok(c.h12), 0.0, 0.0,
                   ""});
    return out;
}

std::vector<CheckResult> inversion_suite()
{
    const auto& c = corpus();
    std::vector<CheckResult> out;
    for (const auto* f : {&c.f10, &c.f12}) {
        double worst = 0.0;
        bool ok = true;
        for (std::int64_t d = 3; d <= 100; ++d) {
            if (!arith::is_fundamental_discriminant(-d)) continue;
            const auto rep = analysis::fourier_inversion_check(*f, bqf::class_group(d));
            worst = std::max(worst, rep.defect / rep.scale);
            ok = ok && rep.within_contract();
        }
        out.push_back({"inversion", "Fourier inversion on Cl_K, F" + std::to_string(f->weight()) + ", d <= 100", ok,
                       worst, 1e-9, "defect relative to 1 + max|a|"});
    }
    return out;
}

double relative_diff(double a, double b)
{
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

std::vector<CheckResult> sieve_suite()
{
    const auto& c = corpus();
    std::vector<std::pair<std::string, HalfIntegralForm>> forms = {{"ez(phi10)", c.h10}, {"ez(phi12)", c.h12}};
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<int> coeff(-50, 50);
    for (int i = 0; i < 10; ++i) {
        HalfIntegralForm f(9 + 2 * (i % 2), 4, 401);
        for (std::int64_t n = 1; n < 401; ++n) f.set_coeff(n, Rational(coeff(rng)));
        forms.emplace_back("random table " + std::to_string(i), std::move(f));
    }
    std::vector<CheckResult> out;
    for (const auto& [label, f] : forms) {
        double worst = 0.0;
        for (const std::int64_t m : {1, 2, 6}) {
            for (const double x : {10.0, 50.0}) {
                const double a = analysis::sieve_sum_direct(f, m, x, 400);
                const double b = analysis::sieve_sum_rearranged(f, m, x, 400);
                worst = std::max(worst, relative_diff(a, b));
            }
        }
        out.push_back({"sieve", "squarefree sieve rearrangement, " + label + ", (M, X) in {1,2,6}x{10,50}",
                       worst < 1e-10, worst, 1e-10, "cutoff 400"});
    }
    return out;
}

std::vector<CheckResult> doubling_suite()
{
    const auto& c = corpus();
    std::vector<CheckResult> out;
    auto record = [&](const siegel::SiegelForm& f, const bqf::BQF& t) {
        const auto rep = halfint::doubling_identity_check(f, t);
        std::ostringstream name;
        name << "c_h(" << rep.d0 << ") = 2 a(F" << f.weight() << ", " << t << "), p = " << rep.p;
        out.push_back({"doubling", name.str(), rep.holds, 0.0, 0.0,
                       "c = " + rep.c_d0.to_string() + ", a = " + rep.coefficient.to_string()});
    };
    for (const auto* f : {&c.f10, &c.f12}) {
        record(*f, bqf::BQF{1, 1, 3});
        for (const bqf::BQF t0 : {bqf::BQF{1, 0, 1}, bqf::BQF{1, 1, 2}, bqf::BQF{2, 1, 3}, bqf::BQF{1, 0, 5},
                                  bqf::BQF{2, 2, 3}}) {
            // Keep p away from the discriminant so the two mu-classes differ.
            const auto rep = bqf::find_prime_represented(t0, -t0.disc(), 50);
            record(*f, bqf::transform(t0, rep.a));
        }
    }
    return out;
}

} // namespace

bqf::Matrix2 gamma0_4_word(const std::string& word)
{
    bqf::Matrix2 m;
    for (const char ch : word) {
        switch (ch) {
        case 'T': m = m * bqf::Matrix2{1, 1, 0, 1}; break;
        case 't': m = m * bqf::Matrix2{1, -1, 0, 1}; break;
        case 'U': m = m * bqf::Matrix2{1, 0, 4, 1}; break;
        case 'u': m = m * bqf::Matrix2{1, 0, -4, 1}; break;
        case 'N': m = m * bqf::Matrix2{-1, 0, 0, -1}; break;
        default: throw DomainError(std::string("unknown Gamma_0(4) generator '") + ch + "'");
        }
    }
    return m;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"theta", "ez", "inversion", "sieve", "doubling"};
    return names;
}

std::vector<CheckResult> run_suite(const std::string& suite)
{
    if (suite == "all") {
        std::vector<CheckResult> all;
        for (const auto& s : suite_names()) {
            auto part = run_suite(s);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    if (suite == "theta") return theta_suite();
    if (suite == "ez") return ez_suite();
    if (suite == "inversion") return inversion_suite();
    if (suite == "sieve") return sieve_suite();
    if (suite == "doubling") return doubling_suite();
    throw DomainError("unknown check suite '" + suite + "'");
}

} // namespace fundcoef::checks
