#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "fundcoef/analysis.hpp"
#include "fundcoef/arith.hpp"
#include "fundcoef/bqf.hpp"
#include "fundcoef/checks.hpp"
#include "fundcoef/errors.hpp"
#include "fundcoef/halfint.hpp"
#include "fundcoef/io.hpp"
#include "fundcoef/jacobi.hpp"
#include "fundcoef/siegel.hpp"

namespace {

using namespace fundcoef;
using io::Json;

enum Exit : int {
    kPass = 0,
    kOther = 1,
    kUsage = 2,
    kParse = 3,
    kPrecision = 4,
    kCheckFailed = 5,
};

constexpr const char* kExitCodes = "Exit codes:\n"
                                   "  0  success (for check and sieve: every test passed)\n"
                                   "  1  I/O or other runtime error\n"
                                   "  2  usage error (bad flags, wrong table type, p not an odd prime)\n"
                                   "  3  parse failure or invariant violation in an input table\n"
                                   "  4  precision exhausted (a coefficient beyond the table's precision)\n"
                                   "  5  a check failed";

// Largest precisions gen accepts; Siegel tables grow like prec^(3/2).
constexpr std::int64_t kMaxPrec = 20000;
constexpr std::int64_t kMaxSiegelPrec = 5000;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <typename T>
const T& expect(const io::Table& t, const char* what)
{
    if (const auto* v = std::get_if<T>(&t)) return *v;
    throw UsageError(std::string("input table is not a ") + what + " table");
}

std::string gen(const std::string& kind, std::int64_t prec)
{
    const bool siegel = kind.starts_with("siegel");
    if (prec > (siegel ? kMaxSiegelPrec : kMaxPrec)) {
        throw PrecisionError("--prec " + std::to_string(prec) + " exceeds the limit for " + kind);
    }
    const int k = kind.ends_with("10") ? 10 : 12;
    const auto phi = jacobi::jacobi_cusp(k, prec);
    if (kind.starts_with("jacobi")) return io::dump(io::to_json(phi));
    if (siegel) return io::dump(io::to_json(siegel::maass_lift(phi, prec)));
    return io::dump(io::to_json(jacobi::ez_to_half(phi)));
}

std::string scan(const io::Table& t, const std::string& mode, std::int64_t x, const std::string& format)
{
    analysis::ScanReport r;
    if (mode == "half") {
        r = analysis::scan_half(expect<HalfIntegralForm>(t, "half-integral"), x);
    } else if (mode == "fundamental") {
        r = analysis::scan_fundamental(expect<siegel::SiegelForm>(t, "siegel"), x);
    } else {
        r = analysis::scan_primitive(expect<siegel::SiegelForm>(t, "siegel"), x);
    }
    return format == "csv" ? io::to_csv(r) : io::dump(io::to_json(r));
}

Json bessel(const siegel::SiegelForm& f, std::int64_t disc, int only)
{
    const std::int64_t d = disc < 0 ? -disc : disc;
    if (!arith::is_fundamental_discriminant(-d)) {
        throw UsageError("--disc " + std::to_string(disc) + " is not a negative fundamental discriminant");
    }
    const auto g = bqf::class_group(d);
    const auto chars = bqf::characters(g);
    if (only >= static_cast<int>(chars.size())) {
        throw UsageError("--char " + std::to_string(only) + " out of range (h = " + std::to_string(g.h()) + ")");
    }
    Json out = Json::array();
    for (int i = 0; i < static_cast<int>(chars.size()); ++i) {
        if (only >= 0 && i != only) continue;
        const auto r = analysis::bessel_period(f, g, chars[static_cast<std::size_t>(i)]);
        out.push_back(Json{{"char", i}, {"real", r.real()}, {"imag", r.imag()}});
    }
    return out;
}

int run(int argc, char** argv)
{
    CLI::App app{"Exact coefficient tables for degree-2 Siegel and half-integral weight cusp forms"};
    app.footer(kExitCodes);
    app.require_subcommand(1);

    std::string kind;
    std::int64_t gen_prec = 0;
    std::string out_path;
    auto* gen_cmd = app.add_subcommand("gen", "Write a corpus coefficient table as JSON");
    gen_cmd->add_option("--kind", kind, "Table to generate")
        ->required()
        ->check(CLI::IsMember({"jacobi10", "jacobi12", "siegel10", "siegel12", "half-ez10", "half-ez12"}));
    gen_cmd->add_option("--prec", gen_prec, "Precision: D bound, |disc| bound or n bound")
        ->required()
        ->check(CLI::PositiveNumber);
    gen_cmd->add_option("--out", out_path, "Output path")->required();

    std::string form_path;
    std::string mode;
    std::int64_t scan_x = 0;
    std::string format = "json";
    auto* scan_cmd = app.add_subcommand("scan", "Squarefree d < X with a nonvanishing coefficient");
    scan_cmd->add_option("--form", form_path, "Input table")->required();
    scan_cmd->add_option("--mode", mode, "Scan mode")
        ->required()
        ->check(CLI::IsMember({"fundamental", "primitive", "half"}));
    scan_cmd->add_option("--X", scan_x, "Exclusive bound on d")->required()->check(CLI::PositiveNumber);
    scan_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

    std::int64_t p = 0;
    std::int64_t extract_prec = 0;
    auto* extract_cmd = app.add_subcommand("extract", "Half-integral weight form from a Siegel table");
    extract_cmd->add_option("--form", form_path, "Siegel table")->required();
    extract_cmd->add_option("--p", p, "Odd prime")->required();
    extract_cmd->add_option("--prec", extract_prec, "Number of coefficients")->required()->check(CLI::PositiveNumber);

    std::int64_t disc = 0;
    int char_index = -1;
    auto* bessel_cmd = app.add_subcommand("bessel", "Class-group periods R(F, K, Lambda)");
    bessel_cmd->add_option("--form", form_path, "Siegel table")->required();
    bessel_cmd->add_option("--disc", disc, "Fundamental discriminant, sign ignored")->required();
    bessel_cmd->add_option("--char", char_index, "Single character index")->check(CLI::NonNegativeNumber);

    std::int64_t sieve_m = 0;
    double sieve_x = 0.0;
    std::int64_t cutoff = 0;
    auto* sieve_cmd = app.add_subcommand("sieve", "Direct against rearranged squarefree sieve sums");
    sieve_cmd->add_option("--form", form_path, "Half-integral table")->required();
    sieve_cmd->add_option("--M", sieve_m, "Coprimality modulus")->required()->check(CLI::PositiveNumber);
    sieve_cmd->add_option("--X", sieve_x, "Smoothing length")->required()->check(CLI::PositiveNumber);
    sieve_cmd->add_option("--cutoff", cutoff, "Largest index summed")->required()->check(CLI::PositiveNumber);

    std::string suite = "all";
    auto* check_cmd = app.add_subcommand("check", "Run a verification suite on the built-in corpus");
    check_cmd->add_option("--suite", suite, "Suite name")
        ->check(CLI::IsMember({"all", "theta", "ez", "inversion", "sieve", "doubling"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    if (gen_cmd->parsed()) {
        io::write_file(out_path, gen(kind, gen_prec));
        return kPass;
    }
    if (scan_cmd->parsed()) {
        std::cout << scan(io::load_table(form_path), mode, scan_x, format);
        return kPass;
    }
    if (extract_cmd->parsed()) {
        if (p < 3 || !arith::is_prime(p)) throw UsageError("--p must be an odd prime");
        const auto t = io::load_table(form_path);
        std::cout << io::dump(io::to_json(
            halfint::extract_half_integral(expect<siegel::SiegelForm>(t, "siegel"), p, extract_prec)));
        return kPass;
    }
    if (bessel_cmd->parsed()) {
        const auto t = io::load_table(form_path);
        std::cout << io::dump(bessel(expect<siegel::SiegelForm>(t, "siegel"), disc, char_index));
        return kPass;
    }
    if (sieve_cmd->parsed()) {
        const auto t = io::load_table(form_path);
        const auto& f = expect<HalfIntegralForm>(t, "half-integral");
        const double direct = analysis::sieve_sum_direct(f, sieve_m, sieve_x, cutoff);
        const double rearranged = analysis::sieve_sum_rearranged(f, sieve_m, sieve_x, cutoff);
        const double scale = std::max(std::abs(direct), std::abs(rearranged));
        const double rel = scale == 0.0 ? 0.0 : std::abs(direct - rearranged) / scale;
        std::cout << io::dump(Json{{"direct", direct}, {"rearranged", rearranged}, {"relative_diff", rel}});
        return rel < 1e-10 ? kPass : kCheckFailed;
    }
    const auto results = checks::run_suite(suite);
    Json tests = Json::array();
    bool all = true;
    for (const auto& r : results) {
        all = all && r.pass;
        tests.push_back(Json{{"suite", r.suite},
                             {"name", r.name},
                             {"pass", r.pass},
                             {"measured", r.measured},
                             {"tolerance", r.tolerance},
                             {"detail", r.detail}});
    }
    std::cout << io::dump(Json{{"suite", suite}, {"pass", all}, {"tests", std::move(tests)}});
    return all ? kPass : kCheckFailed;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "fundcoef: " << e.what() << '\n';
        return kUsage;
    } catch (const PrecisionError& e) {
        std::cerr << "fundcoef: " << e.what() << '\n';
        return kPrecision;
    } catch (const ParseError& e) {
        std::cerr << "fundcoef: parse error: " << e.what() << '\n';
        return kParse;
    } catch (const InvariantError& e) {
        std::cerr << "fundcoef: invariant violated: " << e.what() << '\n';
        return kParse;
    } catch (const DomainError& e) {
        std::cerr << "fundcoef: " << e.what() << '\n';
        return kParse;
    } catch (const std::exception& e) {
        std::cerr << "fundcoef: " << e.what() << '\n';
        return kOther;
    }
}
