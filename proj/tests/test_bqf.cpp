#include <doctest.h>

#include <cmath>
#include <numeric>
#include <numbers>
#include <random>
#include <set>

#include "fundcoef/arith.hpp"
#include "fundcoef/bqf.hpp"
#include "fundcoef/errors.hpp"

namespace bqf = fundcoef::bqf;
namespace arith = fundcoef::arith;
using bqf::BQF;
using bqf::Matrix2;

namespace {

std::vector<std::int64_t> fundamental_ds(std::int64_t max_d)
{
    std::vector<std::int64_t> out;
    for (std::int64_t d = 3; d <= max_d; ++d) {
        if (arith::is_fundamental_discriminant(-d)) out.push_back(d);
    }
    return out;
}

// All SL2(Z) matrices with entries in [-bound, bound].
std::vector<Matrix2> small_sl2(std::int64_t bound)
{
    std::vector<Matrix2> out;
    for (std::int64_t a = -bound; a <= bound; ++a)
        for (std::int64_t b = -bound; b <= bound; ++b)
            for (std::int64_t c = -bound; c <= bound; ++c)
                for (std::int64_t d = -bound; d <= bound; ++d)
                    if (a * d - b * c == 1) out.push_back({a, b, c, d});
    return out;
}

bool glossary_reduced(const BQF& f)
{
    return std::abs(f.b) <= f.a && f.a <= f.c && !((std::abs(f.b) == f.a || f.a == f.c) && f.b < 0);
}

// Reduced forms of discriminant -d straight from the definition.
std::set<BQF> naive_reduced(std::int64_t d)
{
    std::set<BQF> out;
    for (std::int64_t a = 1; a <= d; ++a) {
        for (std::int64_t b = -a; b <= a; ++b) {
            if ((b * b + d) % (4 * a) != 0) continue;
            const BQF f{a, b, (b * b + d) / (4 * a)};
            if (glossary_reduced(f)) out.insert(f);
        }
    }
    return out;
}

// Dirichlet composition by united forms: move g to an equivalent form whose
// leading coefficient g(x, y) is coprime to f's, then solve for B by search.
BQF united_compose(const BQF& f, const BQF& g)
{
    const std::int64_t disc = f.disc();
    for (std::int64_t x = 0; x <= 40; ++x) {
        for (std::int64_t y = -40; y <= 40; ++y) {
            if (std::gcd(x, y) != 1) continue;
            const auto bz = arith::extended_gcd(x, y);
            const BQF g2 = bqf::transform(g, {x, -bz.y, y, bz.x});
            if (std::gcd(f.a, g2.a) != 1) continue;
            const std::int64_t a3 = f.a * g2.a;
            for (std::int64_t b = 0; b < 2 * a3; ++b) {
                if (arith::mod(b - f.b, 2 * f.a) != 0 || arith::mod(b - g2.b, 2 * g2.a) != 0) continue;
                if (arith::mod(b * b - disc, 4 * a3) != 0) continue;
                return bqf::reduce({a3, b, (b * b - disc) / (4 * a3)}).form;
            }
        }
    }
    FAIL("united form not found");
    return {};
}

std::complex<double> e(double x) { return std::polar(1.0, 2.0 * std::numbers::pi * x); }

} // namespace

TEST_CASE("transform evaluates f(A (x, y))")
{
    const BQF f{2, 1, 3};
    const Matrix2 a{2, 1, 1, 1};
    const BQF g = bqf::transform(f, a);
    for (std::int64_t x = -3; x <= 3; ++x)
        for (std::int64_t y = -3; y <= 3; ++y) CHECK(g(x, y) == f(a.a * x + a.b * y, a.c * x + a.d * y));
    CHECK(g.disc() == f.disc());
}

TEST_CASE("reduce returns the unique reduced form of the orbit")
{
    std::mt19937_64 rng(1);
    const auto moves = small_sl2(3);
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    for (const auto d : {3, 4, 15, 20, 23, 47, 71, 84, 12, 27}) {
        for (const auto& r : bqf::reduced_forms(d)) {
            for (int i = 0; i < 30; ++i) {
                Matrix2 m = moves[pick(rng)] * moves[pick(rng)] * moves[pick(rng)];
                const BQF f = bqf::transform(r, m);
                const auto red = bqf::reduce(f);
                CHECK(red.form == r);
                CHECK(red.transform.det() == 1);
                CHECK(bqf::transform(f, red.transform) == r);
            }
            // No other reduced form in the orbit within small matrices.
            for (const auto& m : moves) {
                const BQF g = bqf::transform(r, m);
                if (glossary_reduced(g)) CHECK(g == r);
            }
        }
    }
    CHECK_THROWS_AS(bqf::reduce({1, 3, 1}), fundcoef::DomainError);
    CHECK_THROWS_AS(bqf::reduce({-1, 0, -1}), fundcoef::DomainError);
}

TEST_CASE("reduced forms and class numbers")
{
    for (std::int64_t d = 3; d <= 400; ++d) {
        if (!arith::is_discriminant(-d)) continue;
        const auto forms = bqf::reduced_forms(d);
        CHECK(std::set<BQF>(forms.begin(), forms.end()) == naive_reduced(d));
        std::int64_t primitive = 0;
        for (const auto& f : naive_reduced(d)) primitive += std::gcd(std::gcd(f.a, f.b), f.c) == 1 ? 1 : 0;
        CHECK(bqf::class_number(d) == primitive);
    }
    CHECK(bqf::class_number(3) == 1);
    CHECK(bqf::class_number(4) == 1);
    CHECK(bqf::class_number(23) == 3);
    CHECK(bqf::class_number(47) == 5);
    CHECK(bqf::class_number(163) == 1);
    CHECK(bqf::reduced_forms(23) == std::vector<BQF>{{1, 1, 6}, {2, 1, 3}, {2, -1, 3}});
    CHECK(bqf::reduced_forms(12) == std::vector<BQF>{{1, 0, 3}, {2, 2, 2}});
    CHECK(bqf::class_number(12) == 1);
    CHECK_THROWS_AS(bqf::reduced_forms(5), fundcoef::DomainError);
}

TEST_CASE("fundamental and primitive predicates")
{
    CHECK(bqf::is_fundamental({1, 1, 1}));
    CHECK(bqf::is_fundamental({2, 1, 3}));
    CHECK_FALSE(bqf::is_fundamental({1, 0, 3}));
    CHECK_FALSE(bqf::is_primitive({2, 2, 2}));
    CHECK(bqf::is_primitive({1, 0, 3}));
}

TEST_CASE("composition agrees with united forms")
{
    for (const auto d : fundamental_ds(200)) {
        const auto forms = bqf::reduced_forms(d);
        for (const auto& f : forms)
            for (const auto& g : forms) {
                CAPTURE(f);
                CAPTURE(g);
                CHECK(bqf::compose(f, g) == united_compose(f, g));
            }
    }
    CHECK(bqf::compose({2, 1, 3}, {2, 1, 3}) == BQF{2, -1, 3});
    CHECK_THROWS_AS(bqf::compose({1, 1, 1}, {1, 0, 1}), fundcoef::DomainError);
}

TEST_CASE("class group axioms, 2-rank and characters for d <= 200")
{
    for (const auto d : fundamental_ds(200)) {
        CAPTURE(d);
        const auto g = bqf::class_group(d);
        const int h = g.h();
        CHECK(h == bqf::class_number(d));
        CHECK(g.reduced()[0].a == 1);
        int two_torsion = 0;
        for (int i = 0; i < h; ++i) {
            CHECK(g.compose(i, g.identity()) == i);
            const auto& f = g.reduced()[static_cast<std::size_t>(i)];
            CHECK(g.inverse(i) == g.index_of({f.a, -f.b, f.c}));
            CHECK(g.compose(i, g.inverse(i)) == g.identity());
            two_torsion += g.compose(i, i) == g.identity() ? 1 : 0;
            for (int j = 0; j < h; ++j) {
                CHECK(g.compose(i, j) == g.compose(j, i));
                for (int k = 0; k < h; ++k) CHECK(g.compose(g.compose(i, j), k) == g.compose(i, g.compose(j, k)));
            }
        }
        // Genus theory: |Cl[2]| = 2^(t - 1), t = number of primes dividing d.
        CHECK(two_torsion == 1 << (arith::factor(d).size() - 1));

        int order = 1;
        for (const auto& gen : g.generators()) order *= gen.order;
        CHECK(order == h);

        const auto chars = bqf::characters(g);
        REQUIRE(static_cast<int>(chars.size()) == h);
        double worst = 0.0;
        for (std::size_t x = 0; x < chars.size(); ++x) {
            for (std::size_t y = 0; y < chars.size(); ++y) {
                std::complex<double> s = 0.0;
                for (int c = 0; c < h; ++c) s += bqf::char_eval(g, chars[x], c) * std::conj(bqf::char_eval(g, chars[y], c));
                worst = std::max(worst, std::abs(s - (x == y ? static_cast<double>(h) : 0.0)));
            }
            for (int i = 0; i < h; ++i)
                for (int j = 0; j < h; ++j) {
                    const auto lhs = bqf::char_eval(g, chars[x], g.compose(i, j));
                    const auto rhs = bqf::char_eval(g, chars[x], i) * bqf::char_eval(g, chars[x], j);
                    worst = std::max(worst, std::abs(lhs - rhs));
                }
            const auto inv = bqf::inverse(g, chars[x]);
            for (int c = 0; c < h; ++c) {
                worst = std::max(worst, std::abs(bqf::char_eval(g, inv, c) - std::conj(bqf::char_eval(g, chars[x], c))));
            }
        }
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("characters of Cl(-23)")
{
    const auto g = bqf::class_group(23);
    REQUIRE(g.generators().size() == 1);
    CHECK(g.generators()[0].order == 3);
    const int gen = g.generators()[0].index;
    const auto chars = bqf::characters(g);
    REQUIRE(chars.size() == 3);
    for (int c = 0; c < 3; ++c) CHECK(std::abs(bqf::char_eval(g, chars[0], c) - 1.0) < 1e-15);
    CHECK(std::abs(bqf::char_eval(g, chars[1], gen) - e(1.0 / 3.0)) < 1e-15);
    for (int c = 0; c < 3; ++c) {
        CHECK(std::abs(bqf::char_eval(g, chars[2], c) - std::pow(bqf::char_eval(g, chars[1], c), 2)) < 1e-12);
    }
    CHECK(bqf::inverse(g, chars[1]) == chars[2]);
    CHECK_THROWS_AS(bqf::class_group(12), fundcoef::DomainError);
}

TEST_CASE("find_prime_represented")
{
    for (const BQF f : {BQF{1, 0, 1}, BQF{1, 1, 1}, BQF{2, 1, 3}, BQF{1, 1, 6}, BQF{3, 2, 5}, BQF{2, 2, 3}}) {
        CAPTURE(f);
        const std::int64_t avoid = -f.disc();
        const auto rep = bqf::find_prime_represented(f, avoid, 50);
        CHECK(arith::is_prime(rep.p));
        CHECK(rep.p % 2 == 1);
        CHECK(avoid % rep.p != 0);
        CHECK(f(rep.x0, rep.y0) == rep.p);
        CHECK(rep.a.det() == 1);
        CHECK(rep.a.b == rep.x0);
        CHECK(rep.a.d == rep.y0);
        CHECK(bqf::transform(f, rep.a).c == rep.p);
        // Minimality of p by brute force.
        for (std::int64_t x = -50; x <= 50; ++x)
            for (std::int64_t y = -50; y <= 50; ++y) {
                const auto v = f(x, y);
                if (v > 2 && v < rep.p && v % 2 == 1 && avoid % v != 0) CHECK_FALSE(arith::is_prime(v));
            }
    }
    CHECK_THROWS_AS(bqf::find_prime_represented({2, 2, 2}, 1, 10), fundcoef::DomainError);
    CHECK_THROWS_AS(bqf::find_prime_represented({1, 0, 1}, 1, 0), fundcoef::PrecisionError);
}

TEST_CASE("small worked cases")
{
    const auto r = bqf::reduce({1, 1, 1});
    CHECK(r.form == BQF{1, 1, 1});
    CHECK(r.transform == Matrix2{});

    // Orbit oracle for (3, 2, 2): the reduced forms reachable through small
    // matrices, which must be a single form.
    std::set<BQF> reached;
    for (const auto& m : small_sl2(3)) {
        const BQF g = bqf::transform({3, 2, 2}, m);
        if (glossary_reduced(g)) reached.insert(g);
    }
    REQUIRE(reached.size() == 1);
    CHECK(bqf::reduce({3, 2, 2}).form == *reached.begin());
    CHECK(reached.begin()->disc() == -20);

    CHECK(bqf::transform({1, 0, 1}, {0, -1, 1, 0}) == BQF{1, 0, 1});
    CHECK(bqf::reduced_forms(3) == std::vector<BQF>{{1, 1, 1}});
    CHECK(bqf::reduced_forms(4) == std::vector<BQF>{{1, 0, 1}});

    for (const auto& f : bqf::reduced_forms(47)) CHECK(bqf::compose({1, 1, 12}, f) == f);
    CHECK(bqf::compose({2, 1, 3}, {2, -1, 3}) == BQF{1, 1, 6});

    CHECK(bqf::is_primitive({1, 1, 1}));
    CHECK(bqf::is_fundamental({1, 1, 1}));
    CHECK_FALSE(bqf::is_primitive({2, 2, 2}));
    CHECK(BQF{1, 0, 3}.disc() == -12);

    const auto p5 = bqf::find_prime_represented({1, 0, 1}, 1, 10);
    CHECK(p5.p == 5);
    CHECK(p5.x0 == 1);
    CHECK(p5.y0 == 2);
    const auto p3 = bqf::find_prime_represented({1, 1, 1}, 1, 10);
    CHECK(p3.p == 3);
    CHECK(p3.x0 == 1);
    CHECK(p3.y0 == 1);
}
