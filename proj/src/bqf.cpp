#include "fundcoef/bqf.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <tuple>

#include "fundcoef/arith.hpp"
#include "fundcoef/errors.hpp"

namespace fundcoef::bqf {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    // b > 0
    return a >= 0 ? a / b : -((-a + b - 1) / b);
}

std::string describe(const BQF& f)
{
    return "(" + std::to_string(f.a) + "," + std::to_string(f.b) + "," + std::to_string(f.c) + ")";
}

// Grows the direct product H x <g_1> x ... until it fills the group.
bool extend_decomposition(const ClassGroup& g, const std::vector<int>& orders, std::vector<char>& in_subgroup,
                          std::vector<int>& members, std::vector<Generator>& gens)
{
    const int h = g.h();
    if (static_cast<int>(members.size()) == h) return true;

    std::vector<int> candidates;
    for (int i = 0; i < h; ++i) {
        if (!in_subgroup[static_cast<std::size_t>(i)]) candidates.push_back(i);
    }
    std::ranges::stable_sort(candidates, [&](int x, int y) { return orders[x] > orders[y]; });

    for (const int cand : candidates) {
        // <cand> must meet the current subgroup trivially.
        bool trivial = true;
        for (int j = 1, pw = cand; j < orders[cand]; ++j, pw = g.compose(pw, cand)) {
            if (in_subgroup[static_cast<std::size_t>(pw)]) {
                trivial = false;
                break;
            }
        }
        if (!trivial) continue;

        const auto saved_members = members;
        std::vector<int> added;
        for (const int m : saved_members) {
            for (int j = 1, pw = cand; j < orders[cand]; ++j, pw = g.compose(pw, cand)) {
                added.push_back(g.compose(m, pw));
            }
        }
        for (const int x : added) {
            in_subgroup[static_cast<std::size_t>(x)] = 1;
            members.push_back(x);
        }
        gens.push_back({cand, orders[cand]});
        if (extend_decomposition(g, orders, in_subgroup, members, gens)) return true;
        gens.pop_back();
        for (const int x : added) in_subgroup[static_cast<std::size_t>(x)] = 0;
        members = saved_members;
    }
    return false;
}

} // namespace

std::int64_t BQF::content() const { return arith::gcd(arith::gcd(a, b), c); }

std::ostream& operator<<(std::ostream& os, const BQF& f) { return os << describe(f); }

std::ostream& operator<<(std::ostream& os, const Matrix2& m)
{
    return os << "[" << m.a << "," << m.b << ";" << m.c << "," << m.d << "]";
}

BQF transform(const BQF& f, const Matrix2& m)
{
    return {f(m.a, m.c), 2 * f.a * m.a * m.b + f.b * (m.a * m.d + m.b * m.c) + 2 * f.c * m.c * m.d, f(m.b, m.d)};
}

bool is_reduced(const BQF& f)
{
    if (!f.positive_definite()) return false;
    if (std::abs(f.b) > f.a || f.a > f.c) return false;
    if ((std::abs(f.b) == f.a || f.a == f.c) && f.b < 0) return false;
    return true;
}

Reduction reduce(const BQF& f)
{
    if (!f.positive_definite()) throw DomainError("reduce: form " + describe(f) + " is not positive definite");
    BQF g = f;
    Matrix2 acc;
    const Matrix2 swap{0, -1, 1, 0};
    for (;;) {
        // b into (-a, a]
        const std::int64_t t = floor_div(g.a - g.b, 2 * g.a);
        if (t != 0) {
            const Matrix2 shift{1, t, 0, 1};
            g = transform(g, shift);
            acc = acc * shift;
        }
        if (g.a > g.c || (g.a == g.c && g.b < 0)) {
            g = transform(g, swap);
            acc = acc * swap;
            continue;
        }
        break;
    }
    return {g, acc};
}

std::vector<BQF> reduced_forms(std::int64_t d)
{
    if (d <= 0 || !arith::is_discriminant(-d)) {
        throw DomainError("reduced_forms: -" + std::to_string(d) + " is not a negative discriminant");
    }
    std::vector<BQF> out;
    for (std::int64_t a = 1; 3 * a * a <= d; ++a) {
        for (std::int64_t babs = d % 2; babs <= a; babs += 2) {
            for (int sign = 1; sign >= (babs == 0 ? 1 : -1); sign -= 2) {
                const std::int64_t b = sign * babs;
                const std::int64_t num = b * b + d;
                if (num % (4 * a) != 0) continue;
                const BQF f{a, b, num / (4 * a)};
                if (is_reduced(f)) out.push_back(f);
            }
        }
    }
    return out;
}

std::int64_t class_number(std::int64_t d)
{
    const auto forms = reduced_forms(d);
    return std::ranges::count_if(forms, [](const BQF& f) { return is_primitive(f); });
}

bool is_primitive(const BQF& f) { return f.content() == 1; }

bool is_fundamental(const BQF& f)
{
    const bool fundamental = f.disc() != 0 && arith::is_fundamental_discriminant(f.disc());
    if (fundamental && !is_primitive(f)) throw InvariantError("fundamental form " + describe(f) + " is not primitive");
    return fundamental;
}

BQF compose(const BQF& f, const BQF& g)
{
    const std::int64_t disc = f.disc();
    if (g.disc() != disc) throw DomainError("compose: mismatched discriminants");
    if (!f.positive_definite() || !g.positive_definite()) throw DomainError("compose: forms must be positive definite");
    if (!is_primitive(f) || !is_primitive(g)) throw DomainError("compose: forms must be primitive");

    const std::int64_t s = (f.b + g.b) / 2;
    const auto [g1, u1, v1] = arith::extended_gcd(f.a, g.a);
    const auto [e, x, w] = arith::extended_gcd(g1, s);
    const std::int64_t u = x * u1;
    const std::int64_t v = x * v1;

    const std::int64_t a3 = (f.a / e) * (g.a / e);
    const std::int64_t num = f.a * g.b * u + g.a * f.b * v + w * ((f.b * g.b + disc) / 2);
    if (num % e != 0) throw InvariantError("compose: non-integral middle coefficient");
    const std::int64_t b3 = arith::mod(num / e, 2 * a3);
    const std::int64_t cnum = b3 * b3 - disc;
    if (cnum % (4 * a3) != 0) throw InvariantError("compose: non-integral last coefficient");
    return reduce(BQF{a3, b3, cnum / (4 * a3)}).form;
}

ClassGroup::ClassGroup(std::int64_t d) : d_(d)
{
    if (d <= 0 || !arith::is_fundamental_discriminant(-d)) throw DomainError("non-maximal order unsupported");
    reduced_ = reduced_forms(d);
    for (int i = 0; i < h(); ++i) index_.emplace(reduced_[static_cast<std::size_t>(i)], i);

    table_.resize(static_cast<std::size_t>(h() * h()));
    for (int i = 0; i < h(); ++i) {
        for (int j = 0; j < h(); ++j) {
            table_[static_cast<std::size_t>(i * h() + j)] = index_.at(bqf::compose(reduced_[i], reduced_[j]));
        }
    }

    std::vector<int> orders(static_cast<std::size_t>(h()));
    for (int i = 0; i < h(); ++i) {
        int ord = 1;
        for (int pw = i; pw != identity(); pw = compose(pw, i)) ++ord;
        orders[static_cast<std::size_t>(i)] = ord;
    }

    std::vector<char> in_subgroup(static_cast<std::size_t>(h()), 0);
    in_subgroup[0] = 1;
    std::vector<int> members{0};
    if (!extend_decomposition(*this, orders, in_subgroup, members, generators_)) {
        throw InvariantError("no cyclic decomposition found for disc " + std::to_string(-d));
    }

    coordinates_.assign(static_cast<std::size_t>(h()), {});
    std::vector<int> exps(generators_.size(), 0);
    for (int count = 0; count < h(); ++count) {
        int elem = identity();
        for (std::size_t j = 0; j < generators_.size(); ++j) {
            for (int r = 0; r < exps[j]; ++r) elem = compose(elem, generators_[j].index);
        }
        coordinates_[static_cast<std::size_t>(elem)] = exps;
        for (std::size_t j = generators_.size(); j-- > 0;) {
            if (++exps[j] < generators_[j].order) break;
            exps[j] = 0;
        }
    }
}

int ClassGroup::inverse(int i) const
{
    for (int j = 0; j < h(); ++j) {
        if (compose(i, j) == identity()) return j;
    }
    throw InvariantError("class without inverse");
}

int ClassGroup::index_of(const BQF& f) const
{
    if (f.disc() != disc()) throw DomainError("index_of: form " + describe(f) + " has the wrong discriminant");
    return index_.at(reduce(f).form);
}

ClassGroup class_group(std::int64_t d) { return ClassGroup(d); }

std::vector<ClassCharacter> characters(const ClassGroup& g)
{
    std::vector<ClassCharacter> out;
    std::vector<int> exps(g.generators().size(), 0);
    for (int count = 0; count < g.h(); ++count) {
        out.push_back({exps});
        for (std::size_t j = exps.size(); j-- > 0;) {
            if (++exps[j] < g.generators()[j].order) break;
            exps[j] = 0;
        }
    }
    return out;
}

ClassCharacter inverse(const ClassGroup& g, const ClassCharacter& chi)
{
    ClassCharacter out = chi;
    for (std::size_t j = 0; j < out.exponents.size(); ++j) {
        const int ord = g.generators()[j].order;
        out.exponents[j] = (ord - out.exponents[j] % ord) % ord;
    }
    return out;
}

std::complex<double> char_eval(const ClassGroup& g, const ClassCharacter& chi, int class_index)
{
    if (chi.exponents.size() != g.generators().size()) throw DomainError("char_eval: character/group mismatch");
    const auto& pos = g.coordinates(class_index);
    // Accumulate the phase as an exact fraction of a full turn.
    long num = 0;
    long den = 1;
    for (std::size_t j = 0; j < pos.size(); ++j) {
        const long ord = g.generators()[j].order;
        num = num * ord + static_cast<long>(chi.exponents[j]) * pos[j] * den;
        den *= ord;
        num %= den;
    }
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
    return std::polar(1.0, angle);
}

PrimeRepresentation find_prime_represented(const BQF& f, std::int64_t avoid, std::int64_t search_bound)
{
    if (!f.positive_definite()) throw DomainError("find_prime_represented: form must be positive definite");
    if (!is_primitive(f)) throw DomainError("find_prime_represented: form must be primitive");
    if (avoid < 1) throw DomainError("find_prime_represented: avoid must be positive");

    bool found = false;
    std::tuple<std::int64_t, std::int64_t, bool, std::int64_t> best_key;
    PrimeRepresentation best{};
    for (std::int64_t x = 0; x <= search_bound; ++x) {
        for (std::int64_t y = -search_bound; y <= search_bound; ++y) {
            if (arith::gcd(x, y) != 1) continue;
            const std::int64_t v = f(x, y);
            if (v % 2 == 0 || avoid % v == 0 || !arith::is_prime(v)) continue;
            const auto key = std::make_tuple(v, std::max(x, std::abs(y)), y < 0, x);
            if (found && key >= best_key) continue;
            found = true;
            best_key = key;
            best.p = v;
            best.x0 = x;
            best.y0 = y;
        }
    }
    if (!found) throw PrecisionError("search bound exhausted");

    const auto bz = arith::extended_gcd(best.y0, best.x0); // y0 s + x0 t = 1
    best.a = Matrix2{bz.x, best.x0, -bz.y, best.y0};
    if (best.a.det() != 1 || transform(f, best.a).c != best.p) {
        throw InvariantError("find_prime_represented: Bezout construction failed");
    }
    return best;
}

} // namespace fundcoef::bqf
