#include "fundcoef/qseries.hpp"

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "fundcoef/errors.hpp"

namespace fundcoef {

namespace {

template <typename Map>
void prune_zeros(Map& m)
{
    std::erase_if(m, [](const auto& kv) {
        if constexpr (std::is_same_v<std::decay_t<decltype(kv.second)>, Rational>) {
            return kv.second.is_zero();
        } else {
            return kv.second.empty();
        }
    });
}

void check_denom(int denom)
{
    if (denom < 1) throw DomainError("series denominator must be positive");
}

int common_denom(int a, int b) { return std::lcm(a, b); }

std::int64_t ceil_div(std::int64_t a, std::int64_t b)
{
    // b > 0
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

void add_poly(LaurentPoly& into, const LaurentPoly& p, const Rational& scale)
{
    for (const auto& [j, c] : p) {
        auto& slot = into[j];
        slot.add_product(c, scale);
        if (slot.is_zero()) into.erase(j);
    }
}

LaurentPoly mul_poly(const LaurentPoly& a, const LaurentPoly& b)
{
    LaurentPoly out;
    for (const auto& [i, x] : a) {
        for (const auto& [j, y] : b) out[i + j].add_product(x, y);
    }
    prune_zeros(out);
    return out;
}

} // namespace

// ---------------------------------------------------------------- QSeries

QSeries::QSeries(int denom, std::int64_t prec_exponent) : denom_(denom), prec_(prec_exponent)
{
    check_denom(denom);
}

QSeries::QSeries(int denom, std::int64_t prec_exponent, Terms terms)
    : denom_(denom), prec_(prec_exponent), terms_(std::move(terms))
{
    check_denom(denom);
    std::erase_if(terms_, [&](const auto& kv) { return kv.second.is_zero() || kv.first >= prec_; });
}

QSeries QSeries::constant(const Rational& c, std::int64_t prec_q)
{
    return QSeries(1, prec_q, Terms{{0, c}});
}

Rational QSeries::coeff(std::int64_t e) const
{
    if (e >= prec_) {
        throw PrecisionError("coefficient at q^(" + std::to_string(e) + "/" + std::to_string(denom_) +
                             ") is beyond the series precision");
    }
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rational() : it->second;
}

std::optional<std::int64_t> QSeries::valuation() const
{
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
}

QSeries QSeries::rescaled(int new_denom) const
{
    check_denom(new_denom);
    if (new_denom % denom_ != 0) throw DomainError("rescale target must be a multiple of the denominator");
    const std::int64_t f = new_denom / denom_;
    Terms t;
    for (const auto& [e, c] : terms_) t.emplace_hint(t.end(), e * f, c);
    return QSeries(new_denom, prec_ * f, std::move(t));
}

QSeries QSeries::truncated(std::int64_t prec_exponent) const
{
    Terms t(terms_.begin(), terms_.lower_bound(prec_exponent));
    return QSeries(denom_, std::min(prec_, prec_exponent), std::move(t));
}

QSeries QSeries::shifted(std::int64_t shift) const
{
    Terms t;
    for (const auto& [e, c] : terms_) t.emplace_hint(t.end(), e + shift, c);
    return QSeries(denom_, prec_ + shift, std::move(t));
}

QSeries QSeries::inverse() const
{
    const auto val = valuation();
    if (!val || *val != 0) throw DomainError("non-unit divisor");
    // The inverse is supported on multiples of the gcd of the support.
    std::int64_t stride = 0;
    for (const auto& [e, c] : terms_) stride = std::gcd(stride, e);
    if (stride == 0) stride = 1;

    std::vector<std::pair<std::int64_t, const Rational*>> tail;
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
        tail.emplace_back(it->first / stride, &it->second);
    }
    const Rational lead_inv = Rational(1) / terms_.begin()->second;
    const std::int64_t count = ceil_div(prec_, stride);
    std::vector<Rational> inv(static_cast<std::size_t>(std::max<std::int64_t>(count, 0)));
    for (std::int64_t n = 0; n < count; ++n) {
        Rational acc = n == 0 ? Rational(1) : Rational(0);
        Rational sum;
        for (const auto& [j, c] : tail) {
            if (j > n) break;
            sum.add_product(*c, inv[static_cast<std::size_t>(n - j)]);
        }
        acc -= sum;
        inv[static_cast<std::size_t>(n)] = acc * lead_inv;
    }
    Terms t;
    for (std::int64_t n = 0; n < count; ++n) {
        if (!inv[static_cast<std::size_t>(n)].is_zero()) t.emplace_hint(t.end(), n * stride, inv[n]);
    }
    return QSeries(denom_, prec_, std::move(t));
}

QSeries QSeries::pow(unsigned e) const
{
    QSeries result(denom_, prec_, Terms{{0, Rational(1)}});
    if (e == 0) return result;
    QSeries base = *this;
    bool first = true;
    while (e > 0) {
        if (e & 1U) {
            result = first ? base : result * base;
            first = false;
        }
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

QSeries QSeries::integralize() const
{
    Terms t;
    for (const auto& [e, c] : terms_) {
        if (e % denom_ != 0) throw InvariantError("fractional residue");
        t.emplace_hint(t.end(), e / denom_, c);
    }
    return QSeries(1, ceil_div(prec_, denom_), std::move(t));
}

QSeries QSeries::operator-() const
{
    QSeries out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

QSeries& QSeries::operator+=(const QSeries& rhs)
{
    const int d = common_denom(denom_, rhs.denom_);
    if (d != denom_) *this = rescaled(d);
    const QSeries r = rhs.denom_ == d ? rhs : rhs.rescaled(d);
    prec_ = std::min(prec_, r.prec_);
    for (const auto& [e, c] : r.terms_) {
        if (e >= prec_) break;
        terms_[e] += c;
    }
    std::erase_if(terms_, [&](const auto& kv) { return kv.second.is_zero() || kv.first >= prec_; });
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& rhs) { return *this += -rhs; }

QSeries& QSeries::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b)
{
    const int d = common_denom(a.denom_, b.denom_);
    if (a.denom_ != d || b.denom_ != d) return a.rescaled(d) * b.rescaled(d);
    const std::int64_t va = a.valuation().value_or(a.prec_);
    const std::int64_t vb = b.valuation().value_or(b.prec_);
    const std::int64_t prec = std::min(a.prec_ + vb, b.prec_ + va);
    QSeries::Terms out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            if (ea + eb >= prec) break;
            out[ea + eb].add_product(ca, cb);
        }
    }
    return QSeries(d, prec, std::move(out));
}

QSeries operator/(const QSeries& a, const QSeries& b)
{
    const int d = common_denom(a.denom_, b.denom_);
    if (a.denom_ != d || b.denom_ != d) return a.rescaled(d) / b.rescaled(d);
    const auto v = b.valuation();
    if (!v) throw DomainError("non-unit divisor");
    return a.shifted(-*v) * b.shifted(-*v).inverse();
}

// ----------------------------------------------------------- TwoVarSeries

TwoVarSeries::TwoVarSeries(int denom, std::int64_t prec_exponent) : denom_(denom), prec_(prec_exponent)
{
    check_denom(denom);
}

TwoVarSeries::TwoVarSeries(int denom, std::int64_t prec_exponent, Terms terms)
    : denom_(denom), prec_(prec_exponent), terms_(std::move(terms))
{
    check_denom(denom);
    for (auto& [e, p] : terms_) prune_zeros(p);
    std::erase_if(terms_, [&](const auto& kv) { return kv.second.empty() || kv.first >= prec_; });
}

std::optional<std::int64_t> TwoVarSeries::valuation() const
{
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
}

Rational TwoVarSeries::coeff(std::int64_t e, int j) const
{
    if (e >= prec_) throw PrecisionError("two-variable coefficient beyond the series precision");
    const auto it = terms_.find(e);
    if (it == terms_.end()) return Rational();
    const auto jt = it->second.find(j);
    return jt == it->second.end() ? Rational() : jt->second;
}

TwoVarSeries TwoVarSeries::rescaled(int new_denom) const
{
    check_denom(new_denom);
    if (new_denom % denom_ != 0) throw DomainError("rescale target must be a multiple of the denominator");
    const std::int64_t f = new_denom / denom_;
    Terms t;
    for (const auto& [e, p] : terms_) t.emplace_hint(t.end(), e * f, p);
    return TwoVarSeries(new_denom, prec_ * f, std::move(t));
}

TwoVarSeries TwoVarSeries::shifted(std::int64_t shift) const
{
    Terms t;
    for (const auto& [e, p] : terms_) t.emplace_hint(t.end(), e + shift, p);
    return TwoVarSeries(denom_, prec_ + shift, std::move(t));
}

TwoVarSeries TwoVarSeries::integralize() const
{
    Terms t;
    for (const auto& [e, p] : terms_) {
        if (e % denom_ != 0) throw InvariantError("fractional residue");
        t.emplace_hint(t.end(), e / denom_, p);
    }
    return TwoVarSeries(1, ceil_div(prec_, denom_), std::move(t));
}

TwoVarSeries& TwoVarSeries::operator+=(const TwoVarSeries& rhs)
{
    const int d = common_denom(denom_, rhs.denom_);
    if (d != denom_) *this = rescaled(d);
    const TwoVarSeries r = rhs.denom_ == d ? rhs : rhs.rescaled(d);
    prec_ = std::min(prec_, r.prec_);
    const Rational one(1);
    for (const auto& [e, p] : r.terms_) {
        if (e >= prec_) break;
        add_poly(terms_[e], p, one);
    }
    std::erase_if(terms_, [&](const auto& kv) { return kv.second.empty() || kv.first >= prec_; });
    return *this;
}

TwoVarSeries& TwoVarSeries::operator-=(const TwoVarSeries& rhs) { return *this += rhs * Rational(-1); }

TwoVarSeries& TwoVarSeries::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, p] : terms_) {
        for (auto& [j, v] : p) v *= c;
    }
    return *this;
}

TwoVarSeries operator*(const TwoVarSeries& a, const TwoVarSeries& b)
{
    const int d = common_denom(a.denom_, b.denom_);
    if (a.denom_ != d || b.denom_ != d) return a.rescaled(d) * b.rescaled(d);
    const std::int64_t va = a.valuation().value_or(a.prec_);
    const std::int64_t vb = b.valuation().value_or(b.prec_);
    const std::int64_t prec = std::min(a.prec_ + vb, b.prec_ + va);
    const Rational one(1);
    TwoVarSeries::Terms out;
    for (const auto& [ea, pa] : a.terms_) {
        for (const auto& [eb, pb] : b.terms_) {
            if (ea + eb >= prec) break;
            add_poly(out[ea + eb], mul_poly(pa, pb), one);
        }
    }
    return TwoVarSeries(d, prec, std::move(out));
}

TwoVarSeries operator*(const TwoVarSeries& a, const QSeries& b)
{
    const int d = common_denom(a.denom_, b.denom());
    if (a.denom_ != d || b.denom() != d) return a.rescaled(d) * b.rescaled(d);
    const std::int64_t va = a.valuation().value_or(a.prec_);
    const std::int64_t vb = b.valuation().value_or(b.prec_exponent());
    const std::int64_t prec = std::min(a.prec_ + vb, b.prec_exponent() + va);
    TwoVarSeries::Terms out;
    for (const auto& [ea, pa] : a.terms_) {
        for (const auto& [eb, cb] : b.terms()) {
            if (ea + eb >= prec) break;
            auto& slot = out[ea + eb];
            for (const auto& [j, x] : pa) slot[j].add_product(x, cb);
        }
    }
    return TwoVarSeries(d, prec, std::move(out));
}

TwoVarSeries operator/(const TwoVarSeries& a, const QSeries& b)
{
    const int d = common_denom(a.denom_, b.denom());
    if (a.denom_ != d || b.denom() != d) return a.rescaled(d) / b.rescaled(d);
    const auto v = b.valuation();
    if (!v) throw DomainError("non-unit divisor");
    return a.shifted(-*v) * b.shifted(-*v).inverse();
}

} // namespace fundcoef
