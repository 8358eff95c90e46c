#include "fundcoef/arith.hpp"

#include <algorithm>
#include <cstdlib>

#include "fundcoef/errors.hpp"

namespace fundcoef::arith {

std::vector<std::pair<std::int64_t, int>> factor(std::int64_t n)
{
    if (n < 1) throw DomainError("factor: n must be positive");
    std::vector<std::pair<std::int64_t, int>> out;
    auto strip = [&](std::int64_t p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    strip(5);
    // 2*3*5 wheel: candidates are 30k + {1,7,11,13,17,19,23,29}.
    static constexpr std::int64_t offsets[] = {1, 7, 11, 13, 17, 19, 23, 29};
    for (std::int64_t base = 0; base * base <= n; base += 30) {
        for (const auto off : offsets) {
            const std::int64_t p = base + off;
            if (p == 1) continue;
            if (p * p > n) break;
            strip(p);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

bool is_prime(std::int64_t n)
{
    if (n < 2) return false;
    const auto f = factor(n);
    return f.size() == 1 && f[0].second == 1;
}

bool is_squarefree(std::int64_t n)
{
    if (n < 1) throw DomainError("is_squarefree: n must be positive");
    return std::ranges::all_of(factor(n), [](const auto& pe) { return pe.second == 1; });
}

int moebius(std::int64_t n)
{
    if (n < 1) throw DomainError("moebius: n must be positive");
    const auto f = factor(n);
    for (const auto& [p, e] : f) {
        if (e > 1) return 0;
    }
    return f.size() % 2 == 0 ? 1 : -1;
}

bool is_fundamental_discriminant(std::int64_t n)
{
    if (n == 0) throw DomainError("is_fundamental_discriminant: n must be nonzero");
    if (n == 1) return true;
    const auto sqf = [](std::int64_t x) { return is_squarefree(std::llabs(x)); };
    if (mod(n, 4) == 1) return sqf(n);
    if (mod(n, 4) != 0) return false;
    const std::int64_t m = n / 4;
    const std::int64_t r = mod(m, 4);
    return (r == 2 || r == 3) && sqf(m);
}

bool is_discriminant(std::int64_t n)
{
    const auto r = mod(n, 4);
    return r == 0 || r == 1;
}

std::int64_t gcd(std::int64_t a, std::int64_t b)
{
    a = std::llabs(a);
    b = std::llabs(b);
    while (b != 0) {
        const auto t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Bezout extended_gcd(std::int64_t a, std::int64_t b)
{
    std::int64_t old_r = a, r = b;
    std::int64_t old_s = 1, s = 0;
    std::int64_t old_t = 0, t = 1;
    while (r != 0) {
        const auto q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
        old_t = std::exchange(t, old_t - q * t);
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

std::vector<std::int64_t> sqrt_classes(std::int64_t m, std::int64_t p)
{
    if (p < 1 || p % 2 == 0) throw DomainError("sqrt_classes: p must be a positive odd integer");
    const std::int64_t modulus = 4 * p;
    const std::int64_t target = mod(-m, modulus);
    std::vector<std::int64_t> out;
    for (std::int64_t mu = 0; mu < 2 * p; ++mu) {
        if ((mu * mu) % modulus == target) out.push_back(mu);
    }
    return out;
}

int jacobi_symbol(std::int64_t a, std::int64_t n)
{
    if (n <= 0 || n % 2 == 0) throw DomainError("jacobi_symbol: n must be odd and positive");
    a = mod(a, n);
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const auto r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

int kronecker_extended(std::int64_t c, std::int64_t d)
{
    if (d % 2 == 0) throw DomainError("kronecker_extended: d must be odd");
    if (c == 0) return (d == 1 || d == -1) ? 1 : 0;
    const int base = jacobi_symbol(c, std::llabs(d));
    return (c < 0 && d < 0) ? -base : base;
}

std::complex<double> eps(std::int64_t d)
{
    if (d % 2 == 0) throw DomainError("eps: d must be odd");
    return mod(d, 4) == 1 ? std::complex<double>(1.0, 0.0) : std::complex<double>(0.0, 1.0);
}

std::vector<std::int64_t> divisors(std::int64_t n)
{
    if (n < 1) throw DomainError("divisors: n must be positive");
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d * d != n) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::int64_t sigma(std::int64_t n, int k)
{
    std::int64_t total = 0;
    for (const auto d : divisors(n)) {
        std::int64_t term = 1;
        for (int i = 0; i < k; ++i) term *= d;
        total += term;
    }
    return total;
}

} // namespace fundcoef::arith
