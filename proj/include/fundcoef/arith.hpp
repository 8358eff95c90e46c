#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace fundcoef::arith {

// Prime factorization by trial division, as (prime, exponent) pairs in
// increasing prime order. n >= 1.
std::vector<std::pair<std::int64_t, int>> factor(std::int64_t n);

bool is_prime(std::int64_t n);
bool is_squarefree(std::int64_t n);
int moebius(std::int64_t n);

// n squarefree with n = 1 mod 4, or n = 4m with m squarefree and m = 2, 3 mod 4.
bool is_fundamental_discriminant(std::int64_t n);

// n = 0 or 1 mod 4 (the residues of b^2 - 4ac).
bool is_discriminant(std::int64_t n);

// Floor modulus, result in [0, m).
constexpr std::int64_t mod(std::int64_t a, std::int64_t m)
{
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t gcd(std::int64_t a, std::int64_t b);

// Returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
struct Bezout {
    std::int64_t g;
    std::int64_t x;
    std::int64_t y;
};
Bezout extended_gcd(std::int64_t a, std::int64_t b);

// All mu in [0, 2p) with mu^2 = -m (mod 4p). p must be a positive odd
// integer; p = 1 is allowed and gives the index-1 residues.
std::vector<std::int64_t> sqrt_classes(std::int64_t m, std::int64_t p);

// Quadratic residue symbol (c/d) for odd d with Shimura's sign conventions:
// (c/d) = (c/|d|) unless c < 0 and d < 0, where it is -(c/|d|); (0/+-1) = 1.
// Throws DomainError for even d.
int kronecker_extended(std::int64_t c, std::int64_t d);

// Jacobi symbol (a/n) for odd n > 0.
int jacobi_symbol(std::int64_t a, std::int64_t n);

// eps_d = 1 if d = 1 mod 4, i if d = 3 mod 4. Throws DomainError for even d.
std::complex<double> eps(std::int64_t d);

// Divisors of n >= 1 in increasing order.
std::vector<std::int64_t> divisors(std::int64_t n);

// sigma_k(n) = sum_{d | n} d^k, exact for the sizes used here.
std::int64_t sigma(std::int64_t n, int k);

} // namespace fundcoef::arith
