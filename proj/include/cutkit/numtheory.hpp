#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace cutkit {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

bool is_prime(std::uint64_t n);

/// Prime factorization as prime -> exponent, ascending.
std::map<std::uint64_t, int> factorize(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

std::uint64_t euler_phi(std::uint64_t n);

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
/// Inverse of a modulo m; requires gcd(a, m) = 1.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m);

/// Residues in [1, n) coprime to n; {0} for n = 1 (the trivial unit group).
std::vector<std::uint64_t> units_mod(std::uint64_t n);

/// Multiplicative order of a modulo n (gcd(a, n) = 1).
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n);

/// Least primitive root modulo a prime q.
std::uint64_t primitive_root(std::uint64_t q);

/// Squarefree part of n > 0: n = part * k^2 with part squarefree.
std::uint64_t squarefree_part(std::uint64_t n);

/// Least integer r >= 0 with r*r >= n.
std::uint64_t ceil_sqrt(std::uint64_t n);

} // namespace cutkit
