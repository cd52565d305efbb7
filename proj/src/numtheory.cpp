#include "cutkit/numtheory.hpp"

#include "cutkit/error.hpp"

#include <numeric>
#include <tuple>
#include <utility>

namespace cutkit {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::OrderLimitExceeded: return "OrderLimitExceeded";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::ElementNotInGroup: return "ElementNotInGroup";
    case ErrorKind::PrimeDoesNotDivideOrder: return "PrimeDoesNotDivideOrder";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::InvalidPermutation: return "InvalidPermutation";
    case ErrorKind::InconsistentPresentation: return "InconsistentPresentation";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::InvalidAction: return "InvalidAction";
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::NoActionFound: return "NoActionFound";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::NotBijective: return "NotBijective";
    case ErrorKind::NoneFound: return "NoneFound";
    case ErrorKind::AutomorphismOrderMismatch: return "AutomorphismOrderMismatch";
    case ErrorKind::NotCoprimeInput: return "NotCoprimeInput";
    case ErrorKind::EvenPrime: return "EvenPrime";
    case ErrorKind::NoSuitablePrime: return "NoSuitablePrime";
    case ErrorKind::DiagonalizationFailure: return "DiagonalizationFailure";
    case ErrorKind::PrimeDividesComplementOrder: return "PrimeDividesComplementOrder";
    case ErrorKind::KDoesNotDivide: return "KDoesNotDivide";
    case ErrorKind::WrongPrime: return "WrongPrime";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm(std::uint64_t a, std::uint64_t b)
{
    if (a == 0 || b == 0) return 0;
    return a / std::gcd(a, b) * b;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::map<std::uint64_t, int> factorize(std::uint64_t n)
{
    std::map<std::uint64_t, int> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        while (n % d == 0) {
            ++out[d];
            n /= d;
        }
    }
    if (n > 1) ++out[n];
    return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (auto [p, k] : factorize(n)) out.push_back(p);
    return out;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p)
{
    std::uint64_t part = 1;
    while (n % p == 0) {
        n /= p;
        part *= p;
    }
    return part;
}

std::uint64_t euler_phi(std::uint64_t n)
{
    std::uint64_t result = n;
    for (auto [p, k] : factorize(n)) result = result / p * (p - 1);
    return result;
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    if (m == 1) return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mod_mul(result, base, m);
        base = mod_mul(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m)
{
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::tie(t, new_t) = std::pair{new_t, t - q * new_t};
        std::tie(r, new_r) = std::pair{new_r, r - q * new_r};
    }
    if (r != 1) throw Error(ErrorKind::NotCoprime, "no inverse of " + std::to_string(a) + " mod " + std::to_string(m));
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

std::vector<std::uint64_t> units_mod(std::uint64_t n)
{
    if (n <= 1) return {0};
    std::vector<std::uint64_t> out;
    for (std::uint64_t k = 1; k < n; ++k) {
        if (std::gcd(k, n) == 1) out.push_back(k);
    }
    return out;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n)
{
    if (n == 1) return 1;
    if (std::gcd(a, n) != 1) throw Error(ErrorKind::NotCoprime, "order of non-unit");
    std::uint64_t order = 1;
    std::uint64_t x = a % n;
    while (x != 1) {
        x = mod_mul(x, a, n);
        ++order;
    }
    return order;
}

std::uint64_t primitive_root(std::uint64_t q)
{
    if (q == 2) return 1;
    auto primes = prime_divisors(q - 1);
    for (std::uint64_t g = 2; g < q; ++g) {
        bool ok = true;
        for (auto p : primes) {
            if (mod_pow(g, (q - 1) / p, q) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw Error(ErrorKind::InvalidParameters, "no primitive root modulo " + std::to_string(q));
}

std::uint64_t squarefree_part(std::uint64_t n)
{
    std::uint64_t part = 1;
    for (auto [p, k] : factorize(n)) {
        if (k % 2 == 1) part *= p;
    }
    return part;
}

std::uint64_t ceil_sqrt(std::uint64_t n)
{
    std::uint64_t r = 0;
    while (r * r < n) ++r;
    return r;
}

} // namespace cutkit
