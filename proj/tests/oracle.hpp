#pragma once

// Brute-force reference computations used by the unit and acceptance tests.
// Nothing here calls into the library's class, rationality or character code;
// only the element table (multiplication, inverses, orders) is shared.

#include "cutkit/cyclotomic.hpp"
#include "cutkit/group.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracle {

using cutkit::ElementIndex;
using cutkit::ElementTable;

struct Classes {
    std::vector<std::vector<ElementIndex>> members;
    std::vector<std::size_t> class_of;
    std::uint64_t exponent = 1;
};

inline Classes conjugacy_classes(const ElementTable& t)
{
    Classes c;
    const std::size_t n = t.size();
    c.class_of.assign(n, SIZE_MAX);
    for (ElementIndex x = 0; x < n; ++x) {
        c.exponent = std::lcm(c.exponent, t.order_of(x));
        if (c.class_of[x] != SIZE_MAX) continue;
        std::set<ElementIndex> cls;
        for (ElementIndex g = 0; g < n; ++g) cls.insert(t.multiply(t.multiply(t.inverse(g), x), g));
        for (ElementIndex y : cls) c.class_of[y] = c.members.size();
        c.members.emplace_back(cls.begin(), cls.end());
    }
    return c;
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

// x^k conjugate to x or x^-1 for every k coprime to the exponent.
inline bool is_cut(const ElementTable& t)
{
    const Classes c = conjugacy_classes(t);
    for (ElementIndex x = 0; x < t.size(); ++x) {
        for (std::uint64_t k = 1; k < c.exponent; ++k) {
            if (gcd(k, c.exponent) != 1) continue;
            const std::size_t ck = c.class_of[t.power(x, static_cast<std::int64_t>(k))];
            if (ck != c.class_of[x] && ck != c.class_of[t.inverse(x)]) return false;
        }
    }
    return true;
}

inline bool is_rational(const ElementTable& t)
{
    const Classes c = conjugacy_classes(t);
    for (ElementIndex x = 0; x < t.size(); ++x) {
        for (std::uint64_t k = 1; k < c.exponent; ++k) {
            if (gcd(k, c.exponent) == 1 && c.class_of[t.power(x, static_cast<std::int64_t>(k))] != c.class_of[x]) {
                return false;
            }
        }
    }
    return true;
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

inline bool prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

// Smallest prime q = 1 mod e with q > 2 ceil(sqrt n) and q > after.
inline std::uint64_t table_prime(std::uint64_t n, std::uint64_t e, std::uint64_t after = 0)
{
    std::uint64_t s = 0;
    while (s * s < n) ++s;
    for (std::uint64_t q = e + 1;; q += e) {
        if (q > 2 * s && q > after && prime(q)) return q;
    }
}

using Matrix = std::vector<std::vector<std::uint64_t>>;

// Basis of {v : M v = 0} over F_q.
inline std::vector<std::vector<std::uint64_t>> kernel(Matrix m, std::uint64_t q)
{
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        const std::uint64_t inv = powmod(m[r][c], q - 2, q);
        for (auto& v : m[r]) v = v * inv % q;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const std::uint64_t f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] = (m[i][j] + (q - f) * m[r][j]) % q;
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<std::vector<std::uint64_t>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
        std::vector<std::uint64_t> v(cols, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = (q - m[i][free]) % q;
        basis.push_back(std::move(v));
    }
    return basis;
}

// Character table by explicit eigenvectors of the class multiplication
// matrices over F_q. Rows are indexed by the oracle's own classes and sorted.
struct Table {
    std::uint64_t prime = 0;
    std::uint64_t conductor = 1;
    Classes classes;
    std::vector<std::vector<cutkit::Cyclotomic>> rows;
};

inline Table character_table(const ElementTable& t, std::uint64_t q)
{
    Table out;
    out.prime = q;
    out.classes = conjugacy_classes(t);
    const Classes& c = out.classes;
    const std::size_t r = c.members.size();
    const std::uint64_t n = t.size();
    const std::uint64_t e = c.exponent;
    out.conductor = e;
    if (!prime(q) || (q - 1) % e != 0) throw std::invalid_argument("unsuitable prime");

    // a[i][j][k] = #{x in C_i : x^-1 z_k in C_j}
    std::vector<Matrix> a(r, Matrix(r, std::vector<std::uint64_t>(r, 0)));
    for (std::size_t k = 0; k < r; ++k) {
        const ElementIndex z = c.members[k][0];
        for (ElementIndex x = 0; x < n; ++x) {
            const std::size_t j = c.class_of[t.multiply(t.inverse(x), z)];
            ++a[c.class_of[x]][j][k];
        }
    }
    const std::size_t id = c.class_of[t.identity()];

    std::mt19937_64 rng(12345);
    std::vector<std::vector<std::uint64_t>> omegas;
    for (int attempt = 0; attempt < 500 && omegas.size() != r; ++attempt) {
        omegas.clear();
        Matrix m(r, std::vector<std::uint64_t>(r, 0));
        for (std::size_t i = 0; i < r; ++i) {
            const std::uint64_t w = rng() % q;
            for (std::size_t j = 0; j < r; ++j) {
                for (std::size_t k = 0; k < r; ++k) m[j][k] = (m[j][k] + w * (a[i][j][k] % q)) % q;
            }
        }
        bool ok = true;
        for (std::uint64_t lambda = 0; lambda < q && ok; ++lambda) {
            Matrix s = m;
            for (std::size_t j = 0; j < r; ++j) s[j][j] = (s[j][j] + q - lambda) % q;
            auto ker = kernel(s, q);
            if (ker.empty()) continue;
            if (ker.size() > 1 || ker[0][id] == 0) {
                ok = false;
                break;
            }
            auto v = ker[0];
            const std::uint64_t inv = powmod(v[id], q - 2, q);
            for (auto& x : v) x = x * inv % q;
            omegas.push_back(std::move(v));
        }
        if (!ok) omegas.clear();
    }
    if (omegas.size() != r) throw std::runtime_error("no separating combination found");

    const std::uint64_t zeta = [&] {
        for (std::uint64_t g = 2; g < q; ++g) {
            bool primitive = true;
            for (std::uint64_t p = 2; p <= q - 1; ++p) {
                if ((q - 1) % p == 0 && prime(p) && powmod(g, (q - 1) / p, q) == 1) primitive = false;
            }
            if (primitive) return powmod(g, (q - 1) / e, q);
        }
        throw std::runtime_error("no primitive root");
    }();

    for (const auto& w : omegas) {
        std::uint64_t s = 0;
        for (std::size_t k = 0; k < r; ++k) {
            const std::size_t kinv = c.class_of[t.inverse(c.members[k][0])];
            const std::uint64_t sz = c.members[k].size() % q;
            s = (s + w[k] * w[kinv] % q * powmod(sz, q - 2, q)) % q;
        }
        const std::uint64_t d2 = n % q * powmod(s, q - 2, q) % q;
        std::uint64_t d = 1;
        while (d * d <= n && d * d % q != d2) ++d;
        if (d * d > n) throw std::runtime_error("degree not recovered");
        std::vector<std::uint64_t> chi(r);
        for (std::size_t k = 0; k < r; ++k) {
            chi[k] = d % q * w[k] % q * powmod(c.members[k].size() % q, q - 2, q) % q;
        }
        std::vector<cutkit::Cyclotomic> row;
        const std::uint64_t inv_e = powmod(e % q, q - 2, q);
        for (std::size_t k = 0; k < r; ++k) {
            const ElementIndex g = c.members[k][0];
            std::vector<std::int64_t> counts(e, 0);
            for (std::uint64_t u = 0; u < e; ++u) {
                std::uint64_t m = 0;
                for (std::uint64_t l = 0; l < e; ++l) {
                    const std::uint64_t val = chi[c.class_of[t.power(g, static_cast<std::int64_t>(l))]];
                    m = (m + val * powmod(zeta, (e - (u * l) % e) % e, q)) % q;
                }
                m = m * inv_e % q;
                if (m > d) throw std::runtime_error("multiplicity out of range");
                counts[u] = static_cast<std::int64_t>(m);
            }
            row.push_back(cutkit::Cyclotomic::from_exponent_counts(e, counts));
        }
        out.rows.push_back(std::move(row));
    }
    std::sort(out.rows.begin(), out.rows.end());
    return out;
}

} // namespace oracle
