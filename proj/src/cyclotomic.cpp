#include "cutkit/cyclotomic.hpp"

#include "cutkit/error.hpp"
#include "cutkit/numtheory.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace cutkit {

namespace {

// Exact quotient of integer polynomials with monic divisor.
std::vector<std::int64_t> divide_exact(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den)
{
    const std::size_t dn = den.size() - 1;
    std::vector<std::int64_t> q(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        std::int64_t lead = num[i];
        q[i - dn] = lead;
        if (lead == 0) continue;
        for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= lead * den[j];
    }
    return q;
}

} // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint64_t e)
{
    static std::mutex mutex;
    static std::map<std::uint64_t, std::unique_ptr<std::vector<std::int64_t>>> cache;
    if (e == 0) throw Error(ErrorKind::InvalidParameters, "cyclotomic polynomial of index 0");
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(e);
        if (it != cache.end()) return *it->second;
    }
    // Phi_e = (x^e - 1) / prod_{d | e, d < e} Phi_d
    std::vector<std::int64_t> poly(e + 1, 0);
    poly[0] = -1;
    poly[e] = 1;
    for (std::uint64_t d = 1; d < e; ++d) {
        if (e % d == 0) poly = divide_exact(std::move(poly), cyclotomic_polynomial(d));
    }
    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.emplace(e, std::make_unique<std::vector<std::int64_t>>(std::move(poly)));
    return *it->second;
}

Cyclotomic::Cyclotomic(std::uint64_t conductor) : e_(conductor)
{
    if (e_ == 0) throw Error(ErrorKind::InvalidParameters, "conductor 0");
    c_.assign(euler_phi(e_), 0);
}

std::vector<std::int64_t> Cyclotomic::reduce(std::uint64_t e, std::vector<std::int64_t> poly)
{
    const auto& phi = cyclotomic_polynomial(e);
    const std::size_t n = phi.size() - 1;
    for (std::size_t i = poly.size(); i-- > n;) {
        std::int64_t lead = poly[i];
        if (lead == 0) continue;
        for (std::size_t j = 0; j <= n; ++j) poly[i - n + j] -= lead * phi[j];
    }
    poly.resize(n, 0);
    return poly;
}

Cyclotomic Cyclotomic::integer(std::uint64_t conductor, std::int64_t n)
{
    Cyclotomic z(conductor);
    z.c_[0] = n;
    return z;
}

Cyclotomic Cyclotomic::zeta_power(std::uint64_t conductor, std::uint64_t k)
{
    std::vector<std::int64_t> counts(conductor, 0);
    counts[k % conductor] = 1;
    return from_exponent_counts(conductor, counts);
}

Cyclotomic Cyclotomic::from_exponent_counts(std::uint64_t conductor, std::span<const std::int64_t> counts)
{
    Cyclotomic z(conductor);
    std::vector<std::int64_t> poly(conductor, 0);
    for (std::size_t a = 0; a < counts.size(); ++a) poly[a % conductor] += counts[a];
    z.c_ = reduce(conductor, std::move(poly));
    return z;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const
{
    if (e_ != o.e_) throw Error(ErrorKind::InvalidParameters, "conductor mismatch");
    Cyclotomic r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const { return scaled(-1); }

Cyclotomic Cyclotomic::scaled(std::int64_t n) const
{
    Cyclotomic r = *this;
    for (auto& x : r.c_) x *= n;
    return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const
{
    if (e_ != o.e_) throw Error(ErrorKind::InvalidParameters, "conductor mismatch");
    std::vector<std::int64_t> poly(2 * c_.size(), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) poly[i + j] += c_[i] * o.c_[j];
    }
    Cyclotomic r(e_);
    r.c_ = reduce(e_, std::move(poly));
    return r;
}

Cyclotomic Cyclotomic::galois(std::uint64_t k) const
{
    if (gcd(k % e_ == 0 ? e_ : k % e_, e_) != 1 && e_ > 1) {
        throw Error(ErrorKind::NotCoprime, "galois map needs k coprime to the conductor");
    }
    std::vector<std::int64_t> counts(e_, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) counts[mod_mul(i, k, e_)] += c_[i];
    return from_exponent_counts(e_, counts);
}

bool Cyclotomic::is_zero() const
{
    for (auto x : c_) {
        if (x != 0) return false;
    }
    return true;
}

std::optional<std::int64_t> Cyclotomic::integer_value() const
{
    for (std::size_t i = 1; i < c_.size(); ++i) {
        if (c_[i] != 0) return std::nullopt;
    }
    return c_[0];
}

std::string Cyclotomic::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        std::int64_t x = c_[i];
        if (x == 0) continue;
        if (!out.empty()) out += x < 0 ? " - " : " + ";
        else if (x < 0) out += "-";
        std::int64_t a = x < 0 ? -x : x;
        if (i == 0) {
            out += std::to_string(a);
        } else {
            if (a != 1) out += std::to_string(a) + "*";
            out += "z" + std::to_string(e_);
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace cutkit
