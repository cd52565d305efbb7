#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cutkit {

/// The e-th cyclotomic polynomial, coefficients from degree 0.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint64_t e);

/// An element of Z[zeta_e], stored by its coefficients in the power basis
/// 1, zeta, ..., zeta^(phi(e)-1), i.e. reduced modulo Phi_e. Character values
/// are algebraic integers, so integer coefficients suffice.
class Cyclotomic {
public:
    Cyclotomic() : Cyclotomic(1) {}
    explicit Cyclotomic(std::uint64_t conductor);

    static Cyclotomic integer(std::uint64_t conductor, std::int64_t n);
    static Cyclotomic zeta_power(std::uint64_t conductor, std::uint64_t k);
    /// sum_a counts[a] zeta^a for a = 0..e-1.
    static Cyclotomic from_exponent_counts(std::uint64_t conductor, std::span<const std::int64_t> counts);

    std::uint64_t conductor() const { return e_; }
    const std::vector<std::int64_t>& coeffs() const { return c_; }

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic scaled(std::int64_t n) const;

    /// zeta -> zeta^k, gcd(k, e) = 1.
    Cyclotomic galois(std::uint64_t k) const;
    Cyclotomic conjugate() const { return galois(e_ - 1); }

    bool is_zero() const;
    /// The integer if this lies in Z.
    std::optional<std::int64_t> integer_value() const;
    bool is_rational() const { return integer_value().has_value(); }

    std::string to_string() const;

    bool operator==(const Cyclotomic& o) const { return e_ == o.e_ && c_ == o.c_; }
    auto operator<=>(const Cyclotomic& o) const = default;

private:
    static std::vector<std::int64_t> reduce(std::uint64_t e, std::vector<std::int64_t> poly);

    std::uint64_t e_;
    std::vector<std::int64_t> c_;
};

} // namespace cutkit
