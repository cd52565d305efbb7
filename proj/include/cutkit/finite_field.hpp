#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cutkit {

/// Dense matrix over F_p, p < 2^32. Vectors are rows and matrices act on the
/// right (v -> vM), matching the right action of permutations.
class FpMatrix {
public:
    FpMatrix() = default;
    FpMatrix(std::size_t rows, std::size_t cols, std::uint64_t p);

    static FpMatrix identity(std::size_t n, std::uint64_t p);
    static FpMatrix scalar(std::size_t n, std::uint64_t p, std::uint64_t lambda);
    /// Entries are reduced mod p (negative values allowed).
    static FpMatrix from_rows(std::uint64_t p, const std::vector<std::vector<std::int64_t>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint64_t modulus() const { return p_; }
    std::uint64_t at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, std::uint64_t v) { data_[i * cols_ + j] = v % p_; }
    std::span<const std::uint64_t> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    const std::vector<std::uint64_t>& entries() const { return data_; }

    FpMatrix operator*(const FpMatrix& rhs) const;
    FpMatrix operator+(const FpMatrix& rhs) const;
    FpMatrix operator-(const FpMatrix& rhs) const;
    FpMatrix pow(std::uint64_t k) const;
    FpMatrix transpose() const;

    bool is_identity() const;
    /// The scalar if this is lambda * I.
    std::optional<std::uint64_t> scalar_value() const;

    std::size_t rank() const;
    std::uint64_t det() const;
    std::optional<FpMatrix> inverse() const;
    /// Basis of {v : vM = 0}, one vector per row, in reduced echelon form.
    FpMatrix left_nullspace() const;
    /// v M for a row vector v.
    std::vector<std::uint64_t> apply(std::span<const std::uint64_t> v) const;
    /// Order in GL(n, p); throws InvalidAction if singular.
    std::uint64_t multiplicative_order() const;
    /// Monic characteristic polynomial det(xI - M), coefficients from degree 0.
    std::vector<std::uint64_t> charpoly() const;

    std::string to_string() const;

    auto operator<=>(const FpMatrix&) const = default;

private:
    std::uint64_t p_ = 2;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint64_t> data_;
};

FpMatrix kronecker(const FpMatrix& a, const FpMatrix& b);
FpMatrix block_diagonal(const std::vector<FpMatrix>& blocks);

/// GL(d, p) in lexicographic order of the row-major entries.
std::vector<FpMatrix> general_linear_group(std::size_t d, std::uint64_t p);

/// Vectors of F_p^d encoded as integers sum v_i p^i.
std::vector<std::uint64_t> decode_vector(std::uint64_t code, std::size_t d, std::uint64_t p);
std::uint64_t encode_vector(std::span<const std::uint64_t> v, std::uint64_t p);

/// F_{p^t} as F_p[x]/(f) where f is the least monic irreducible polynomial of
/// degree t, ordering polynomials by their coefficient codes. Elements are
/// encoded as integers sum c_i p^i. The primitive element is the least code
/// of multiplicative order p^t - 1.
class ExtensionField {
public:
    ExtensionField(std::uint64_t p, unsigned t);

    std::uint64_t characteristic() const { return p_; }
    unsigned degree() const { return t_; }
    std::uint64_t size() const { return q_; }
    const std::vector<std::uint64_t>& modulus_polynomial() const { return modulus_; }

    using Element = std::uint64_t;
    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element from_prime(std::uint64_t a) const { return a % p_; }
    Element add(Element a, Element b) const;
    Element sub(Element a, Element b) const;
    Element mul(Element a, Element b) const;
    Element inv(Element a) const;

    Element primitive() const { return primitive_; }
    /// Discrete log base the primitive element; a != 0.
    std::uint64_t log(Element a) const { return log_[a]; }
    Element exp(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }

    /// Rank of a matrix with entries in this field (rows of elements).
    std::size_t rank(std::vector<std::vector<Element>> m) const;

private:
    Element mul_poly(Element a, Element b) const;

    std::uint64_t p_;
    unsigned t_;
    std::uint64_t q_;
    std::vector<std::uint64_t> modulus_;
    Element primitive_ = 0;
    std::vector<std::uint64_t> log_;
    std::vector<Element> exp_;
};

} // namespace cutkit
