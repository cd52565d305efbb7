#include "cutkit/finite_field.hpp"

#include "cutkit/error.hpp"
#include "cutkit/numtheory.hpp"

#include <algorithm>
#include <sstream>

namespace cutkit {

namespace {

std::uint64_t reduce(std::int64_t v, std::uint64_t p)
{
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return mod_pow(a, p - 2, p); }

} // namespace

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint64_t p)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0)
{
}

FpMatrix FpMatrix::identity(std::size_t n, std::uint64_t p) { return scalar(n, p, 1); }

FpMatrix FpMatrix::scalar(std::size_t n, std::uint64_t p, std::uint64_t lambda)
{
    FpMatrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, lambda);
    return m;
}

FpMatrix FpMatrix::from_rows(std::uint64_t p, const std::vector<std::vector<std::int64_t>>& rows)
{
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    FpMatrix m(rows.size(), cols, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw Error(ErrorKind::InvalidAction, "ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j) m.data_[i * cols + j] = reduce(rows[i][j], p);
    }
    return m;
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const
{
    FpMatrix out(rows_, rhs.cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            std::uint64_t a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                auto& cell = out.data_[i * rhs.cols_ + j];
                cell = (cell + a * rhs.at(k, j)) % p_;
            }
        }
    }
    return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& rhs) const
{
    FpMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = (data_[i] + rhs.data_[i]) % p_;
    return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& rhs) const
{
    FpMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = (data_[i] + p_ - rhs.data_[i]) % p_;
    return out;
}

FpMatrix FpMatrix::pow(std::uint64_t k) const
{
    FpMatrix result = identity(rows_, p_);
    FpMatrix base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

FpMatrix FpMatrix::transpose() const
{
    FpMatrix out(cols_, rows_, p_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out.data_[j * rows_ + i] = at(i, j);
    }
    return out;
}

bool FpMatrix::is_identity() const
{
    auto s = scalar_value();
    return s && *s == 1;
}

std::optional<std::uint64_t> FpMatrix::scalar_value() const
{
    if (rows_ != cols_ || rows_ == 0) return std::nullopt;
    std::uint64_t lambda = at(0, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (at(i, j) != (i == j ? lambda : 0)) return std::nullopt;
        }
    }
    return lambda;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::uint64_t>& a, std::size_t rows, std::size_t cols, std::uint64_t p)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
        }
        std::uint64_t inv = inv_mod(a[r * cols + c], p);
        for (std::size_t j = 0; j < cols; ++j) a[r * cols + j] = a[r * cols + j] * inv % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            std::uint64_t f = a[i * cols + c];
            if (f == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) {
                a[i * cols + j] = (a[i * cols + j] + (p - f) * a[r * cols + j]) % p;
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::size_t FpMatrix::rank() const
{
    auto a = data_;
    return rref(a, rows_, cols_, p_).size();
}

std::uint64_t FpMatrix::det() const
{
    if (rows_ != cols_) throw Error(ErrorKind::InvalidAction, "determinant of non-square matrix");
    auto a = data_;
    const std::size_t n = rows_;
    std::uint64_t d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv * n + c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[c * n + j]);
            d = (p_ - d) % p_;
        }
        d = d * a[c * n + c] % p_;
        std::uint64_t inv = inv_mod(a[c * n + c], p_);
        for (std::size_t i = c + 1; i < n; ++i) {
            std::uint64_t f = a[i * n + c] * inv % p_;
            if (f == 0) continue;
            for (std::size_t j = c; j < n; ++j) a[i * n + j] = (a[i * n + j] + (p_ - f) * a[c * n + j]) % p_;
        }
    }
    return d;
}

std::optional<FpMatrix> FpMatrix::inverse() const
{
    if (rows_ != cols_) return std::nullopt;
    const std::size_t n = rows_;
    std::vector<std::uint64_t> aug(n * 2 * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i * 2 * n + j] = at(i, j);
        aug[i * 2 * n + n + i] = 1;
    }
    auto piv = rref(aug, n, 2 * n, p_);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    FpMatrix out(n, n, p_);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out.data_[i * n + j] = aug[i * 2 * n + n + j];
    }
    return out;
}

FpMatrix FpMatrix::left_nullspace() const
{
    // vM = 0  <=>  M^T v^T = 0: null space of the transpose.
    FpMatrix t = transpose();
    auto a = t.data_;
    const std::size_t rows = t.rows_, cols = t.cols_;
    auto pivots = rref(a, rows, cols, p_);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols; ++c) {
        if (!is_pivot[c]) free_cols.push_back(c);
    }
    FpMatrix basis(free_cols.size(), cols, p_);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t f = free_cols[k];
        basis.data_[k * cols + f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            basis.data_[k * cols + pivots[r]] = (p_ - a[r * cols + f]) % p_;
        }
    }
    auto b = basis.data_;
    rref(b, basis.rows_, cols, p_);
    basis.data_ = std::move(b);
    return basis;
}

std::vector<std::uint64_t> FpMatrix::apply(std::span<const std::uint64_t> v) const
{
    std::vector<std::uint64_t> out(cols_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < cols_; ++j) out[j] = (out[j] + v[i] * at(i, j)) % p_;
    }
    return out;
}

std::uint64_t FpMatrix::multiplicative_order() const
{
    if (det() == 0) throw Error(ErrorKind::InvalidAction, "singular matrix has no order");
    FpMatrix x = *this;
    std::uint64_t k = 1;
    while (!x.is_identity()) {
        x = x * *this;
        ++k;
    }
    return k;
}

std::vector<std::uint64_t> FpMatrix::charpoly() const
{
    const std::size_t n = rows_;
    auto h = data_;
    auto H = [&](std::size_t i, std::size_t j) -> std::uint64_t& { return h[i * n + j]; };
    // Similarity reduction to upper Hessenberg form.
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t piv = j + 1;
        while (piv < n && H(piv, j) == 0) ++piv;
        if (piv == n) continue;
        if (piv != j + 1) {
            for (std::size_t c = 0; c < n; ++c) std::swap(H(piv, c), H(j + 1, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(H(r, piv), H(r, j + 1));
        }
        std::uint64_t inv = inv_mod(H(j + 1, j), p_);
        for (std::size_t i = j + 2; i < n; ++i) {
            std::uint64_t f = H(i, j) * inv % p_;
            if (f == 0) continue;
            for (std::size_t c = 0; c < n; ++c) H(i, c) = (H(i, c) + (p_ - f) * H(j + 1, c)) % p_;
            for (std::size_t r = 0; r < n; ++r) H(r, j + 1) = (H(r, j + 1) + f * H(r, i)) % p_;
        }
    }
    // p_m = (x - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{k=i+1..m} h_{k,k-1}) p_{i-1}
    std::vector<std::vector<std::uint64_t>> polys(n + 1);
    polys[0] = {1};
    for (std::size_t m = 1; m <= n; ++m) {
        std::vector<std::uint64_t> pm(m + 1, 0);
        const auto& prev = polys[m - 1];
        for (std::size_t d = 0; d < prev.size(); ++d) {
            pm[d + 1] = (pm[d + 1] + prev[d]) % p_;
            pm[d] = (pm[d] + (p_ - H(m - 1, m - 1)) * prev[d]) % p_;
        }
        std::uint64_t prod = 1;
        for (std::size_t i = m - 1; i >= 1; --i) {
            prod = prod * H(i, i - 1) % p_;
            std::uint64_t coef = H(i - 1, m - 1) * prod % p_;
            if (coef != 0) {
                const auto& q = polys[i - 1];
                for (std::size_t d = 0; d < q.size(); ++d) pm[d] = (pm[d] + (p_ - coef) * q[d]) % p_;
            }
            if (prod == 0) break;
        }
        polys[m] = std::move(pm);
    }
    return polys[n];
}

std::string FpMatrix::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

FpMatrix kronecker(const FpMatrix& a, const FpMatrix& b)
{
    FpMatrix out(a.rows() * b.rows(), a.cols() * b.cols(), a.modulus());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out.set(i * b.rows() + k, j * b.cols() + l, a.at(i, j) * b.at(k, l));
                }
            }
        }
    }
    return out;
}

FpMatrix block_diagonal(const std::vector<FpMatrix>& blocks)
{
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.rows();
    FpMatrix out(n, n, blocks.empty() ? 2 : blocks[0].modulus());
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i) {
            for (std::size_t j = 0; j < b.cols(); ++j) out.set(off + i, off + j, b.at(i, j));
        }
        off += b.rows();
    }
    return out;
}

std::vector<FpMatrix> general_linear_group(std::size_t d, std::uint64_t p)
{
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < d * d; ++i) total *= p;
    std::vector<FpMatrix> out;
    for (std::uint64_t code = 0; code < total; ++code) {
        FpMatrix m(d, d, p);
        std::uint64_t c = code;
        for (std::size_t k = d * d; k-- > 0;) {
            m.set(k / d, k % d, c % p);
            c /= p;
        }
        if (m.det() != 0) out.push_back(std::move(m));
    }
    return out;
}

std::vector<std::uint64_t> decode_vector(std::uint64_t code, std::size_t d, std::uint64_t p)
{
    std::vector<std::uint64_t> v(d);
    for (std::size_t i = 0; i < d; ++i) {
        v[i] = code % p;
        code /= p;
    }
    return v;
}

std::uint64_t encode_vector(std::span<const std::uint64_t> v, std::uint64_t p)
{
    std::uint64_t code = 0;
    for (std::size_t i = v.size(); i-- > 0;) code = code * p + v[i];
    return code;
}

// ---- ExtensionField ------------------------------------------------------

namespace {

using Poly = std::vector<std::uint64_t>;

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, std::uint64_t p)
{
    trim(a);
    const std::uint64_t lead_inv = inv_mod(m.back(), p);
    while (a.size() >= m.size()) {
        std::uint64_t f = a.back() * lead_inv % p;
        std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = (a[shift + i] + (p - f) * m[i]) % p;
        trim(a);
    }
    return a;
}

bool irreducible(const Poly& f, std::uint64_t p)
{
    const std::size_t t = f.size() - 1;
    for (std::size_t deg = 1; deg <= t / 2; ++deg) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < deg; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly g = decode_vector(code, deg, p);
            g.push_back(1);
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

} // namespace

ExtensionField::ExtensionField(std::uint64_t p, unsigned t) : p_(p), t_(t), q_(1)
{
    if (!is_prime(p) || t == 0) throw Error(ErrorKind::InvalidParameters, "extension field needs prime p, t >= 1");
    for (unsigned i = 0; i < t; ++i) q_ *= p;
    for (std::uint64_t code = 0; code < q_; ++code) {
        Poly f = decode_vector(code, t, p);
        f.push_back(1);
        if (irreducible(f, p)) {
            modulus_ = std::move(f);
            break;
        }
    }
    log_.assign(q_, 0);
    exp_.assign(q_ - 1, 0);
    for (Element g = 1; g < q_; ++g) {
        Element x = 1;
        std::uint64_t k = 0;
        do {
            exp_[k] = x;
            x = mul_poly(x, g);
            ++k;
        } while (x != 1);
        if (k == q_ - 1) {
            primitive_ = g;
            break;
        }
    }
    for (std::uint64_t k = 0; k + 1 < q_; ++k) log_[exp_[k]] = k;
}

ExtensionField::Element ExtensionField::mul_poly(Element a, Element b) const
{
    Poly pa = decode_vector(a, t_, p_), pb = decode_vector(b, t_, p_);
    Poly prod(2 * t_, 0);
    for (unsigned i = 0; i < t_; ++i) {
        for (unsigned j = 0; j < t_; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
    }
    Poly r = poly_mod(prod, modulus_, p_);
    r.resize(t_, 0);
    return encode_vector(r, p_);
}

ExtensionField::Element ExtensionField::add(Element a, Element b) const
{
    auto va = decode_vector(a, t_, p_), vb = decode_vector(b, t_, p_);
    for (unsigned i = 0; i < t_; ++i) va[i] = (va[i] + vb[i]) % p_;
    return encode_vector(va, p_);
}

ExtensionField::Element ExtensionField::sub(Element a, Element b) const
{
    auto va = decode_vector(a, t_, p_), vb = decode_vector(b, t_, p_);
    for (unsigned i = 0; i < t_; ++i) va[i] = (va[i] + p_ - vb[i]) % p_;
    return encode_vector(va, p_);
}

ExtensionField::Element ExtensionField::mul(Element a, Element b) const
{
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

ExtensionField::Element ExtensionField::inv(Element a) const
{
    if (a == 0) throw Error(ErrorKind::InvalidParameters, "zero has no inverse");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::size_t ExtensionField::rank(std::vector<std::vector<Element>> m) const
{
    std::size_t r = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        Element inv_p = inv(m[r][c]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Element f = mul(m[i][c], inv_p);
            for (std::size_t j = c; j < cols; ++j) m[i][j] = sub(m[i][j], mul(f, m[r][j]));
        }
        ++r;
    }
    return r;
}

} // namespace cutkit
