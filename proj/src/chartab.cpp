#include "cutkit/chartab.hpp"

#include "cutkit/error.hpp"
#include "cutkit/finite_field.hpp"
#include "cutkit/numtheory.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace cutkit {

std::string to_string(FieldDescriptor::Kind kind)
{
    switch (kind) {
    case FieldDescriptor::Kind::Rational: return "Rational";
    case FieldDescriptor::Kind::ImaginaryQuadratic: return "ImaginaryQuadratic";
    case FieldDescriptor::Kind::RealQuadratic: return "RealQuadratic";
    case FieldDescriptor::Kind::HigherDegree: return "HigherDegree";
    }
    return "?";
}

std::string FieldDescriptor::to_string() const
{
    if (kind == Kind::Rational) return "Rational";
    return cutkit::to_string(kind) + "(" + std::to_string(d) + ")";
}

ClassMultCoeffs class_mult_coeffs(const ClassData& cd)
{
    const ElementTable& t = cd.table();
    const std::size_t r = cd.class_count();
    ClassMultCoeffs a(r, std::vector<std::vector<std::uint64_t>>(r, std::vector<std::uint64_t>(r, 0)));
    // u v = rep_k with u in class i forces v = u^-1 rep_k.
    for (std::size_t i = 0; i < r; ++i) {
        for (ElementIndex u : cd.members(i)) {
            const ElementIndex ui = t.inverse(u);
            for (std::size_t k = 0; k < r; ++k) ++a[i][cd.class_of(t.multiply(ui, cd.rep(k)))][k];
        }
    }
    return a;
}

std::uint64_t dixon_prime(std::uint64_t group_order, std::uint64_t exponent, std::uint64_t after)
{
    constexpr std::uint64_t kSearchBound = 10'000'000;
    const std::uint64_t bound = 2 * ceil_sqrt(group_order);
    for (std::uint64_t q = exponent + 1; q <= kSearchBound; q += exponent) {
        if (q > bound && q > after && is_prime(q)) return q;
    }
    throw Error(ErrorKind::NoSuitablePrime, "no prime = 1 mod " + std::to_string(exponent) + " below 10^7");
}

namespace {

using Row = std::vector<std::uint64_t>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<Row>& m, std::uint64_t q)
{
    std::vector<std::size_t> pivots;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        const std::uint64_t inv = mod_inverse(m[r][c], q);
        for (auto& x : m[r]) x = mod_mul(x, inv, q);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const std::uint64_t f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] = (m[i][j] + q - mod_mul(f, m[r][j], q)) % q;
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    return pivots;
}

struct Subspace {
    std::vector<Row> basis;
    std::vector<std::size_t> pivots;
};

[[noreturn]] void diag_failure(const std::string& what) { throw Error(ErrorKind::DiagonalizationFailure, what); }

// Splits s into common eigenspaces of M (acting on column vectors).
std::vector<Subspace> split(const Subspace& s, const std::vector<Row>& m, std::uint64_t q)
{
    const std::size_t dim = s.basis.size(), r = m.size();
    FpMatrix c(dim, dim, q);
    for (std::size_t i = 0; i < dim; ++i) {
        Row mb(r, 0);
        for (std::size_t a = 0; a < r; ++a) {
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < r; ++k) acc = (acc + mod_mul(m[a][k], s.basis[i][k], q)) % q;
            mb[a] = acc;
        }
        for (std::size_t l = 0; l < dim; ++l) c.set(i, l, mb[s.pivots[l]]);
        for (std::size_t a = 0; a < r; ++a) {
            std::uint64_t expect = 0;
            for (std::size_t l = 0; l < dim; ++l) expect = (expect + mod_mul(c.at(i, l), s.basis[l][a], q)) % q;
            if (expect != mb[a]) diag_failure("subspace is not invariant under a class matrix");
        }
    }
    const auto poly = c.charpoly();
    std::vector<Subspace> parts;
    std::size_t total = 0;
    for (std::uint64_t lambda = 0; lambda < q; ++lambda) {
        std::uint64_t v = 0;
        for (std::size_t i = poly.size(); i-- > 0;) v = (mod_mul(v, lambda, q) + poly[i]) % q;
        if (v != 0) continue;
        FpMatrix shifted = c - FpMatrix::scalar(dim, q, lambda);
        FpMatrix x = shifted.left_nullspace();
        if (x.rows() == dim) return {s};
        Subspace part;
        for (std::size_t i = 0; i < x.rows(); ++i) {
            Row w(r, 0);
            for (std::size_t l = 0; l < dim; ++l) {
                if (x.at(i, l) == 0) continue;
                for (std::size_t a = 0; a < r; ++a) w[a] = (w[a] + mod_mul(x.at(i, l), s.basis[l][a], q)) % q;
            }
            part.basis.push_back(std::move(w));
        }
        part.pivots = rref(part.basis, q);
        total += part.basis.size();
        parts.push_back(std::move(part));
    }
    if (total != dim) diag_failure("class matrix is not diagonalizable on a common eigenspace");
    return parts;
}

// Value of a character as multiplicities of roots of unity: (exponent, count)
// pairs with exponents mod e.
using Terms = std::vector<std::pair<std::uint64_t, std::int64_t>>;

struct RawRow {
    std::uint64_t degree = 0;
    Character values;
    std::vector<Terms> terms;
};

Cyclotomic inner_sum(std::uint64_t e, const std::vector<std::pair<const Terms*, const Terms*>>& pairs,
                     const std::vector<std::int64_t>& weights)
{
    std::vector<std::int64_t> acc(e, 0);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (const auto& [a, m] : *pairs[i].first) {
            for (const auto& [b, n] : *pairs[i].second) acc[(a + e - b) % e] += weights[i] * m * n;
        }
    }
    return Cyclotomic::from_exponent_counts(e, acc);
}

void check_rows_and_columns(const ClassData& cd, std::uint64_t e, const std::vector<RawRow>& rows)
{
    const std::size_t r = cd.class_count();
    const auto order = static_cast<std::int64_t>(cd.group_order());
    std::vector<std::int64_t> weights(r);
    for (std::size_t k = 0; k < r; ++k) weights[k] = static_cast<std::int64_t>(cd.size(k));
    for (std::size_t x = 0; x < r; ++x) {
        for (std::size_t y = x; y < r; ++y) {
            std::vector<std::pair<const Terms*, const Terms*>> pairs;
            for (std::size_t k = 0; k < r; ++k) pairs.emplace_back(&rows[x].terms[k], &rows[y].terms[k]);
            if (inner_sum(e, pairs, weights) != Cyclotomic::integer(e, x == y ? order : 0)) {
                diag_failure("row orthogonality fails for rows " + std::to_string(x) + "," + std::to_string(y));
            }
        }
    }
    const std::vector<std::int64_t> ones(r, 1);
    for (std::size_t k = 0; k < r; ++k) {
        for (std::size_t l = k; l < r; ++l) {
            std::vector<std::pair<const Terms*, const Terms*>> pairs;
            for (std::size_t x = 0; x < r; ++x) pairs.emplace_back(&rows[x].terms[k], &rows[x].terms[l]);
            const std::int64_t expect = k == l ? order / weights[k] : 0;
            if (inner_sum(e, pairs, ones) != Cyclotomic::integer(e, expect)) {
                diag_failure("column orthogonality fails for classes " + std::to_string(k) + "," + std::to_string(l));
            }
        }
    }
}

Terms terms_of(const Cyclotomic& v, std::uint64_t e)
{
    // Power-basis coefficients are already an exponent form.
    Terms t;
    for (std::size_t i = 0; i < v.coeffs().size(); ++i) {
        if (v.coeffs()[i] != 0) t.emplace_back(i % e, v.coeffs()[i]);
    }
    return t;
}

} // namespace

CharacterTable character_table_with_prime(const PermutationGroup& g, std::uint64_t q)
{
    const ClassData& cd = g.classes();
    const ElementTable& et = cd.table();
    const std::size_t r = cd.class_count();
    const std::uint64_t order = cd.group_order();
    const std::uint64_t e = cd.exponent();
    if (!is_prime(q) || (q - 1) % e != 0 || q <= 2 * ceil_sqrt(order)) {
        throw Error(ErrorKind::NoSuitablePrime, "q=" + std::to_string(q) + " is not a valid Dixon prime");
    }

    const auto coeffs = class_mult_coeffs(cd);
    std::vector<Subspace> spaces;
    {
        Subspace all;
        for (std::size_t i = 0; i < r; ++i) {
            Row row(r, 0);
            row[i] = 1;
            all.basis.push_back(std::move(row));
            all.pivots.push_back(i);
        }
        spaces.push_back(std::move(all));
    }
    for (std::size_t j = 1; j < r; ++j) {
        if (std::all_of(spaces.begin(), spaces.end(), [](const Subspace& s) { return s.basis.size() == 1; })) break;
        std::vector<Row> m(r, Row(r, 0));
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t k = 0; k < r; ++k) m[i][k] = coeffs[j][i][k] % q;
        }
        std::vector<Subspace> next;
        for (const auto& s : spaces) {
            if (s.basis.size() == 1) {
                next.push_back(s);
                continue;
            }
            for (auto& part : split(s, m, q)) next.push_back(std::move(part));
        }
        spaces = std::move(next);
    }
    if (spaces.size() != r) diag_failure("common eigenspaces did not split into lines");

    const std::uint64_t root = mod_pow(primitive_root(q), (q - 1) / e, q);
    // Class of rep_k^l for l < o(rep_k).
    std::vector<std::vector<std::size_t>> powers(r);
    for (std::size_t k = 0; k < r; ++k) {
        ElementIndex x = et.identity();
        for (std::uint64_t l = 0; l < cd.rep_order(k); ++l, x = et.multiply(x, cd.rep(k))) {
            powers[k].push_back(cd.class_of(x));
        }
    }
    std::uint64_t max_degree = 1;
    while ((max_degree + 1) * (max_degree + 1) <= order) ++max_degree;

    std::vector<RawRow> rows;
    for (const auto& s : spaces) {
        const Row& w = s.basis[0];
        if (w[0] != 1) diag_failure("eigenvector with vanishing identity coordinate");
        std::uint64_t sum = 0;
        for (std::size_t k = 0; k < r; ++k) {
            const std::uint64_t term = mod_mul(w[k], w[cd.inverse_class(k)], q);
            sum = (sum + mod_mul(term, mod_inverse(cd.size(k) % q, q), q)) % q;
        }
        if (sum == 0) diag_failure("degree equation has no solution");
        const std::uint64_t d2 = mod_mul(order % q, mod_inverse(sum, q), q);
        std::uint64_t degree = 0;
        for (std::uint64_t d = 1; d <= max_degree; ++d) {
            if (mod_mul(d, d, q) == d2) {
                degree = d;
                break;
            }
        }
        if (degree == 0) diag_failure("no degree d <= sqrt|G| with d^2 = " + std::to_string(d2));
        std::vector<std::uint64_t> modq(r);
        for (std::size_t k = 0; k < r; ++k) {
            modq[k] = mod_mul(mod_mul(w[k], degree, q), mod_inverse(cd.size(k) % q, q), q);
        }
        RawRow row;
        row.degree = degree;
        for (std::size_t k = 0; k < r; ++k) {
            const std::uint64_t o = cd.rep_order(k);
            const std::uint64_t zo = mod_pow(root, e / o, q);
            const std::uint64_t zo_inv = mod_inverse(zo, q);
            const std::uint64_t o_inv = mod_inverse(o % q, q);
            std::vector<std::int64_t> counts(e, 0);
            Terms terms;
            std::int64_t total = 0;
            for (std::uint64_t a = 0; a < o; ++a) {
                const std::uint64_t step = mod_pow(zo_inv, a, q);
                std::uint64_t acc = 0, zl = 1;
                for (std::uint64_t l = 0; l < o; ++l) {
                    acc = (acc + mod_mul(modq[powers[k][l]], zl, q)) % q;
                    zl = mod_mul(zl, step, q);
                }
                const std::uint64_t m = mod_mul(acc, o_inv, q);
                if (m > degree) diag_failure("eigenvalue multiplicity out of range");
                if (m == 0) continue;
                counts[a * (e / o)] += static_cast<std::int64_t>(m);
                terms.emplace_back(a * (e / o), static_cast<std::int64_t>(m));
                total += static_cast<std::int64_t>(m);
            }
            if (total != static_cast<std::int64_t>(degree)) diag_failure("multiplicities do not sum to the degree");
            row.values.push_back(Cyclotomic::from_exponent_counts(e, counts));
            row.terms.push_back(std::move(terms));
        }
        rows.push_back(std::move(row));
    }

    std::sort(rows.begin(), rows.end(), [&](const RawRow& a, const RawRow& b) {
        auto trivial = [&](const RawRow& x) {
            return std::all_of(x.values.begin(), x.values.end(),
                               [&](const Cyclotomic& v) { return v == Cyclotomic::integer(e, 1); });
        };
        if (trivial(a) != trivial(b)) return trivial(a);
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.values < b.values;
    });

    std::uint64_t square_sum = 0;
    for (const auto& row : rows) {
        square_sum += row.degree * row.degree;
        if (order % row.degree != 0) diag_failure("degree does not divide the group order");
    }
    if (square_sum != order) diag_failure("sum of squared degrees differs from |G|");
    check_rows_and_columns(cd, e, rows);

    CharacterTable t;
    t.group = g;
    t.conductor = e;
    t.prime = q;
    t.root = root;
    for (auto& row : rows) {
        t.degrees.push_back(row.degree);
        t.rows.push_back(std::move(row.values));
    }
    // Galois closure: every row permuted by a power map is again a row.
    std::set<Character> present(t.rows.begin(), t.rows.end());
    for (auto k : units_mod(e)) {
        const auto& pm = cd.power_map(e > 1 ? k : 1);
        for (const auto& row : t.rows) {
            Character image(r);
            for (std::size_t c = 0; c < r; ++c) image[c] = row[pm[c]];
            if (!present.count(image)) diag_failure("table is not closed under the Galois action");
        }
    }
    for (std::size_t i = 0; i < t.rows.size(); ++i) t.fields.push_back(field_of_character(t, i));
    return t;
}

CharacterTable character_table(const PermutationGroup& g)
{
    const ClassData& cd = g.classes();
    return character_table_with_prime(g, dixon_prime(cd.group_order(), cd.exponent()));
}

void check_orthogonality(const CharacterTable& t)
{
    std::vector<RawRow> rows;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        RawRow raw;
        raw.degree = t.degrees[i];
        for (const auto& v : t.rows[i]) raw.terms.push_back(terms_of(v, t.conductor));
        rows.push_back(std::move(raw));
    }
    check_rows_and_columns(t.classes(), t.conductor, rows);
}

namespace {

UnitSubgroup stabilizer_of(const ClassData& cd, const Character& chi, std::uint64_t e)
{
    std::vector<std::uint64_t> ks;
    for (auto k : units_mod(e)) {
        const auto& pm = cd.power_map(e > 1 ? k : 1);
        bool fixed = true;
        for (std::size_t c = 0; c < chi.size() && fixed; ++c) fixed = chi[pm[c]] == chi[c];
        if (fixed) ks.push_back(k);
    }
    return {e, ks};
}

FieldDescriptor descriptor_from_stabilizer(UnitSubgroup stab)
{
    FieldDescriptor f;
    const std::uint64_t e = stab.modulus;
    const std::uint64_t index = stab.index();
    f.stabilizer = stab;
    if (index == 1) return f;
    if (index > 2) {
        f.kind = FieldDescriptor::Kind::HigherDegree;
        f.d = index;
        return f;
    }
    std::uint64_t outside = 0;
    for (auto k : units_mod(e)) {
        if (!stab.contains(k)) {
            outside = k;
            break;
        }
    }
    // Gaussian periods eta_a = sum_{h in stab} zeta^(a h) lie in the fixed
    // field and span it; the first irrational one generates it.
    for (std::uint64_t a = 1; a <= e; ++a) {
        std::vector<std::int64_t> counts(e, 0);
        for (auto h : stab.elements) ++counts[mod_mul(a, h, e)];
        const Cyclotomic eta = Cyclotomic::from_exponent_counts(e, counts);
        const Cyclotomic eta2 = eta.galois(outside);
        if (eta == eta2) continue;
        const auto t = (eta + eta2).integer_value();
        const auto n = (eta * eta2).integer_value();
        if (!t || !n) diag_failure("Gaussian period does not have a rational quadratic minimal polynomial");
        const std::int64_t disc = *t * *t - 4 * *n;
        f.d = squarefree_part(static_cast<std::uint64_t>(disc < 0 ? -disc : disc));
        f.kind = disc < 0 ? FieldDescriptor::Kind::ImaginaryQuadratic : FieldDescriptor::Kind::RealQuadratic;
        const bool real = stab.contains_tau();
        if (real != (disc > 0)) diag_failure("discriminant sign disagrees with complex conjugation");
        return f;
    }
    diag_failure("no irrational Gaussian period");
}

} // namespace

UnitSubgroup galois_stabilizer(const CharacterTable& t, std::size_t row)
{
    return stabilizer_of(t.classes(), t.rows.at(row), t.conductor);
}

FieldDescriptor field_of_values(const ClassData& cd, const Character& chi, std::uint64_t e)
{
    return descriptor_from_stabilizer(stabilizer_of(cd, chi, e));
}

FieldDescriptor field_of_character(const CharacterTable& t, std::size_t row)
{
    return descriptor_from_stabilizer(galois_stabilizer(t, row));
}

bool is_cut_by_characters(const CharacterTable& t)
{
    return std::all_of(t.fields.begin(), t.fields.end(), [](const FieldDescriptor& f) {
        return f.kind == FieldDescriptor::Kind::Rational || f.kind == FieldDescriptor::Kind::ImaginaryQuadratic;
    });
}

bool is_cut_by_characters(const PermutationGroup& g) { return is_cut_by_characters(character_table(g)); }

std::vector<std::vector<std::size_t>> galois_orbits(const CharacterTable& t)
{
    const ClassData& cd = t.classes();
    const std::size_t n = t.rows.size();
    std::map<Character, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index.emplace(t.rows[i], i);
    std::vector<int> orbit_of(n, -1);
    std::vector<std::vector<std::size_t>> orbits;
    const auto units = units_mod(t.conductor);
    for (std::size_t i = 0; i < n; ++i) {
        if (orbit_of[i] >= 0) continue;
        std::set<std::size_t> members;
        for (auto k : units) {
            const auto& pm = cd.power_map(t.conductor > 1 ? k : 1);
            Character image(t.rows[i].size());
            for (std::size_t c = 0; c < image.size(); ++c) image[c] = t.rows[i][pm[c]];
            members.insert(index.at(image));
        }
        for (auto m : members) orbit_of[m] = static_cast<int>(orbits.size());
        orbits.emplace_back(members.begin(), members.end());
    }
    return orbits;
}

std::vector<FieldDescriptor> wedderburn_centers(const CharacterTable& t)
{
    std::vector<FieldDescriptor> out;
    for (const auto& orbit : galois_orbits(t)) out.push_back(t.fields.at(orbit.front()));
    return out;
}

BrauerCharacter brauer_character_of_module(const ModuleAction& act)
{
    const PermutationGroup& k = act.K;
    const ClassData& cd = k.classes();
    if (cd.group_order() % act.p == 0) {
        throw Error(ErrorKind::PrimeDividesComplementOrder,
                    "p=" + std::to_string(act.p) + " divides |K|=" + std::to_string(cd.group_order()));
    }
    const std::uint64_t e = cd.exponent();
    const unsigned t = e > 1 ? static_cast<unsigned>(multiplicative_order(act.p % e, e)) : 1;
    ExtensionField field(act.p, t);
    const std::uint64_t n = field.size() - 1;
    const auto mats = element_matrices(act);
    BrauerCharacter out;
    out.conductor = n;
    for (std::size_t c = 0; c < cd.class_count(); ++c) {
        const FpMatrix& a = mats[cd.rep(c)];
        const std::uint64_t o = cd.rep_order(c);
        std::vector<std::int64_t> counts(n, 0);
        std::size_t total = 0;
        for (std::uint64_t x = 0; x < n; x += n / o) {
            const auto gamma = field.exp(x);
            std::vector<std::vector<ExtensionField::Element>> m(act.d, std::vector<ExtensionField::Element>(act.d));
            for (std::size_t i = 0; i < act.d; ++i) {
                for (std::size_t j = 0; j < act.d; ++j) {
                    m[i][j] = field.from_prime(a.at(i, j));
                    if (i == j) m[i][j] = field.sub(m[i][j], gamma);
                }
            }
            const std::size_t mult = act.d - field.rank(std::move(m));
            counts[x] += static_cast<std::int64_t>(mult * act.s);
            total += mult;
        }
        if (total != act.d) diag_failure("matrix of a p-regular element is not diagonalizable over F_{p^t}");
        out.values.push_back(Cyclotomic::from_exponent_counts(n, counts));
    }
    return out;
}

bool has_k_eigenvalue_property(const ModuleAction& act, std::uint64_t k)
{
    if (k == 0 || (act.p - 1) % k != 0) {
        throw Error(ErrorKind::KDoesNotDivide, "k=" + std::to_string(k) + " does not divide p-1=" + std::to_string(act.p - 1));
    }
    const auto mats = element_matrices(act);
    const std::size_t dim = act.d * act.s;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < dim; ++i) count *= act.p;
    std::vector<char> candidate(act.p, 0);
    for (std::uint64_t l = 1; l < act.p; ++l) candidate[l] = multiplicative_order(l, act.p) == k;
    for (std::uint64_t code = 1; code < count; ++code) {
        const auto v = decode_vector(code, dim, act.p);
        std::vector<char> reached(act.p, 0);
        for (const auto& m : mats) {
            std::vector<std::uint64_t> w(dim);
            for (std::size_t b = 0; b < act.s; ++b) {
                auto block = m.apply(std::span<const std::uint64_t>(v.data() + b * act.d, act.d));
                std::copy(block.begin(), block.end(), w.begin() + static_cast<std::ptrdiff_t>(b * act.d));
            }
            // w = lambda v for the lambda fixed by the first nonzero coordinate.
            std::size_t first = 0;
            while (v[first] == 0) ++first;
            const std::uint64_t lambda = mod_mul(w[first], mod_inverse(v[first], act.p), act.p);
            bool scalar = lambda != 0;
            for (std::size_t i = 0; i < dim && scalar; ++i) scalar = w[i] == mod_mul(lambda, v[i], act.p);
            if (scalar) reached[lambda] = 1;
        }
        bool any = false;
        for (std::uint64_t l = 1; l < act.p; ++l) {
            candidate[l] = candidate[l] && reached[l];
            any = any || candidate[l];
        }
        if (!any) return false;
    }
    return true;
}

} // namespace cutkit
