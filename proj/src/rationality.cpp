#include "cutkit/rationality.hpp"

#include "cutkit/error.hpp"
#include "cutkit/numtheory.hpp"

#include <algorithm>
#include <set>

namespace cutkit {

bool UnitSubgroup::contains(std::uint64_t k) const
{
    return std::binary_search(elements.begin(), elements.end(), modulus > 1 ? k % modulus : 0);
}

std::uint64_t UnitSubgroup::index() const { return euler_phi(modulus) / elements.size(); }

bool UnitSubgroup::contains_tau() const { return contains(tau(modulus)); }

UnitSubgroup unit_group(std::uint64_t n)
{
    if (n == 0) throw Error(ErrorKind::InvalidParameters, "unit group mod 0");
    return {n, units_mod(n)};
}

std::uint64_t tau(std::uint64_t n) { return n - 1; }

UnitSubgroup generated_units(std::uint64_t n, std::span<const std::uint64_t> gens)
{
    if (n <= 1) return unit_group(n);
    std::set<std::uint64_t> seen{1};
    std::vector<std::uint64_t> frontier{1};
    while (!frontier.empty()) {
        std::vector<std::uint64_t> next;
        for (auto a : frontier) {
            for (auto g : gens) {
                std::uint64_t b = mod_mul(a, g % n, n);
                if (seen.insert(b).second) next.push_back(b);
            }
        }
        frontier = std::move(next);
    }
    return {n, {seen.begin(), seen.end()}};
}

UnitSubgroup product(const UnitSubgroup& a, const UnitSubgroup& b)
{
    if (a.modulus != b.modulus) throw Error(ErrorKind::InvalidParameters, "unit subgroups with different moduli");
    if (a.modulus <= 1) return a;
    std::set<std::uint64_t> out;
    for (auto x : a.elements) {
        for (auto y : b.elements) out.insert(mod_mul(x, y, a.modulus));
    }
    return {a.modulus, {out.begin(), out.end()}};
}

std::uint64_t lift_coprime(std::uint64_t j, std::uint64_t m, std::uint64_t N)
{
    if (m == 0 || N == 0 || gcd(j, m) != 1) {
        throw Error(ErrorKind::NotCoprimeInput, "lift_coprime needs gcd(j, m) = 1");
    }
    // Least k = j mod m avoiding the primes of N outside m. Such k exists by
    // the Chinese remainder theorem below m * prod(those primes).
    std::uint64_t k = j % m;
    if (k == 0) k = m;
    while (gcd(k, N) != 1) k += m;
    return k;
}

UnitSubgroup bg_subgroup(const PermutationGroup& g, ElementIndex x)
{
    const ElementTable& t = g.materialize();
    const std::uint64_t n = t.order_of(x);
    if (n <= 2) return unit_group(n);
    std::vector<std::uint64_t> exponent_of(t.size(), 0);
    ElementIndex p = x;
    for (std::uint64_t k = 1; k < n; ++k, p = t.multiply(p, x)) exponent_of[p] = k;
    std::set<std::uint64_t> ks;
    for (ElementIndex h = 0; h < t.size(); ++h) {
        std::uint64_t k = exponent_of[t.conjugate(x, h)];
        if (k != 0) ks.insert(k);
    }
    return {n, {ks.begin(), ks.end()}};
}

UnitSubgroup bg_subgroup(const PermutationGroup& g, const Perm& x)
{
    return bg_subgroup(g, g.materialize().index_of(x));
}

bool is_isr_element(const PermutationGroup& g, ElementIndex x)
{
    UnitSubgroup b = bg_subgroup(g, x);
    const std::uint64_t n = b.modulus;
    const std::uint64_t t = tau(n);
    return product(b, generated_units(n, std::span<const std::uint64_t>(&t, 1))).is_full();
}

ElementFlags element_type(const ClassData& cd, std::size_t c)
{
    ElementFlags f;
    f.order = cd.rep_order(c);
    const auto units = units_mod(f.order);
    std::set<std::size_t> orbit;
    std::size_t fixed = 0;
    for (auto j : units) {
        std::size_t d = cd.power_class(c, j);
        orbit.insert(d);
        if (d == c) ++fixed;
    }
    const std::size_t inv = cd.inverse_class(c);
    f.rational = orbit.size() == 1;
    f.inverse_semi_rational = std::all_of(orbit.begin(), orbit.end(), [&](std::size_t d) { return d == c || d == inv; });
    for (auto m : units) {
        std::size_t cm = cd.power_class(c, m);
        if (std::all_of(orbit.begin(), orbit.end(), [&](std::size_t d) { return d == c || d == cm; })) {
            f.semi_rational = true;
            f.semi_rational_witness = m;
            break;
        }
    }
    f.b_index = units.size() / fixed;
    f.b_contains_minus_one = f.order <= 2 || inv == c;
    return f;
}

CutResult cut_by_classes(const ClassData& cd)
{
    const std::uint64_t e = cd.exponent();
    for (auto k : units_mod(e)) {
        const auto& pm = cd.power_map(e > 1 ? k : 1);
        for (std::size_t c = 0; c < cd.class_count(); ++c) {
            if (pm[c] != c && pm[c] != cd.inverse_class(c)) return {false, CutWitness{c, k}};
        }
    }
    return {};
}

bool is_cut_by_classes(const PermutationGroup& g) { return cut_by_classes(g.classes()).cut; }

RationalityReport rationality_report(const ClassData& cd)
{
    RationalityReport r;
    for (std::size_t c = 0; c < cd.class_count(); ++c) {
        auto f = element_type(cd, c);
        r.rational_group = r.rational_group && f.rational;
        r.semi_rational_group = r.semi_rational_group && f.semi_rational;
        r.classes.push_back(f);
    }
    auto cut = cut_by_classes(cd);
    r.cut_group = cut.cut;
    r.cut_witness = cut.witness;
    return r;
}

UnitSubgroup zg_subgroup(const ModuleAction& act)
{
    std::set<std::uint64_t> scalars;
    for (const auto& m : element_matrices(act)) {
        if (auto s = m.scalar_value()) scalars.insert(*s);
    }
    return {act.p, {scalars.begin(), scalars.end()}};
}

bool copies_criterion(const ModuleAction& act)
{
    if (act.p == 2) throw Error(ErrorKind::EvenPrime, "the copies criterion needs an odd prime");
    const std::uint64_t t = tau(act.p);
    return product(zg_subgroup(act), generated_units(act.p, std::span<const std::uint64_t>(&t, 1))).is_full();
}

ProductCutResult product_cut_check(std::span<const ClassData* const> factors)
{
    ProductCutResult r;
    std::vector<std::size_t> radix;
    for (const ClassData* cd : factors) {
        r.exponent = lcm(r.exponent, cd->exponent());
        radix.push_back(cd->class_count());
        r.tuples *= cd->class_count();
    }
    const auto units = units_mod(r.exponent);
    std::vector<std::size_t> tuple(factors.size(), 0);
    for (std::size_t code = 0; code < r.tuples; ++code) {
        std::size_t rest = code;
        for (std::size_t i = factors.size(); i-- > 0;) {
            tuple[i] = rest % radix[i];
            rest /= radix[i];
        }
        for (auto k : units) {
            bool same = true, inverse = true;
            for (std::size_t i = 0; i < factors.size(); ++i) {
                const ClassData& cd = *factors[i];
                const std::uint64_t ki = cd.exponent() > 1 ? k % cd.exponent() : 1;
                std::size_t image = cd.power_map(ki)[tuple[i]];
                same = same && image == tuple[i];
                inverse = inverse && image == cd.inverse_class(tuple[i]);
            }
            if (!same && !inverse) {
                r.cut = false;
                r.witness = ProductCutWitness{tuple, k};
                return r;
            }
        }
    }
    return r;
}

bool p1mod4_shortcut_check(const ClassData& cd)
{
    for (std::size_t c = 1; c < cd.class_count(); ++c) {
        auto primes = prime_divisors(cd.rep_order(c));
        if (primes.size() != 1 || primes[0] % 4 != 1) continue;
        auto f = element_type(cd, c);
        if (f.inverse_semi_rational != f.rational) return false;
    }
    return true;
}

} // namespace cutkit
