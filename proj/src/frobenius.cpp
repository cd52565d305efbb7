#include "cutkit/frobenius.hpp"

#include "cutkit/constructors.hpp"
#include "cutkit/error.hpp"
#include "cutkit/numtheory.hpp"

#include <algorithm>

namespace cutkit {

namespace {

// C_G(f) <= N for every 1 != f in N. With N normal it is enough to compare
// |C_G(f)| = |G| / |f^G| with |C_N(f)| for class representatives.
bool centralizers_inside(const PermutationGroup& g, const Subgroup& n)
{
    const ClassData& cd = g.classes();
    const ElementTable& t = cd.table();
    const std::size_t order = cd.group_order();
    for (std::size_t c = 1; c < cd.class_count(); ++c) {
        const ElementIndex f = cd.rep(c);
        if (!n.contains(f)) continue;
        const std::size_t cg = order / cd.size(c);
        if (cg > n.order()) return false;
        std::size_t cn = 0;
        for (ElementIndex x : n.elements()) cn += t.conjugate(f, x) == f;
        if (cn != cg) return false;
    }
    return true;
}

bool meets_trivially(const Subgroup& h, const Subgroup& n)
{
    for (ElementIndex x : h.elements()) {
        if (x != 0 && n.contains(x)) return false;
    }
    return true;
}

// Depth-first growth of a subgroup avoiding n until it has order m.
std::optional<Subgroup> grow_complement(const PermutationGroup& g, const Subgroup& n, std::size_t m,
                                        const std::vector<ElementIndex>& candidates, std::vector<ElementIndex>& gens,
                                        const Subgroup& current, std::size_t& budget)
{
    if (current.order() == m) return current;
    for (ElementIndex y : candidates) {
        if (current.contains(y)) continue;
        if (budget == 0) return std::nullopt;
        --budget;
        gens.push_back(y);
        auto next = generate_subgroup_bounded(g, gens, m);
        if (next && m % next->order() == 0 && meets_trivially(*next, n)) {
            if (auto found = grow_complement(g, n, m, candidates, gens, *next, budget)) return found;
        }
        gens.pop_back();
    }
    return std::nullopt;
}

std::optional<Subgroup> find_complement(const PermutationGroup& g, const Subgroup& n)
{
    const ElementTable& t = g.materialize();
    const std::size_t m = t.size() / n.order();
    std::vector<ElementIndex> candidates;
    for (ElementIndex x = 1; x < t.size(); ++x) {
        if (!n.contains(x) && m % t.order_of(x) == 0) candidates.push_back(x);
    }
    std::vector<ElementIndex> gens;
    std::size_t budget = 100000;
    return grow_complement(g, n, m, candidates, gens, trivial_subgroup(g), budget);
}

FrobeniusWitness witness_for(const PermutationGroup& g, const Subgroup& n, const Subgroup& h)
{
    FrobeniusWitness w;
    w.centralizer_condition = centralizers_inside(g, n);
    w.coprime = gcd(n.order(), h.order()) == 1;
    w.complement_divides = (n.order() - 1) % h.order() == 0;
    w.trivial_intersection = meets_trivially(h, n);
    return w;
}

bool all_of(const FrobeniusWitness& w)
{
    return w.centralizer_condition && w.coprime && w.complement_divides && w.trivial_intersection;
}

std::uint64_t exponent_modulo(const Subgroup& h, const Subgroup& d)
{
    const ElementTable& t = h.parent().table();
    std::uint64_t e = 1;
    for (ElementIndex x : h.elements()) {
        std::uint64_t k = 1;
        for (ElementIndex p = x; !d.contains(p); p = t.multiply(p, x)) ++k;
        e = lcm(e, k);
    }
    return e;
}

std::uint64_t subgroup_exponent(const Subgroup& h)
{
    const ElementTable& t = h.parent().table();
    std::uint64_t e = 1;
    for (ElementIndex x : h.elements()) e = lcm(e, t.order_of(x));
    return e;
}

} // namespace

std::optional<FrobeniusStructure> detect_frobenius(const PermutationGroup& g)
{
    const std::size_t order = g.order();
    if (order < 6 || is_abelian(g)) return std::nullopt;
    for (const Subgroup& n : normal_subgroups(g)) {
        if (n.order() == 1 || n.order() == order) continue;
        if (!centralizers_inside(g, n)) continue;
        auto h = find_complement(g, n);
        if (!h) continue;
        FrobeniusStructure s{g, n, *h, witness_for(g, n, *h)};
        if (all_of(s.witness)) return s;
    }
    return std::nullopt;
}

bool check_frobenius_structure(const FrobeniusStructure& s)
{
    const PermutationGroup& g = s.group;
    const std::size_t order = g.order();
    if (s.kernel.order() <= 1 || s.kernel.order() >= order) return false;
    if (!is_normal(g, s.kernel)) return false;
    if (s.kernel.order() * s.complement.order() != order) return false;
    return all_of(witness_for(g, s.kernel, s.complement));
}

std::vector<SylowCheck> complement_sylow_check(const PermutationGroup& k)
{
    std::vector<SylowCheck> out;
    const ElementTable& t = k.materialize();
    for (auto p : prime_divisors(t.size())) {
        SylowCheck c;
        c.prime = p;
        Subgroup s = sylow_subgroup(k, p);
        c.order = s.order();
        std::size_t involutions = 0;
        for (ElementIndex x : s.elements()) {
            if (t.order_of(x) == c.order) c.cyclic = true;
            if (t.order_of(x) == 2) ++involutions;
        }
        c.quaternion = c.order == 8 && !c.cyclic && involutions == 1;
        if (p == 2) {
            c.pass = (c.cyclic && c.order <= 4) || c.quaternion;
        } else {
            c.pass = c.cyclic && c.order <= p;
        }
        out.push_back(c);
    }
    return out;
}

bool complement_sylow_ok(const PermutationGroup& k)
{
    auto checks = complement_sylow_check(k);
    return std::all_of(checks.begin(), checks.end(), [](const SylowCheck& c) { return c.pass; });
}

bool unique_involution(const PermutationGroup& k)
{
    const ElementTable& t = k.materialize();
    std::size_t count = 0;
    for (ElementIndex x = 0; x < t.size(); ++x) count += t.order_of(x) == 2;
    return count == 1;
}

FrobeniusSubgroupWitness has_frobenius_subgroup(const PermutationGroup& k)
{
    FrobeniusSubgroupWitness w;
    for (const Subgroup& h : subgroup_lattice(k)) {
        if (h.order() < 6) continue;
        if (auto s = detect_frobenius(h.as_group())) {
            w.found = true;
            w.subgroup_order = h.order();
            w.kernel_order = s->kernel.order();
            return w;
        }
    }
    return w;
}

bool is_camina(const PermutationGroup& g)
{
    const ClassData& cd = g.classes();
    const ElementTable& t = cd.table();
    Subgroup d = derived_subgroup(whole_group(g));
    if (d.order() == 1 || d.order() == t.size()) return false;
    for (std::size_t c = 0; c < cd.class_count(); ++c) {
        const ElementIndex x = cd.rep(c);
        if (d.contains(x)) continue;
        if (cd.size(c) != d.order()) return false;
        const ElementIndex xi = t.inverse(x);
        for (ElementIndex y : cd.members(c)) {
            if (!d.contains(t.multiply(xi, y))) return false;
        }
    }
    return true;
}

bool KernelStructureReport::pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const KernelCheck& c) { return c.pass; });
}

KernelStructureReport theorem2_kernel_structure(const PermutationGroup& f, const Homomorphism& aut)
{
    const std::size_t order = f.order();
    auto primes = prime_divisors(order);
    if (primes.size() != 1 || (primes[0] != 2 && primes[0] != 7)) {
        throw Error(ErrorKind::WrongPrime, "kernel order " + std::to_string(order) + " is not a power of 2 or 7");
    }
    KernelStructureReport r;
    const std::uint64_t p = primes[0];
    r.prime = p;
    auto add = [&](std::string name, bool pass, std::string detail) {
        r.checks.push_back({std::move(name), pass, std::move(detail)});
    };
    Subgroup whole = whole_group(f);
    Subgroup d = derived_subgroup(whole);
    Subgroup z = center(f);
    const std::uint64_t exp_f = exponent(f);
    const std::uint64_t exp_ab = exponent_modulo(whole, d);
    const std::uint64_t exp_d = subgroup_exponent(d);
    if (p == 2) {
        std::uint64_t a = 0;
        for (std::size_t n = order; n > 1; n /= 2) ++a;
        add("order_even_power_of_2", a >= 2 && a % 2 == 0, "|F| = 2^" + std::to_string(a));
        add("exponent_divides_4", 4 % exp_f == 0, "exp F = " + std::to_string(exp_f));
        add("abelianization_exponent_divides_4", 4 % exp_ab == 0, "exp F/F' = " + std::to_string(exp_ab));
        add("derived_exponent_divides_4", 4 % exp_d == 0, "exp F' = " + std::to_string(exp_d));
    } else {
        add("exponent_7", exp_f == 7, "exp F = " + std::to_string(exp_f));
        add("abelianization_exponent_7", exp_ab == 7, "exp F/F' = " + std::to_string(exp_ab));
        add("derived_exponent_divides_7", 7 % exp_d == 0, "exp F' = " + std::to_string(exp_d));
    }
    add("derived_central", d.is_subset_of(z),
        "|F'| = " + std::to_string(d.order()) + ", |Z(F)| = " + std::to_string(z.order()));
    const std::uint64_t aut_order = automorphism_order(aut);
    add("automorphism_order_3", aut_order == 3, "order " + std::to_string(aut_order));
    add("automorphism_fixed_point_free", is_fpf(aut), "");
    if (p == 7) {
        add("automorphism_keeps_cyclic_subgroups_up_to_conjugacy", fixes_every_cyclic_up_to_conjugacy(aut), "");
        r.strict_cyclic_fixing = fixes_every_cyclic(aut);
    }
    return r;
}

} // namespace cutkit
