#pragma once

#include "cutkit/constructors.hpp"
#include "cutkit/group.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cutkit {

/// A subgroup of (Z/n)^x, elements sorted ascending.
struct UnitSubgroup {
    std::uint64_t modulus = 1;
    std::vector<std::uint64_t> elements{0};

    std::size_t size() const { return elements.size(); }
    bool contains(std::uint64_t k) const;
    /// [(Z/n)^x : this]
    std::uint64_t index() const;
    bool contains_tau() const;
    bool is_full() const { return index() == 1; }
    bool operator==(const UnitSubgroup&) const = default;
};

/// For n <= 2 the unit group is trivial and is stored as {0} resp. {1}.
UnitSubgroup unit_group(std::uint64_t n);
std::uint64_t tau(std::uint64_t n);
/// Subgroup generated by the given residues.
UnitSubgroup generated_units(std::uint64_t n, std::span<const std::uint64_t> gens);
/// The product set AB of two subgroups with the same modulus.
UnitSubgroup product(const UnitSubgroup& a, const UnitSubgroup& b);

/// k = j mod m with gcd(k, N) = 1. Throws NotCoprimeInput.
std::uint64_t lift_coprime(std::uint64_t j, std::uint64_t m, std::uint64_t N);

/// Residues k with x^g = x^k for some g normalizing <x>, found by scanning G.
UnitSubgroup bg_subgroup(const PermutationGroup& g, ElementIndex x);
UnitSubgroup bg_subgroup(const PermutationGroup& g, const Perm& x);
/// x is inverse semi-rational iff B_G(x)<tau> is all of (Z/o(x))^x.
bool is_isr_element(const PermutationGroup& g, ElementIndex x);

struct ElementFlags {
    std::uint64_t order = 1;
    bool rational = false;
    bool inverse_semi_rational = false;
    bool semi_rational = false;
    /// Least m with orbit contained in {class, class of x^m}.
    std::optional<std::uint64_t> semi_rational_witness;
    std::uint64_t b_index = 1;
    bool b_contains_minus_one = false;
};

/// Flags of a class from the orbit of its representative under coprime
/// powers; b_index is read from the same orbit.
ElementFlags element_type(const ClassData& cd, std::size_t c);

struct CutWitness {
    std::size_t class_index = 0;
    std::uint64_t k = 1;
};

struct CutResult {
    bool cut = true;
    std::optional<CutWitness> witness;
};

/// Every class c and every k in (Z/e)^x: c^k is c or the inverse class.
CutResult cut_by_classes(const ClassData& cd);
bool is_cut_by_classes(const PermutationGroup& g);

struct RationalityReport {
    std::vector<ElementFlags> classes;
    bool rational_group = true;
    bool cut_group = true;
    bool semi_rational_group = true;
    std::optional<CutWitness> cut_witness;
};

RationalityReport rationality_report(const ClassData& cd);

/// Scalars of F_p^x that are images of elements of K, as residues mod p.
UnitSubgroup zg_subgroup(const ModuleAction& act);
/// Z<tau> = (Z/p)^x. Throws EvenPrime for p = 2.
bool copies_criterion(const ModuleAction& act);

struct ProductCutWitness {
    std::vector<std::size_t> classes;
    std::uint64_t k = 1;
};

struct ProductCutResult {
    bool cut = true;
    std::optional<ProductCutWitness> witness;
    std::uint64_t exponent = 1;
    std::size_t tuples = 1;
};

/// Cut decision for the direct product of the given groups from their class
/// data alone, without building the product.
ProductCutResult product_cut_check(std::span<const ClassData* const> factors);

/// For classes of p-elements with p = 1 mod 4: inverse semi-rational iff
/// rational. Returns whether this holds on every such class.
bool p1mod4_shortcut_check(const ClassData& cd);

} // namespace cutkit
