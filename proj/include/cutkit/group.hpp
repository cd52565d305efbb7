#pragma once

#include "cutkit/perm.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cutkit {

using ElementIndex = std::uint32_t;

inline constexpr std::size_t kDefaultMaxOrder = 20000;

/// The materialized element set of a permutation group. Elements are numbered
/// in breadth-first order over generator words (generators in the order they
/// were given), so index 0 is the identity and the numbering is deterministic.
class ElementTable {
public:
    std::size_t size() const { return size_; }
    std::size_t degree() const { return degree_; }
    std::size_t generator_count() const { return gen_count_; }

    std::span<const Point> images(ElementIndex i) const
    {
        return {data_.data() + static_cast<std::size_t>(i) * degree_, degree_};
    }
    Perm element(ElementIndex i) const;

    std::optional<ElementIndex> find(std::span<const Point> images) const;
    std::optional<ElementIndex> find(const Perm& p) const { return find(p.images()); }
    /// Throws ElementNotInGroup.
    ElementIndex index_of(const Perm& p) const;

    ElementIndex identity() const { return 0; }
    ElementIndex multiply(ElementIndex a, ElementIndex b) const;
    ElementIndex inverse(ElementIndex a) const { return inverse_[a]; }
    /// g^-1 x g
    ElementIndex conjugate(ElementIndex x, ElementIndex g) const;
    ElementIndex power(ElementIndex x, std::int64_t k) const;
    /// Right multiplication by the j-th generator (Cayley graph edge).
    ElementIndex times_generator(ElementIndex i, std::size_t j) const { return right_[i * gen_count_ + j]; }
    ElementIndex generator(std::size_t j) const { return times_generator(0, j); }
    std::uint64_t order_of(ElementIndex i) const { return orders_[i]; }

    /// Breadth-first spanning tree: element i = parent(i) * generator(parent_generator(i)).
    ElementIndex parent(ElementIndex i) const { return parent_[i]; }
    std::size_t parent_generator(ElementIndex i) const { return parent_gen_[i]; }

    static std::shared_ptr<const ElementTable> build(std::size_t degree, const std::vector<Perm>& gens,
                                                     std::size_t max_order);

private:
    void insert_slot(ElementIndex i);

    std::size_t degree_ = 0;
    std::size_t size_ = 0;
    std::size_t gen_count_ = 0;
    std::vector<Point> data_;
    std::vector<ElementIndex> right_;
    std::vector<ElementIndex> parent_;
    std::vector<std::uint32_t> parent_gen_;
    std::vector<ElementIndex> inverse_;
    std::vector<std::uint64_t> orders_;
    std::vector<ElementIndex> slots_;
    std::size_t mask_ = 0;
};

class ClassData;

/// A finite group given by generating permutations. Copies share the lazily
/// computed element table and class data; both are computed at most once.
class PermutationGroup {
public:
    PermutationGroup();
    PermutationGroup(std::size_t degree, std::vector<Perm> generators, std::string descriptor = {});

    std::size_t degree() const;
    const std::vector<Perm>& generators() const;

    const std::string& descriptor() const { return descriptor_; }
    void set_descriptor(std::string d) { descriptor_ = std::move(d); }
    /// Free-form metadata such as a claimed small-group id. Never verified.
    const std::map<std::string, std::string>& annotations() const { return annotations_; }
    void annotate(const std::string& key, const std::string& value) { annotations_[key] = value; }

    /// Breadth-first closure of the generators. Throws OrderLimitExceeded when
    /// the group is larger than max_order. Once computed, the table is cached
    /// and returned for any later limit.
    const ElementTable& materialize(std::size_t max_order = kDefaultMaxOrder) const;
    bool is_materialized() const;
    std::size_t order() const { return materialize().size(); }
    const ElementTable& table() const { return materialize(); }

    const ClassData& classes() const;

private:
    struct Shared;
    std::shared_ptr<Shared> shared_;
    std::string descriptor_;
    std::map<std::string, std::string> annotations_;
};

/// Conjugacy classes with power maps. Class representatives are the first
/// element of each class in enumeration order; class 0 is the identity.
class ClassData {
public:
    ClassData(std::shared_ptr<const ElementTable> table);

    const ElementTable& table() const { return *table_; }
    std::size_t group_order() const { return table_->size(); }
    std::size_t class_count() const { return reps_.size(); }

    ElementIndex rep(std::size_t c) const { return reps_[c]; }
    Perm rep_perm(std::size_t c) const { return table_->element(reps_[c]); }
    std::size_t size(std::size_t c) const { return sizes_[c]; }
    const std::vector<std::size_t>& sizes() const { return sizes_; }
    std::uint64_t rep_order(std::size_t c) const { return table_->order_of(reps_[c]); }
    const std::vector<ElementIndex>& members(std::size_t c) const { return members_[c]; }

    std::size_t class_of(ElementIndex i) const { return class_of_[i]; }
    std::size_t class_of(const Perm& p) const { return class_of_[table_->index_of(p)]; }

    std::uint64_t exponent() const { return exponent_; }
    std::size_t inverse_class(std::size_t c) const { return inverse_perm_[c]; }
    const std::vector<std::size_t>& inverse_perm() const { return inverse_perm_; }

    /// Class of rep_c^k for k coprime to the exponent, as a full map over
    /// classes. Memoized per k mod exponent. Throws NotCoprime.
    const std::vector<std::size_t>& power_map(std::uint64_t k) const;
    /// Class of rep_c^k for any k >= 0 (no coprimality requirement).
    std::size_t power_class(std::size_t c, std::uint64_t k) const;

private:
    std::shared_ptr<const ElementTable> table_;
    std::vector<ElementIndex> reps_;
    std::vector<std::size_t> sizes_;
    std::vector<std::vector<ElementIndex>> members_;
    std::vector<std::uint32_t> class_of_;
    std::uint64_t exponent_ = 1;
    std::vector<std::size_t> inverse_perm_;
    struct PowerCache;
    std::shared_ptr<PowerCache> power_cache_;
};

std::size_t power_map_apply(const ClassData& cd, std::uint64_t k, std::size_t c);

/// A subgroup of a materialized group, stored as a sorted list of element
/// indices of the parent plus a generating set.
class Subgroup {
public:
    Subgroup(PermutationGroup parent, std::vector<ElementIndex> elements, std::vector<ElementIndex> generators);

    const PermutationGroup& parent() const { return parent_; }
    std::size_t order() const { return elements_.size(); }
    bool contains(ElementIndex i) const { return member_[i]; }
    bool contains(const Perm& p) const;
    const std::vector<ElementIndex>& elements() const { return elements_; }
    const std::vector<ElementIndex>& generator_indices() const { return generators_; }
    std::vector<Perm> generators() const;
    bool is_trivial() const { return elements_.size() == 1; }

    /// The subgroup as a group in its own right (same degree).
    PermutationGroup as_group(std::string descriptor = {}) const;

    bool operator==(const Subgroup& other) const { return elements_ == other.elements_; }
    bool is_subset_of(const Subgroup& other) const;

private:
    PermutationGroup parent_;
    std::vector<ElementIndex> elements_;
    std::vector<ElementIndex> generators_;
    std::vector<bool> member_;
};

/// A map defined on the generators of source. verify() checks that the
/// generator images extend to a homomorphism by walking the Cayley graph of
/// the materialized source.
class Homomorphism {
public:
    Homomorphism(PermutationGroup source, PermutationGroup target, std::vector<Perm> gen_images);

    const PermutationGroup& source() const { return source_; }
    const PermutationGroup& target() const { return target_; }
    const std::vector<Perm>& gen_images() const { return gen_images_; }
    bool verified() const { return verified_; }

    /// Throws NotAHomomorphism.
    void verify();
    /// Image of source element i; requires verified().
    const Perm& image(ElementIndex i) const { return images_[i]; }
    Perm apply(const Perm& x) const;
    bool is_injective() const;
    bool is_bijective() const;
    /// this followed by next.
    Homomorphism then(const Homomorphism& next) const;

private:
    PermutationGroup source_;
    PermutationGroup target_;
    std::vector<Perm> gen_images_;
    std::vector<Perm> images_;
    bool verified_ = false;
};

// ---- subgroup algorithms -------------------------------------------------

Subgroup trivial_subgroup(const PermutationGroup& g);
Subgroup whole_group(const PermutationGroup& g);
Subgroup generate_subgroup(const PermutationGroup& g, std::span<const ElementIndex> gens);
/// Closure that gives up (returns nullopt) as soon as it exceeds limit elements.
std::optional<Subgroup> generate_subgroup_bounded(const PermutationGroup& g, std::span<const ElementIndex> gens,
                                                  std::size_t limit);
/// Subgroup with the given element set (assumed closed); a small generating
/// set is chosen greedily in index order.
Subgroup subgroup_from_elements(const PermutationGroup& g, std::vector<ElementIndex> elements);

Subgroup cyclic_subgroup(const PermutationGroup& g, const Perm& x);
Subgroup cyclic_subgroup(const PermutationGroup& g, ElementIndex x);
Subgroup centralizer(const PermutationGroup& g, const Perm& x);
Subgroup centralizer(const PermutationGroup& g, ElementIndex x);
Subgroup normalizer(const PermutationGroup& g, const Subgroup& h);
Subgroup center(const PermutationGroup& g);
Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup normal_closure(const PermutationGroup& g, std::span<const ElementIndex> gens);
bool is_normal(const PermutationGroup& g, const Subgroup& h);

/// Commutator subgroup of h (a subgroup of g).
Subgroup derived_subgroup(const Subgroup& h);
std::vector<Subgroup> derived_series(const PermutationGroup& g);
bool is_solvable(const PermutationGroup& g);
bool is_abelian(const PermutationGroup& g);

/// Throws PrimeDoesNotDivideOrder.
Subgroup sylow_subgroup(const PermutationGroup& g, std::uint64_t p);

struct Quotient {
    PermutationGroup group;
    Homomorphism projection;
    std::vector<std::uint32_t> coset_of;
};
/// Action of g on the right cosets of n. Throws NotNormal.
Quotient quotient(const PermutationGroup& g, const Subgroup& n);

PermutationGroup direct_product(const PermutationGroup& a, const PermutationGroup& b);

std::uint64_t exponent(const PermutationGroup& g);
std::vector<std::uint64_t> prime_spectrum(const PermutationGroup& g);

/// Every subgroup, as closure of joins of cyclic subgroups; throws
/// OrderLimitExceeded above 200 elements.
std::vector<Subgroup> subgroup_lattice(const PermutationGroup& g);

/// Normal subgroups obtained as joins of normal closures of classes, sorted
/// by order then element list. Stops after cap subgroups.
std::vector<Subgroup> normal_subgroups(const PermutationGroup& g, std::size_t cap = 4096);

} // namespace cutkit
