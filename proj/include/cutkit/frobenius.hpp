#pragma once

#include "cutkit/group.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cutkit {

struct FrobeniusWitness {
    bool centralizer_condition = false;
    bool coprime = false;
    bool complement_divides = false;
    bool trivial_intersection = false;
};

struct FrobeniusStructure {
    PermutationGroup group;
    Subgroup kernel;
    Subgroup complement;
    FrobeniusWitness witness;
};

/// Smallest normal subgroup N with C_G(f) <= N for all 1 != f in N, together
/// with a complement. nullopt when G is not a Frobenius group.
std::optional<FrobeniusStructure> detect_frobenius(const PermutationGroup& g);

/// Each invariant of a Frobenius structure, rechecked from scratch.
bool check_frobenius_structure(const FrobeniusStructure& s);

struct SylowCheck {
    std::uint64_t prime = 0;
    std::uint64_t order = 1;
    bool cyclic = false;
    bool quaternion = false;
    bool pass = false;
};

/// Sylow p-subgroups cyclic of order <= p (p odd), cyclic of order <= 4 or
/// quaternion of order 8 (p = 2).
std::vector<SylowCheck> complement_sylow_check(const PermutationGroup& k);
bool complement_sylow_ok(const PermutationGroup& k);

bool unique_involution(const PermutationGroup& k);

struct FrobeniusSubgroupWitness {
    bool found = false;
    std::size_t subgroup_order = 0;
    std::size_t kernel_order = 0;
};
/// Scans all subgroups (the group itself included). Throws
/// OrderLimitExceeded above 200 elements.
FrobeniusSubgroupWitness has_frobenius_subgroup(const PermutationGroup& k);

bool is_camina(const PermutationGroup& g);

struct KernelCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct KernelStructureReport {
    std::uint64_t prime = 0;
    std::vector<KernelCheck> checks;
    /// Whether aut maps every cyclic subgroup onto itself, as opposed to
    /// onto a conjugate of itself (informational for p = 7).
    std::optional<bool> strict_cyclic_fixing;
    bool pass() const;
};

/// Checks on a 2-group or 7-group kernel F with an automorphism aut:
/// order and exponent conditions, F' <= Z(F), exponents of F/F' and F', aut
/// of order 3 and fixed point free, and for p = 7 that aut sends every
/// cyclic subgroup to a conjugate of itself. Throws WrongPrime.
KernelStructureReport theorem2_kernel_structure(const PermutationGroup& f, const Homomorphism& aut);

} // namespace cutkit
