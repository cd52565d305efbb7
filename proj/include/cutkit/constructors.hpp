#pragma once

#include "cutkit/finite_field.hpp"
#include "cutkit/group.hpp"
#include "cutkit/pc.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cutkit {

// ---- presentations and named groups --------------------------------------

PcPresentation cyclic_presentation(std::uint32_t n);
/// Generators a, b, c with a^2 = b^2 = c, b^a = bc.
PcPresentation q8_presentation();
/// Generators t, c with t^4 = c^3 = 1, c^t = c^2.
PcPresentation c3c4_presentation();
/// Generators x, y, z of order 7 with y^x = yz, z central.
PcPresentation heis7_presentation();
/// Generators u, v, s, t of orders 2, 2, 4, 4 (the exponent-4 group X).
PcPresentation xgroup_presentation();
/// Generators s, t, u, v, a = s^2, b = u^2, all of relative order 2.
PcPresentation ygroup_presentation();

/// cyclic(n), elemab(p,d), q8, sl23, sl25, c3c4, q8xc3, heis7, xgroup,
/// ygroup. Throws UnknownName / InvalidParameters.
PermutationGroup named_group(std::string_view name, std::span<const std::uint64_t> params = {});

/// C_n x| C_m with the generator of C_m acting as x -> x^r. Extra regular
/// C_m points are added when the action has order below m.
PermutationGroup metacyclic(std::uint64_t n, std::uint64_t m, std::uint64_t r);

// ---- module semidirect products ------------------------------------------

/// K acting on V = F_p^d by one matrix per generator of K (row vectors,
/// v -> vM); the kernel is s copies of V with the same action on each.
struct ModuleAction {
    std::uint64_t p = 2;
    std::size_t d = 1;
    PermutationGroup K;
    std::vector<FpMatrix> matrices;
    std::size_t s = 1;
};

/// Throws InvalidAction unless the matrices are invertible and define a
/// homomorphism on the Cayley graph of K.
void validate_action(const ModuleAction& act);
/// Matrix of every element of K, indexed like K's element table.
std::vector<FpMatrix> element_matrices(const ModuleAction& act);
bool is_faithful(const ModuleAction& act);
/// No nonidentity element of K fixes a nonzero vector.
bool is_fixed_point_free(const ModuleAction& act);

PermutationGroup module_semidirect(const ModuleAction& act, std::string descriptor = {});

/// First matrix action (generator images in lexicographic GL(d,p) order) that
/// satisfies K's relations, optionally fixed point free. Throws NoActionFound.
ModuleAction rep_search(const PermutationGroup& K, std::uint64_t p, std::size_t d, bool require_fpf);

// ---- Frobenius families --------------------------------------------------

struct FamilyDescriptor {
    std::string label;
    std::vector<std::uint64_t> params;
};

/// Module data behind a family with elementary abelian kernel, if any.
std::optional<ModuleAction> family_module(const FamilyDescriptor& fd);
/// Throws InvalidParameters / UnknownName.
PermutationGroup family(const FamilyDescriptor& fd);
std::string family_descriptor_string(const FamilyDescriptor& fd);

/// C_5^4 x| (Q_8 x C_3) with the 4-dimensional F_5 module obtained from the
/// 2-dimensional Q_8 module tensored with the companion matrix of x^2+x+1.
ModuleAction q8xc3_f5_module();

// ---- automorphisms -------------------------------------------------------

/// Verifies images (one per generator of g) as a bijective endomorphism.
/// Throws NotAHomomorphism / NotBijective.
Homomorphism check_automorphism(const PermutationGroup& g, const std::vector<Perm>& images);
/// The automorphism as a permutation of element indices.
std::vector<ElementIndex> automorphism_table(const Homomorphism& aut);
std::uint64_t automorphism_order(const Homomorphism& aut);
bool is_fpf(const Homomorphism& aut);
/// x^aut in <x> for every x.
bool fixes_every_cyclic(const Homomorphism& aut);
/// x^aut is conjugate in the group to an element of <x>, for every x.
bool fixes_every_cyclic_up_to_conjugacy(const Homomorphism& aut);
/// Conjugation by g as an automorphism of group.
Homomorphism inner_automorphism(const PermutationGroup& group, const Perm& g);

enum class CyclicFilter { None, Strict, UpToConjugacy };

/// First fixed point free automorphism of order 3 in a deterministic
/// backtracking order over generator images, optionally restricted by one of
/// the two cyclic-subgroup conditions above. Throws NoneFound.
Homomorphism fpf_search_order3(const PermutationGroup& f, CyclicFilter filter = CyclicFilter::None);

/// F x| <a> where a^-1 f a = aut(f) and a has order m, acting on the |F| * m
/// elements f a^i by right multiplication. Throws AutomorphismOrderMismatch.
PermutationGroup semidirect_by_automorphism(const PermutationGroup& f, const Homomorphism& aut, std::uint64_t m,
                                            std::string descriptor = {});

/// The isomorphism W_1^d x| C_6 -> W_2^d x| C_6 (t acting by 3 resp. 5 on
/// F_7) that fixes the kernel and sends t to t^5.
Homomorphism witness_isomorphism_w1_w2(std::size_t d);
Homomorphism witness_isomorphism_w2_w1(std::size_t d);

} // namespace cutkit
