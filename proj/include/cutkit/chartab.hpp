#pragma once

#include "cutkit/constructors.hpp"
#include "cutkit/cyclotomic.hpp"
#include "cutkit/group.hpp"
#include "cutkit/rationality.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cutkit {

/// a[i][j][k] = #{(u, v) : u in class i, v in class j, uv = rep_k}.
using ClassMultCoeffs = std::vector<std::vector<std::vector<std::uint64_t>>>;
ClassMultCoeffs class_mult_coeffs(const ClassData& cd);

struct FieldDescriptor {
    enum class Kind { Rational, ImaginaryQuadratic, RealQuadratic, HigherDegree };
    Kind kind = Kind::Rational;
    /// Squarefree d for the quadratic kinds, the degree for HigherDegree.
    std::uint64_t d = 0;
    UnitSubgroup stabilizer;

    std::string to_string() const;
    bool operator==(const FieldDescriptor& o) const { return kind == o.kind && d == o.d; }
};

std::string to_string(FieldDescriptor::Kind kind);

using Character = std::vector<Cyclotomic>;

struct CharacterTable {
    PermutationGroup group;
    /// Conductor of every value: the exponent of the group.
    std::uint64_t conductor = 1;
    /// The prime and the primitive e-th root of unity of F_q used for lifting.
    std::uint64_t prime = 0;
    std::uint64_t root = 0;
    std::vector<Character> rows;
    std::vector<std::uint64_t> degrees;
    std::vector<FieldDescriptor> fields;

    const ClassData& classes() const { return group.classes(); }
};

/// Dixon-Schneider over the least prime q = 1 mod e with q > 2 ceil(sqrt|G|).
/// Rows: trivial character first, then by degree and by value coefficients.
/// Throws NoSuitablePrime, DiagonalizationFailure.
CharacterTable character_table(const PermutationGroup& g);
/// As above with the prime chosen by the caller (q = 1 mod e, q > 2 sqrt|G|).
CharacterTable character_table_with_prime(const PermutationGroup& g, std::uint64_t q);
/// The prime character_table would use.
std::uint64_t dixon_prime(std::uint64_t group_order, std::uint64_t exponent, std::uint64_t after = 0);

/// Throws DiagonalizationFailure with the first failed identity.
void check_orthogonality(const CharacterTable& t);

UnitSubgroup galois_stabilizer(const CharacterTable& t, std::size_t row);
FieldDescriptor field_of_character(const CharacterTable& t, std::size_t row);
/// Field descriptor of a single character of g with values of conductor e.
FieldDescriptor field_of_values(const ClassData& cd, const Character& chi, std::uint64_t e);

bool is_cut_by_characters(const CharacterTable& t);
bool is_cut_by_characters(const PermutationGroup& g);

/// Rows grouped into Galois orbits, in order of first member.
std::vector<std::vector<std::size_t>> galois_orbits(const CharacterTable& t);
/// One field per Galois orbit of rows.
std::vector<FieldDescriptor> wedderburn_centers(const CharacterTable& t);

/// Brauer character of K on V^s over the p-regular classes of K, indexed by
/// class of K. Lifting sends the primitive element of F_{p^t} to
/// zeta_{p^t - 1}. Throws PrimeDividesComplementOrder.
struct BrauerCharacter {
    std::uint64_t conductor = 1;
    Character values;
};
BrauerCharacter brauer_character_of_module(const ModuleAction& act);

/// Some lambda of order k in F_p^x such that every v in V^s has an element of
/// K with v g = lambda v. Throws KDoesNotDivide unless k | p - 1.
bool has_k_eigenvalue_property(const ModuleAction& act, std::uint64_t k);

} // namespace cutkit
