#pragma once

#include "cutkit/constructors.hpp"
#include "cutkit/group.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace cutkit {

/// Parsed group descriptor.
///
///   descriptor := atom | dp(descriptor, descriptor)
///   atom := cyclic(n) | elemab(p,d) | q8 | sl23 | sl25 | c3c4 | q8xc3
///         | heis7 | xgroup | ygroup | fam(LABEL[,params]) | sd(p,d,DESC,s)
///         | perm(degree; cycles; ...) | meta(n,m,r)
///         | mod(p,d,DESC,s; entries; ...)
///
/// sd takes the first fixed point free representation of DESC of dimension d
/// over F_p; mod gives one row-major d x d matrix per generator of DESC.
/// Separators inside argument lists may be commas or whitespace.
struct Descriptor {
    enum class Kind { Named, Family, Sd, Perm, Meta, Mod, Dp };
    Kind kind = Kind::Named;
    std::string name;
    std::vector<std::uint64_t> params;
    std::vector<Descriptor> children;
    /// perm: generators as lists of cycles.
    std::size_t degree = 0;
    std::vector<std::vector<std::vector<std::uint32_t>>> cycles;
    /// mod: row-major entries per generator, reduced mod p.
    std::vector<std::vector<std::uint64_t>> matrices;

    bool operator==(const Descriptor&) const = default;
};

/// Throws ParseError (with the character offset) or UnknownName.
Descriptor parse_descriptor(std::string_view text);
/// Canonical text: no whitespace, comma separators, parameters normalized.
std::string print_descriptor(const Descriptor& d);
std::string canonical_descriptor(std::string_view text);

/// Builds the group; its descriptor() is the canonical text. Materialization
/// is left to the caller except where a construction needs it.
PermutationGroup build_group(const Descriptor& d);
PermutationGroup build_group(std::string_view text);

/// Canonical mod(...) text for an explicit module action; K is named by its
/// own descriptor.
std::string module_descriptor(const ModuleAction& act);

} // namespace cutkit
