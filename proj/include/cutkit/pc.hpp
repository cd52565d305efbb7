#pragma once

#include "cutkit/group.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cutkit {

/// Exponent vector g_1^{a_1} ... g_n^{a_n} with 0 <= a_i < e_i.
using PcWord = std::vector<std::uint32_t>;

/// Polycyclic presentation: g_i^{e_i} = power_rules[i] and
/// g_j^{g_i} = conj_rules[{i, j}] for i < j. Missing conjugation rules mean
/// g_i and g_j commute; a missing power rule means g_i^{e_i} = 1.
struct PcPresentation {
    std::vector<std::uint32_t> rel_orders;
    std::map<std::size_t, PcWord> power_rules;
    std::map<std::pair<std::size_t, std::size_t>, PcWord> conj_rules;

    std::size_t size() const { return rel_orders.size(); }
    std::uint64_t expected_order() const;
};

/// Regular right representation on normal forms, with the relations and the
/// order prod e_i checked afterwards. Throws InconsistentPresentation.
PermutationGroup pc_group(const PcPresentation& pres, std::string descriptor = {});

/// Normal-form product word * g_k, by collection from the left.
PcWord pc_multiply_generator(const PcPresentation& pres, PcWord word, std::size_t k);

} // namespace cutkit
