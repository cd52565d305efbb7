#include "cutkit/pc.hpp"

#include "cutkit/error.hpp"

namespace cutkit {

std::uint64_t PcPresentation::expected_order() const
{
    std::uint64_t n = 1;
    for (auto e : rel_orders) n *= e;
    return n;
}

namespace {

void multiply_word(const PcPresentation& pres, PcWord& x, const PcWord& w)
{
    for (std::size_t j = 0; j < w.size(); ++j) {
        for (std::uint32_t r = 0; r < w[j]; ++r) x = pc_multiply_generator(pres, std::move(x), j);
    }
}

const PcWord* lookup(const std::map<std::pair<std::size_t, std::size_t>, PcWord>& rules, std::size_t i, std::size_t j)
{
    auto it = rules.find({i, j});
    return it == rules.end() ? nullptr : &it->second;
}

} // namespace

PcWord pc_multiply_generator(const PcPresentation& pres, PcWord x, std::size_t k)
{
    const std::size_t n = pres.size();
    // x = P g_k^{a_k} T, so x g_k = P g_k^{a_k + 1} T^{g_k}.
    PcWord tail(x.begin() + static_cast<std::ptrdiff_t>(k) + 1, x.end());
    for (std::size_t j = k + 1; j < n; ++j) x[j] = 0;
    if (x[k] + 1 < pres.rel_orders[k]) {
        ++x[k];
    } else {
        x[k] = 0;
        auto it = pres.power_rules.find(k);
        if (it != pres.power_rules.end()) multiply_word(pres, x, it->second);
    }
    for (std::size_t j = k + 1; j < n; ++j) {
        std::uint32_t a = tail[j - k - 1];
        if (a == 0) continue;
        const PcWord* conj = lookup(pres.conj_rules, k, j);
        for (std::uint32_t r = 0; r < a; ++r) {
            if (conj) {
                multiply_word(pres, x, *conj);
            } else {
                x = pc_multiply_generator(pres, std::move(x), j);
            }
        }
    }
    return x;
}

PermutationGroup pc_group(const PcPresentation& pres, std::string descriptor)
{
    const std::size_t n = pres.size();
    for (auto e : pres.rel_orders) {
        if (e < 2) throw Error(ErrorKind::InconsistentPresentation, "relative orders must be at least 2");
    }
    auto check_word = [&](const PcWord& w) {
        if (w.size() != n) throw Error(ErrorKind::InconsistentPresentation, "rule word has wrong length");
        for (std::size_t i = 0; i < n; ++i) {
            if (w[i] >= pres.rel_orders[i]) throw Error(ErrorKind::InconsistentPresentation, "rule word not in normal form");
        }
    };
    for (const auto& [i, w] : pres.power_rules) {
        check_word(w);
        for (std::size_t j = 0; j <= i; ++j) {
            if (w[j] != 0) throw Error(ErrorKind::InconsistentPresentation, "power rule uses an earlier generator");
        }
    }
    for (const auto& [ij, w] : pres.conj_rules) {
        check_word(w);
        if (ij.first >= ij.second) throw Error(ErrorKind::InconsistentPresentation, "conjugation rule needs i < j");
        for (std::size_t j = 0; j <= ij.first; ++j) {
            if (w[j] != 0) throw Error(ErrorKind::InconsistentPresentation, "conjugation rule uses an earlier generator");
        }
    }

    const std::uint64_t order = pres.expected_order();
    auto encode = [&](const PcWord& w) {
        std::uint64_t code = 0;
        for (std::size_t i = 0; i < n; ++i) code = code * pres.rel_orders[i] + w[i];
        return static_cast<Point>(code);
    };
    auto decode = [&](std::uint64_t code) {
        PcWord w(n);
        for (std::size_t i = n; i-- > 0;) {
            w[i] = static_cast<std::uint32_t>(code % pres.rel_orders[i]);
            code /= pres.rel_orders[i];
        }
        return w;
    };

    std::vector<Perm> gens;
    try {
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<Point> images(order);
            for (std::uint64_t c = 0; c < order; ++c) images[c] = encode(pc_multiply_generator(pres, decode(c), k));
            gens.emplace_back(std::move(images));
        }
    } catch (const Error& e) {
        throw Error(ErrorKind::InconsistentPresentation, std::string("collection is not a bijection: ") + e.what());
    }

    auto word_perm = [&](const PcWord& w) {
        Perm p = Perm::identity(order);
        for (std::size_t j = 0; j < n; ++j) p = p * gens[j].pow(w[j]);
        return p;
    };
    const PcWord one(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        auto it = pres.power_rules.find(i);
        if (gens[i].pow(pres.rel_orders[i]) != word_perm(it == pres.power_rules.end() ? one : it->second)) {
            throw Error(ErrorKind::InconsistentPresentation, "power relation fails for generator " + std::to_string(i));
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            const PcWord* conj = lookup(pres.conj_rules, i, j);
            Perm expected = conj ? word_perm(*conj) : gens[j];
            if (gens[i].inverse() * gens[j] * gens[i] != expected) {
                throw Error(ErrorKind::InconsistentPresentation,
                            "conjugation relation fails for " + std::to_string(i) + "," + std::to_string(j));
            }
        }
    }
    PermutationGroup g(order, std::move(gens), std::move(descriptor));
    try {
        if (g.materialize(order).size() == order) return g;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::OrderLimitExceeded) throw;
    }
    throw Error(ErrorKind::InconsistentPresentation, "group order differs from product of relative orders");
}

} // namespace cutkit
