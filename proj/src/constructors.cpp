#include "cutkit/constructors.hpp"

#include "cutkit/error.hpp"
#include "cutkit/numtheory.hpp"

#include <algorithm>
#include <numeric>

namespace cutkit {

namespace {

PcWord word(std::initializer_list<std::uint32_t> w) { return PcWord(w); }

void expect_params(std::string_view name, std::span<const std::uint64_t> params, std::size_t n)
{
    if (params.size() != n) {
        throw Error(ErrorKind::InvalidParameters,
                    std::string(name) + " expects " + std::to_string(n) + " parameter(s), got " + std::to_string(params.size()));
    }
}

// SL(2,p) acting on the nonzero row vectors of F_p^2.
PermutationGroup special_linear_2(std::uint64_t p, std::string descriptor)
{
    std::vector<FpMatrix> mats{FpMatrix::from_rows(p, {{1, 1}, {0, 1}}), FpMatrix::from_rows(p, {{1, 0}, {1, 1}})};
    const std::uint64_t points = p * p - 1;
    std::vector<Perm> gens;
    for (const auto& m : mats) {
        std::vector<Point> images(points);
        for (std::uint64_t code = 1; code <= points; ++code) {
            auto v = decode_vector(code, 2, p);
            images[code - 1] = static_cast<Point>(encode_vector(m.apply(v), p) - 1);
        }
        gens.emplace_back(std::move(images));
    }
    return PermutationGroup(points, std::move(gens), std::move(descriptor));
}

PermutationGroup cyclic_group(std::uint64_t n)
{
    if (n == 0) throw Error(ErrorKind::InvalidParameters, "cyclic(0)");
    std::vector<Point> images(n);
    for (std::uint64_t i = 0; i < n; ++i) images[i] = static_cast<Point>((i + 1) % n);
    return PermutationGroup(n, {Perm(std::move(images))}, "cyclic(" + std::to_string(n) + ")");
}

PermutationGroup elementary_abelian(std::uint64_t p, std::uint64_t d)
{
    if (!is_prime(p) || d == 0) throw Error(ErrorKind::InvalidParameters, "elemab needs a prime and d >= 1");
    const std::size_t degree = p * d;
    std::vector<Perm> gens;
    for (std::uint64_t k = 0; k < d; ++k) {
        std::vector<Point> cycle;
        for (std::uint64_t i = 0; i < p; ++i) cycle.push_back(static_cast<Point>(k * p + i));
        gens.push_back(Perm::from_cycles(degree, {cycle}));
    }
    return PermutationGroup(degree, std::move(gens), "elemab(" + std::to_string(p) + "," + std::to_string(d) + ")");
}

std::vector<FpMatrix> q8_matrices(const FpMatrix& i, const FpMatrix& j) { return {i, j, i * i}; }

void annotate_claimed_id(PermutationGroup& g, const std::string& id) { g.annotate("claimed_smallgroup_id", id); }

} // namespace

// ---- presentations --------------------------------------------------------

PcPresentation cyclic_presentation(std::uint32_t n)
{
    PcPresentation p;
    p.rel_orders = {n};
    return p;
}

PcPresentation q8_presentation()
{
    PcPresentation p;
    p.rel_orders = {2, 2, 2};
    p.power_rules[0] = word({0, 0, 1});
    p.power_rules[1] = word({0, 0, 1});
    p.conj_rules[{0, 1}] = word({0, 1, 1});
    return p;
}

PcPresentation c3c4_presentation()
{
    PcPresentation p;
    p.rel_orders = {4, 3};
    p.conj_rules[{0, 1}] = word({0, 2});
    return p;
}

PcPresentation heis7_presentation()
{
    PcPresentation p;
    p.rel_orders = {7, 7, 7};
    p.conj_rules[{0, 1}] = word({0, 1, 1});
    return p;
}

PcPresentation xgroup_presentation()
{
    // order u, v, s, t
    PcPresentation p;
    p.rel_orders = {2, 2, 4, 4};
    p.conj_rules[{0, 2}] = word({0, 0, 1, 2});
    p.conj_rules[{0, 3}] = word({0, 0, 2, 1});
    p.conj_rules[{1, 2}] = word({0, 0, 3, 0});
    p.conj_rules[{1, 3}] = word({0, 0, 2, 3});
    return p;
}

PcPresentation ygroup_presentation()
{
    // order s, t, u, v, a = s^2, b = u^2; g_j^{g_i} = g_j [g_j, g_i]
    PcPresentation p;
    p.rel_orders = {2, 2, 2, 2, 2, 2};
    const PcWord a = word({0, 0, 0, 0, 1, 0});
    const PcWord b = word({0, 0, 0, 0, 0, 1});
    p.power_rules[0] = a;
    p.power_rules[1] = a;
    p.power_rules[2] = b;
    p.power_rules[3] = b;
    p.conj_rules[{0, 1}] = word({0, 1, 0, 0, 0, 1});
    p.conj_rules[{0, 2}] = word({0, 0, 1, 0, 1, 0});
    p.conj_rules[{0, 3}] = word({0, 0, 0, 1, 0, 1});
    p.conj_rules[{1, 2}] = word({0, 0, 1, 0, 0, 1});
    p.conj_rules[{1, 3}] = word({0, 0, 0, 1, 1, 0});
    p.conj_rules[{2, 3}] = word({0, 0, 0, 1, 1, 0});
    return p;
}

PermutationGroup named_group(std::string_view name, std::span<const std::uint64_t> params)
{
    if (name == "cyclic") {
        expect_params(name, params, 1);
        return cyclic_group(params[0]);
    }
    if (name == "elemab") {
        expect_params(name, params, 2);
        return elementary_abelian(params[0], params[1]);
    }
    expect_params(name, params, 0);
    if (name == "q8") return pc_group(q8_presentation(), "q8");
    if (name == "sl23") return special_linear_2(3, "sl23");
    if (name == "sl25") return special_linear_2(5, "sl25");
    if (name == "c3c4") return pc_group(c3c4_presentation(), "c3c4");
    if (name == "heis7") return pc_group(heis7_presentation(), "heis7");
    if (name == "q8xc3") {
        auto g = direct_product(named_group("q8"), cyclic_group(3));
        g.set_descriptor("q8xc3");
        return g;
    }
    if (name == "xgroup") {
        auto g = pc_group(xgroup_presentation(), "xgroup");
        annotate_claimed_id(g, "[64,242]");
        return g;
    }
    if (name == "ygroup") {
        auto g = pc_group(ygroup_presentation(), "ygroup");
        annotate_claimed_id(g, "[64,245]");
        return g;
    }
    throw Error(ErrorKind::UnknownName, std::string(name));
}

PermutationGroup metacyclic(std::uint64_t n, std::uint64_t m, std::uint64_t r)
{
    if (n < 1 || m < 1 || (n > 1 && gcd(r % n, n) != 1)) {
        throw Error(ErrorKind::InvalidParameters, "meta(n,m,r) needs r coprime to n");
    }
    if (n > 1 && mod_pow(r, m, n) != 1) throw Error(ErrorKind::InvalidParameters, "meta(n,m,r) needs r^m = 1 mod n");
    const std::uint64_t action_order = n > 1 ? multiplicative_order(r % n, n) : 1;
    const bool extra = action_order < m;
    const std::size_t degree = n + (extra ? m : 0);
    std::vector<Point> x(degree), y(degree);
    std::iota(x.begin(), x.end(), 0);
    std::iota(y.begin(), y.end(), 0);
    for (std::uint64_t i = 0; i < n; ++i) {
        x[i] = static_cast<Point>((i + 1) % n);
        y[i] = static_cast<Point>(i * r % n);
    }
    if (extra) {
        for (std::uint64_t i = 0; i < m; ++i) y[n + i] = static_cast<Point>(n + (i + 1) % m);
    }
    return PermutationGroup(degree, {Perm(std::move(x)), Perm(std::move(y))},
                            "meta(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(r) + ")");
}

// ---- module semidirect products -------------------------------------------

std::vector<FpMatrix> element_matrices(const ModuleAction& act)
{
    const ElementTable& t = act.K.materialize();
    std::vector<FpMatrix> mats(t.size());
    mats[0] = FpMatrix::identity(act.d, act.p);
    for (ElementIndex i = 1; i < t.size(); ++i) mats[i] = mats[t.parent(i)] * act.matrices[t.parent_generator(i)];
    return mats;
}

void validate_action(const ModuleAction& act)
{
    if (!is_prime(act.p)) throw Error(ErrorKind::InvalidAction, "modulus is not prime");
    if (act.s == 0 || act.d == 0) throw Error(ErrorKind::InvalidAction, "dimension and copy count must be positive");
    const ElementTable& t = act.K.materialize();
    if (act.matrices.size() != t.generator_count()) {
        throw Error(ErrorKind::InvalidAction, "need one matrix per generator of K");
    }
    for (const auto& m : act.matrices) {
        if (m.rows() != act.d || m.cols() != act.d || m.modulus() != act.p) {
            throw Error(ErrorKind::InvalidAction, "matrix shape or modulus mismatch");
        }
        if (m.det() == 0) throw Error(ErrorKind::InvalidAction, "matrix " + m.to_string() + " is singular");
    }
    auto mats = element_matrices(act);
    for (ElementIndex i = 0; i < t.size(); ++i) {
        for (std::size_t j = 0; j < t.generator_count(); ++j) {
            if (mats[t.times_generator(i, j)] != mats[i] * act.matrices[j]) {
                throw Error(ErrorKind::InvalidAction, "matrices violate a relation of K");
            }
        }
    }
}

bool is_faithful(const ModuleAction& act)
{
    auto mats = element_matrices(act);
    return std::count_if(mats.begin(), mats.end(), [](const FpMatrix& m) { return m.is_identity(); }) == 1;
}

bool is_fixed_point_free(const ModuleAction& act)
{
    auto mats = element_matrices(act);
    const FpMatrix id = FpMatrix::identity(act.d, act.p);
    for (std::size_t i = 1; i < mats.size(); ++i) {
        if ((mats[i] - id).det() == 0) return false;
    }
    return true;
}

PermutationGroup module_semidirect(const ModuleAction& act, std::string descriptor)
{
    validate_action(act);
    const ElementTable& kt = act.K.table();
    std::uint64_t block = 1;
    for (std::size_t i = 0; i < act.d; ++i) block *= act.p;
    const bool extra = !is_faithful(act);
    const std::size_t base = act.s * block;
    const std::size_t degree = base + (extra ? kt.size() : 0);

    std::vector<Perm> gens;
    for (std::size_t c = 0; c < act.s; ++c) {
        for (std::size_t i = 0; i < act.d; ++i) {
            std::vector<Point> images(degree);
            std::iota(images.begin(), images.end(), 0);
            for (std::uint64_t code = 0; code < block; ++code) {
                auto v = decode_vector(code, act.d, act.p);
                v[i] = (v[i] + 1) % act.p;
                images[c * block + code] = static_cast<Point>(c * block + encode_vector(v, act.p));
            }
            gens.emplace_back(std::move(images));
        }
    }
    for (std::size_t j = 0; j < act.matrices.size(); ++j) {
        std::vector<Point> images(degree);
        for (std::uint64_t code = 0; code < block; ++code) {
            auto w = encode_vector(act.matrices[j].apply(decode_vector(code, act.d, act.p)), act.p);
            for (std::size_t c = 0; c < act.s; ++c) images[c * block + code] = static_cast<Point>(c * block + w);
        }
        if (extra) {
            for (ElementIndex x = 0; x < kt.size(); ++x) images[base + x] = static_cast<Point>(base + kt.times_generator(x, j));
        }
        gens.emplace_back(std::move(images));
    }
    PermutationGroup g(degree, std::move(gens), std::move(descriptor));
    std::uint64_t kernel = 1;
    for (std::size_t i = 0; i < act.s; ++i) kernel *= block;
    g.annotate("kernel_order", std::to_string(kernel));
    return g;
}

ModuleAction rep_search(const PermutationGroup& K, std::uint64_t p, std::size_t d, bool require_fpf)
{
    const ElementTable& t = K.materialize();
    const std::size_t r = t.generator_count();
    auto gl = general_linear_group(d, p);
    std::vector<std::uint64_t> gl_order(gl.size());
    for (std::size_t i = 0; i < gl.size(); ++i) gl_order[i] = gl[i].multiplicative_order();

    std::vector<std::vector<std::size_t>> candidates(r);
    for (std::size_t j = 0; j < r; ++j) {
        const std::uint64_t o = t.order_of(t.generator(j));
        for (std::size_t i = 0; i < gl.size(); ++i) {
            if (o % gl_order[i] == 0) candidates[j].push_back(i);
        }
    }

    std::vector<std::size_t> choice(r);
    std::vector<FpMatrix> img(t.size());
    std::vector<char> known(t.size());
    // Checks every Cayley edge inside the subgroup generated by gens 0..level.
    auto consistent = [&](std::size_t level) {
        std::fill(known.begin(), known.end(), 0);
        img[0] = FpMatrix::identity(d, p);
        known[0] = 1;
        std::vector<ElementIndex> queue{0};
        for (std::size_t pos = 0; pos < queue.size(); ++pos) {
            ElementIndex e = queue[pos];
            for (std::size_t j = 0; j <= level; ++j) {
                ElementIndex n = t.times_generator(e, j);
                FpMatrix m = img[e] * gl[choice[j]];
                if (!known[n]) {
                    known[n] = 1;
                    img[n] = std::move(m);
                    queue.push_back(n);
                } else if (img[n] != m) {
                    return false;
                }
            }
        }
        return true;
    };
    auto fpf = [&]() {
        const FpMatrix id = FpMatrix::identity(d, p);
        for (ElementIndex i = 1; i < t.size(); ++i) {
            if ((img[i] - id).det() == 0) return false;
        }
        return true;
    };

    std::vector<std::size_t> pos(r, 0);
    std::size_t level = 0;
    while (true) {
        if (pos[level] == candidates[level].size()) {
            if (level == 0) break;
            pos[level] = 0;
            --level;
            ++pos[level];
            continue;
        }
        choice[level] = candidates[level][pos[level]];
        if (!consistent(level)) {
            ++pos[level];
            continue;
        }
        if (level + 1 < r) {
            ++level;
            continue;
        }
        if (!require_fpf || fpf()) {
            ModuleAction act{p, d, K, {}, 1};
            for (std::size_t j = 0; j < r; ++j) act.matrices.push_back(gl[choice[j]]);
            return act;
        }
        ++pos[level];
    }
    throw Error(ErrorKind::NoActionFound, "no " + std::string(require_fpf ? "fixed point free " : "") + "action of " +
                                              K.descriptor() + " on F_" + std::to_string(p) + "^" + std::to_string(d));
}

// ---- families ------------------------------------------------------------

ModuleAction q8xc3_f5_module()
{
    const std::uint64_t p = 5;
    FpMatrix i = FpMatrix::from_rows(p, {{0, 4}, {1, 0}});
    FpMatrix j = FpMatrix::from_rows(p, {{0, 2}, {2, 0}});
    FpMatrix c = FpMatrix::from_rows(p, {{0, 4}, {1, 4}});
    FpMatrix id = FpMatrix::identity(2, p);
    ModuleAction act{p, 4, named_group("q8xc3"), {}, 1};
    for (const auto& m : q8_matrices(i, j)) act.matrices.push_back(kronecker(m, id));
    act.matrices.push_back(kronecker(id, c));
    return act;
}

std::string family_descriptor_string(const FamilyDescriptor& fd)
{
    std::string out = "fam(" + fd.label;
    for (auto v : fd.params) out += "," + std::to_string(v);
    return out + ")";
}

namespace {

FamilyDescriptor canonical(const FamilyDescriptor& fd)
{
    FamilyDescriptor out = fd;
    if (out.label == "odd-2group" && out.params.size() == 1) out.params.push_back(0);
    return out;
}

std::uint64_t single_positive(const FamilyDescriptor& fd)
{
    if (fd.params.size() != 1 || fd.params[0] == 0) {
        throw Error(ErrorKind::InvalidParameters, "fam(" + fd.label + ") needs one parameter >= 1");
    }
    return fd.params[0];
}

// C_2^a x C_4^a' with the block automorphism of order 3.
PermutationGroup abelian_kernel_group(std::uint64_t a, std::uint64_t a2, std::string descriptor)
{
    if (a % 2 != 0 || a2 % 2 != 0 || a + a2 == 0) {
        throw Error(ErrorKind::InvalidParameters, "abelian-kernel needs even a, a' not both zero");
    }
    // Blocks are pairs of cyclic factors; generators e1, e2 of a block go to
    // e2 and e1 + e2 (mod 2) or -e2 and e1 + 3 e2 (mod 4).
    std::vector<std::uint64_t> orders;
    for (std::uint64_t i = 0; i < a; ++i) orders.push_back(2);
    for (std::uint64_t i = 0; i < a2; ++i) orders.push_back(4);
    std::size_t degree = 0;
    std::vector<std::size_t> offset;
    for (auto o : orders) {
        offset.push_back(degree);
        degree += o;
    }
    std::vector<Perm> gens;
    for (std::size_t k = 0; k < orders.size(); ++k) {
        std::vector<Point> cycle;
        for (std::uint64_t i = 0; i < orders[k]; ++i) cycle.push_back(static_cast<Point>(offset[k] + i));
        gens.push_back(Perm::from_cycles(degree, {cycle}));
    }
    PermutationGroup f(degree, gens, "abelian(" + std::to_string(a) + "," + std::to_string(a2) + ")");
    std::vector<Perm> images;
    for (std::size_t k = 0; k < orders.size(); k += 2) {
        const Perm& e1 = gens[k];
        const Perm& e2 = gens[k + 1];
        if (orders[k] == 2) {
            images.push_back(e2);
            images.push_back(e1 * e2);
        } else {
            images.push_back(e2.pow(3));
            images.push_back(e1 * e2.pow(3));
        }
    }
    auto aut = check_automorphism(f, images);
    if (automorphism_order(aut) != 3 || !is_fpf(aut)) {
        throw Error(ErrorKind::InvalidAction, "block automorphism is not fixed point free of order 3");
    }
    return semidirect_by_automorphism(f, aut, 3, std::move(descriptor));
}

// Kernel X x C_2^{2e} or Y x C_2^{2e} with the product automorphism.
PermutationGroup odd_two_group(std::uint64_t variant, std::uint64_t e, std::string descriptor)
{
    PermutationGroup base;
    std::vector<Perm> base_images;
    if (variant == 1) {
        base = named_group("xgroup");
        const auto& g = base.generators(); // u, v, s, t
        const Perm &u = g[0], &v = g[1], &s = g[2], &t = g[3];
        base_images = {u * v, u, s.pow(3) * t.pow(3), s};
    } else if (variant == 2) {
        base = named_group("ygroup");
        auto beta = fpf_search_order3(base);
        base_images = beta.gen_images();
    } else {
        throw Error(ErrorKind::InvalidParameters, "odd-2group variant must be 1 or 2");
    }
    if (e == 0) {
        auto aut = check_automorphism(base, base_images);
        auto g = semidirect_by_automorphism(base, aut, 3, std::move(descriptor));
        if (variant == 1) annotate_claimed_id(g, "[192,1023]");
        if (variant == 2) annotate_claimed_id(g, "[192,1025]");
        return g;
    }
    PermutationGroup extra = elementary_abelian(2, 2 * e);
    PermutationGroup f = direct_product(base, extra);
    const std::size_t degree = f.degree();
    std::vector<Perm> images;
    for (const auto& x : base_images) images.push_back(x.embedded(degree, 0));
    const auto& eg = extra.generators();
    for (std::size_t k = 0; k < eg.size(); k += 2) {
        images.push_back(eg[k + 1].embedded(degree, base.degree()));
        images.push_back((eg[k] * eg[k + 1]).embedded(degree, base.degree()));
    }
    auto aut = check_automorphism(f, images);
    return semidirect_by_automorphism(f, aut, 3, std::move(descriptor));
}

} // namespace

std::optional<ModuleAction> family_module(const FamilyDescriptor& raw)
{
    const FamilyDescriptor fd = canonical(raw);
    const std::string& l = fd.label;
    if (l == "a") return ModuleAction{3, 1, named_group("cyclic", std::vector<std::uint64_t>{2}), {FpMatrix::from_rows(3, {{2}})}, single_positive(fd)};
    if (l == "b") {
        return ModuleAction{3, 2, named_group("cyclic", std::vector<std::uint64_t>{4}),
                            {FpMatrix::from_rows(3, {{0, 2}, {1, 0}})}, single_positive(fd)};
    }
    if (l == "c") {
        return ModuleAction{3, 2, named_group("q8"),
                            q8_matrices(FpMatrix::from_rows(3, {{0, 2}, {1, 0}}), FpMatrix::from_rows(3, {{1, 1}, {1, 2}})),
                            single_positive(fd)};
    }
    if (l == "d") return ModuleAction{5, 1, named_group("cyclic", std::vector<std::uint64_t>{4}), {FpMatrix::from_rows(5, {{2}})}, single_positive(fd)};
    if (l == "e") return ModuleAction{7, 1, named_group("cyclic", std::vector<std::uint64_t>{6}), {FpMatrix::from_rows(7, {{3}})}, single_positive(fd)};
    if (l == "f") {
        auto mats = q8_matrices(FpMatrix::from_rows(7, {{0, 6}, {1, 0}}), FpMatrix::from_rows(7, {{2, 3}, {3, 5}}));
        mats.push_back(FpMatrix::scalar(2, 7, 2));
        return ModuleAction{7, 2, named_group("q8xc3"), mats, single_positive(fd)};
    }
    auto no_params = [&]() {
        if (!fd.params.empty()) throw Error(ErrorKind::InvalidParameters, "fam(" + l + ") takes no parameters");
    };
    if (l == "alpha") {
        no_params();
        return ModuleAction{5, 2, named_group("q8"),
                            q8_matrices(FpMatrix::from_rows(5, {{0, 4}, {1, 0}}), FpMatrix::from_rows(5, {{0, 2}, {2, 0}})), 1};
    }
    if (l == "beta") {
        no_params();
        return rep_search(named_group("c3c4"), 5, 2, true);
    }
    if (l == "gamma") {
        no_params();
        return rep_search(named_group("sl23"), 5, 2, true);
    }
    if (l == "delta") {
        no_params();
        return rep_search(named_group("sl23"), 7, 2, true);
    }
    if (l == "odd-7group" && fd.params.size() == 1) {
        return ModuleAction{7, 1, named_group("cyclic", std::vector<std::uint64_t>{3}), {FpMatrix::from_rows(7, {{2}})}, single_positive(fd)};
    }
    if (l == "odd-7group" || l == "odd-2group" || l == "abelian-kernel") return std::nullopt;
    throw Error(ErrorKind::UnknownName, "family " + l);
}

PermutationGroup family(const FamilyDescriptor& raw)
{
    const FamilyDescriptor fd = canonical(raw);
    const std::string desc = family_descriptor_string(fd);
    if (auto act = family_module(fd)) {
        validate_action(*act);
        if (!is_fixed_point_free(*act)) throw Error(ErrorKind::InvalidAction, desc + " seed is not fixed point free");
        auto g = module_semidirect(*act, desc);
        static const std::map<std::string, std::string> ids{
            {"alpha", "[200,44]"}, {"beta", "[300,23]"}, {"gamma", "[600,150]"}, {"delta", "[1176,215]"}};
        if (auto it = ids.find(fd.label); it != ids.end()) annotate_claimed_id(g, it->second);
        return g;
    }
    if (fd.label == "odd-7group") {
        if (!fd.params.empty()) throw Error(ErrorKind::InvalidParameters, "fam(odd-7group) takes zero or one parameter");
        PermutationGroup p = named_group("heis7");
        auto aut = fpf_search_order3(p, CyclicFilter::UpToConjugacy);
        auto g = semidirect_by_automorphism(p, aut, 3, desc);
        g.annotate("kernel_order", "343");
        return g;
    }
    if (fd.label == "odd-2group") {
        if (fd.params.size() != 2) throw Error(ErrorKind::InvalidParameters, "fam(odd-2group,v[,e]) takes one or two parameters");
        auto g = odd_two_group(fd.params[0], fd.params[1], desc);
        g.annotate("kernel_order", std::to_string(std::uint64_t{64} << (2 * fd.params[1])));
        return g;
    }
    if (fd.params.size() != 2) throw Error(ErrorKind::InvalidParameters, "fam(abelian-kernel,a,a') takes two parameters");
    auto g = abelian_kernel_group(fd.params[0], fd.params[1], desc);
    g.annotate("kernel_order", std::to_string((std::uint64_t{1} << fd.params[0]) * (std::uint64_t{1} << (2 * fd.params[1]))));
    return g;
}

// ---- automorphisms ---------------------------------------------------------

Homomorphism check_automorphism(const PermutationGroup& g, const std::vector<Perm>& images)
{
    Homomorphism h(g, g, images);
    h.verify();
    if (!h.is_injective()) throw Error(ErrorKind::NotBijective, "endomorphism is not injective");
    return h;
}

std::vector<ElementIndex> automorphism_table(const Homomorphism& aut)
{
    const ElementTable& t = aut.source().table();
    std::vector<ElementIndex> out(t.size());
    for (ElementIndex i = 0; i < t.size(); ++i) out[i] = t.index_of(aut.image(i));
    return out;
}

std::uint64_t automorphism_order(const Homomorphism& aut)
{
    auto sigma = automorphism_table(aut);
    std::vector<Point> images(sigma.begin(), sigma.end());
    return Perm(std::move(images)).order();
}

bool is_fpf(const Homomorphism& aut)
{
    auto sigma = automorphism_table(aut);
    for (ElementIndex i = 1; i < sigma.size(); ++i) {
        if (sigma[i] == i) return false;
    }
    return true;
}

namespace {

bool in_cyclic(const ElementTable& t, ElementIndex x, ElementIndex y)
{
    ElementIndex p = t.identity();
    do {
        if (p == y) return true;
        p = t.multiply(p, x);
    } while (p != t.identity());
    return false;
}

// Classes of F that meet <x>.
std::vector<char> power_classes(const ClassData& cd, ElementIndex x)
{
    const ElementTable& t = cd.table();
    std::vector<char> hit(cd.class_count(), 0);
    ElementIndex p = t.identity();
    do {
        hit[cd.class_of(p)] = 1;
        p = t.multiply(p, x);
    } while (p != t.identity());
    return hit;
}

} // namespace

bool fixes_every_cyclic_up_to_conjugacy(const Homomorphism& aut)
{
    const ClassData& cd = aut.source().classes();
    auto sigma = automorphism_table(aut);
    for (ElementIndex i = 0; i < sigma.size(); ++i) {
        if (!power_classes(cd, i)[cd.class_of(sigma[i])]) return false;
    }
    return true;
}

bool fixes_every_cyclic(const Homomorphism& aut)
{
    const ElementTable& t = aut.source().table();
    auto sigma = automorphism_table(aut);
    for (ElementIndex i = 0; i < t.size(); ++i) {
        if (!in_cyclic(t, i, sigma[i])) return false;
    }
    return true;
}

Homomorphism inner_automorphism(const PermutationGroup& group, const Perm& g)
{
    std::vector<Perm> images;
    for (const auto& x : group.generators()) images.push_back(g.inverse() * x * g);
    return check_automorphism(group, images);
}

Homomorphism fpf_search_order3(const PermutationGroup& f, CyclicFilter filter)
{
    const ElementTable& t = f.materialize();
    // Irredundant generating subset of the given generators.
    std::vector<ElementIndex> gens;
    for (std::size_t j = 0; j < t.generator_count(); ++j) {
        ElementIndex g = t.generator(j);
        if (g == t.identity()) continue;
        if (!gens.empty() && generate_subgroup(f, gens).contains(g)) continue;
        gens.push_back(g);
    }
    if (gens.empty()) throw Error(ErrorKind::NoneFound, "trivial group has no automorphism of order 3");

    const ClassData* cd = filter == CyclicFilter::UpToConjugacy ? &f.classes() : nullptr;
    auto allowed = [&](ElementIndex x, ElementIndex y) {
        switch (filter) {
        case CyclicFilter::None: return true;
        case CyclicFilter::Strict: return in_cyclic(t, x, y);
        case CyclicFilter::UpToConjugacy: return power_classes(*cd, x)[cd->class_of(y)] != 0;
        }
        return false;
    };
    const std::size_t r = gens.size();
    std::vector<std::vector<ElementIndex>> candidates(r);
    for (std::size_t j = 0; j < r; ++j) {
        for (ElementIndex y = 1; y < t.size(); ++y) {
            if (y == gens[j] || t.order_of(y) != t.order_of(gens[j])) continue;
            if (!allowed(gens[j], y)) continue;
            candidates[j].push_back(y);
        }
    }

    constexpr ElementIndex unset = std::numeric_limits<ElementIndex>::max();
    std::vector<ElementIndex> choice(r), img(t.size());
    auto consistent = [&](std::size_t level) {
        std::fill(img.begin(), img.end(), unset);
        img[0] = 0;
        std::vector<ElementIndex> queue{0};
        for (std::size_t pos = 0; pos < queue.size(); ++pos) {
            ElementIndex e = queue[pos];
            for (std::size_t j = 0; j <= level; ++j) {
                ElementIndex n = t.multiply(e, gens[j]);
                ElementIndex m = t.multiply(img[e], choice[j]);
                if (img[n] == unset) {
                    img[n] = m;
                    queue.push_back(n);
                } else if (img[n] != m) {
                    return false;
                }
            }
        }
        return true;
    };
    auto accept = [&]() {
        std::vector<char> hit(t.size(), 0);
        for (ElementIndex i = 0; i < t.size(); ++i) {
            if (hit[img[i]]) return false;
            hit[img[i]] = 1;
        }
        for (ElementIndex i = 1; i < t.size(); ++i) {
            if (img[i] == i || img[img[img[i]]] != i) return false;
            if (!allowed(i, img[i])) return false;
        }
        return true;
    };

    std::vector<std::size_t> pos(r, 0);
    std::size_t level = 0;
    while (true) {
        if (pos[level] == candidates[level].size()) {
            if (level == 0) break;
            pos[level] = 0;
            --level;
            ++pos[level];
            continue;
        }
        choice[level] = candidates[level][pos[level]];
        if (!consistent(level)) {
            ++pos[level];
            continue;
        }
        if (level + 1 < r) {
            ++level;
            continue;
        }
        if (accept()) {
            std::vector<Perm> images;
            for (std::size_t j = 0; j < t.generator_count(); ++j) images.push_back(t.element(img[t.generator(j)]));
            return check_automorphism(f, images);
        }
        ++pos[level];
    }
    throw Error(ErrorKind::NoneFound, "no fixed point free automorphism of order 3 of " + f.descriptor());
}

PermutationGroup semidirect_by_automorphism(const PermutationGroup& f, const Homomorphism& aut, std::uint64_t m,
                                            std::string descriptor)
{
    if (!aut.verified()) throw Error(ErrorKind::NotAHomomorphism, "automorphism not verified");
    const ElementTable& t = f.table();
    auto sigma = automorphism_table(aut);
    // sigma^k for k = 0..m; sigma^m must be the identity.
    std::vector<std::vector<ElementIndex>> powers{std::vector<ElementIndex>(t.size())};
    std::iota(powers[0].begin(), powers[0].end(), 0);
    for (std::uint64_t k = 1; k <= m; ++k) {
        std::vector<ElementIndex> next(t.size());
        for (ElementIndex i = 0; i < t.size(); ++i) next[i] = sigma[powers.back()[i]];
        powers.push_back(std::move(next));
    }
    if (powers[m] != powers[0]) {
        throw Error(ErrorKind::AutomorphismOrderMismatch, "automorphism order does not divide " + std::to_string(m));
    }
    const std::size_t degree = t.size() * m;
    std::vector<Perm> gens;
    for (std::size_t j = 0; j < t.generator_count(); ++j) {
        const ElementIndex g = t.generator(j);
        std::vector<Point> images(degree);
        for (std::uint64_t i = 0; i < m; ++i) {
            // (f a^i) g = (f sigma^{-i}(g)) a^i
            const ElementIndex twisted = powers[(m - i) % m][g];
            for (ElementIndex x = 0; x < t.size(); ++x) {
                images[x * m + i] = static_cast<Point>(t.multiply(x, twisted) * m + i);
            }
        }
        gens.emplace_back(std::move(images));
    }
    std::vector<Point> a(degree);
    for (ElementIndex x = 0; x < t.size(); ++x) {
        for (std::uint64_t i = 0; i < m; ++i) a[x * m + i] = static_cast<Point>(x * m + (i + 1) % m);
    }
    gens.emplace_back(std::move(a));
    return PermutationGroup(degree, std::move(gens), std::move(descriptor));
}

namespace {

PermutationGroup w_group(std::uint64_t scalar, std::size_t d)
{
    ModuleAction act{7, 1, named_group("cyclic", std::vector<std::uint64_t>{6}), {FpMatrix::from_rows(7, {{static_cast<std::int64_t>(scalar)}})}, d};
    return module_semidirect(act, "mod(7,1,cyclic(6)," + std::to_string(d) + ";" + std::to_string(scalar) + ")");
}

Homomorphism t_to_t5(std::uint64_t from, std::uint64_t to, std::size_t d)
{
    PermutationGroup src = w_group(from, d);
    PermutationGroup dst = w_group(to, d);
    std::vector<Perm> images;
    const auto& dg = dst.generators();
    for (std::size_t i = 0; i + 1 < dg.size(); ++i) images.push_back(dg[i]);
    images.push_back(dg.back().pow(5));
    Homomorphism h(src, dst, images);
    h.verify();
    if (!h.is_bijective()) throw Error(ErrorKind::NotBijective, "t -> t^5 map is not bijective");
    return h;
}

} // namespace

Homomorphism witness_isomorphism_w1_w2(std::size_t d) { return t_to_t5(3, 5, d); }
Homomorphism witness_isomorphism_w2_w1(std::size_t d) { return t_to_t5(5, 3, d); }

} // namespace cutkit
