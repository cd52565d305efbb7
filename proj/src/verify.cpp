#include "cutkit/verify.hpp"

#include "cutkit/chartab.hpp"
#include "cutkit/constructors.hpp"
#include "cutkit/descriptor.hpp"
#include "cutkit/error.hpp"
#include "cutkit/frobenius.hpp"
#include "cutkit/numtheory.hpp"
#include "cutkit/rationality.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <thread>

namespace cutkit {

using json = nlohmann::json;

namespace {

constexpr std::size_t kEquivalenceBound = 1500;
constexpr std::size_t kQuotientBound = 1500;
// Largest family member of the positive cases, fam(f,2).
constexpr std::size_t kFamilyOrderLimit = 60000;

Assertion check(std::string claim, std::string anchor, bool ok, json witness)
{
    Assertion a;
    a.claim = std::move(claim);
    a.anchor = std::move(anchor);
    a.status = ok ? Status::Pass : Status::Fail;
    a.witness = std::move(witness);
    return a;
}

Assertion skip(std::string claim, std::string anchor, std::string reason, json witness)
{
    Assertion a;
    a.claim = std::move(claim);
    a.anchor = std::move(anchor);
    a.status = Status::Skipped;
    a.reason = std::move(reason);
    a.witness = std::move(witness);
    return a;
}

Assertion error_assertion(const std::string& claim, const std::string& anchor, const std::string& group,
                          const std::exception& e)
{
    return check(claim, anchor, false, json{{"group", group}, {"error", e.what()}});
}

// Runs f(0..n-1) on up to jobs threads; results come back in index order.
template <class F>
auto parallel_map(std::size_t n, unsigned jobs, F f) -> std::vector<decltype(f(std::size_t{0}))>
{
    std::vector<decltype(f(std::size_t{0}))> out(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < n; i = next++) out[i] = f(i);
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

template <class T>
void append(std::vector<Assertion>& out, std::vector<T>&& parts)
{
    for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
}

bool fits(const PermutationGroup& g, std::size_t max_order)
{
    try {
        return g.materialize(max_order).size() <= max_order;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::OrderLimitExceeded) return false;
        throw;
    }
}

json cut_witness_json(const ClassData& cd, const CutResult& r)
{
    if (!r.witness) return nullptr;
    return json{{"class", r.witness->class_index},
                {"class_order", cd.rep_order(r.witness->class_index)},
                {"k", r.witness->k},
                {"image_class", cd.power_map(r.witness->k)[r.witness->class_index]}};
}

json spectrum_json(const std::vector<std::uint64_t>& s) { return json(s); }

bool spectrum_allowed(const std::vector<std::uint64_t>& s)
{
    return std::all_of(s.begin(), s.end(), [](std::uint64_t p) { return p == 2 || p == 3 || p == 5 || p == 7; });
}

std::string spectrum_text(const std::vector<std::uint64_t>& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

json frobenius_json(const std::optional<FrobeniusStructure>& s)
{
    if (!s) return json{{"frobenius", false}};
    return json{{"frobenius", true},
                {"kernel_order", s->kernel.order()},
                {"complement_order", s->complement.order()},
                {"structure_rechecked", check_frobenius_structure(*s)}};
}

bool is_frobenius(const std::optional<FrobeniusStructure>& s) { return s && check_frobenius_structure(*s); }

std::size_t count_fields(const CharacterTable& t, FieldDescriptor::Kind kind, std::uint64_t d)
{
    std::size_t n = 0;
    for (const auto& f : t.fields) n += f.kind == kind && f.d == d;
    return n;
}

json field_counts(const CharacterTable& t)
{
    std::map<std::string, std::size_t> counts;
    for (const auto& f : t.fields) ++counts[f.to_string()];
    return json(counts);
}

std::optional<std::size_t> first_non_cut_row(const CharacterTable& t)
{
    for (std::size_t i = 0; i < t.fields.size(); ++i) {
        auto k = t.fields[i].kind;
        if (k != FieldDescriptor::Kind::Rational && k != FieldDescriptor::Kind::ImaginaryQuadratic) return i;
    }
    return std::nullopt;
}

std::vector<std::uint64_t> units_of_order(std::uint64_t n, std::uint64_t m)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t r = 1; r < n; ++r) {
        if (gcd(r, n) == 1 && mod_pow(r, m, n) == 1) out.push_back(r);
    }
    return out;
}

std::vector<CorpusEntry> fuzz_entries()
{
    std::mt19937_64 rng(20240613);
    std::vector<CorpusEntry> out;
    std::set<std::string> seen;
    while (out.size() < 20) {
        const std::uint64_t n = 3 + rng() % 30;
        const std::uint64_t m = 2 + rng() % 7;
        auto rs = units_of_order(n, m);
        const std::uint64_t r = rs[rng() % rs.size()];
        std::string d = canonical_descriptor("meta(" + std::to_string(n) + "," + std::to_string(m) + "," +
                                             std::to_string(r) + ")");
        if (seen.insert(d).second) out.push_back({d, "fuzz"});
    }
    return out;
}

std::vector<CorpusEntry> build_corpus()
{
    std::vector<CorpusEntry> c;
    auto add = [&](const std::string& d, const std::string& role) { c.push_back({canonical_descriptor(d), role}); };
    for (int n = 2; n <= 8; ++n) add("cyclic(" + std::to_string(n) + ")", "named");
    for (const char* d : {"elemab(2,2)", "elemab(2,3)", "elemab(3,2)", "elemab(5,2)", "q8", "sl23", "sl25", "c3c4",
                          "q8xc3", "heis7", "xgroup", "ygroup"}) {
        add(d, "named");
    }
    for (const char* d : {"perm(3;(0,1);(0,1,2))", "perm(4;(0,1,2);(0,1)(2,3))", "perm(4;(0,1);(0,1,2,3))",
                          "perm(4;(0,1,2,3);(0,2))", "perm(5;(0,1,2,3,4);(1,4)(2,3))", "perm(5;(0,1,2);(0,1,2,3,4))",
                          "perm(5;(0,1);(0,1,2,3,4))"}) {
        add(d, "perm");
    }
    for (const char* l : {"a", "b", "c", "d", "e", "f"}) {
        for (int p = 1; p <= 2; ++p) add(std::string("fam(") + l + "," + std::to_string(p) + ")", "family");
    }
    for (const char* d : {"fam(alpha)", "fam(beta)", "fam(gamma)", "fam(delta)", "fam(odd-7group)",
                          "fam(odd-7group,1)", "fam(odd-7group,2)", "fam(odd-2group,1)", "fam(odd-2group,2)",
                          "fam(abelian-kernel,2,0)", "fam(abelian-kernel,0,2)", "fam(abelian-kernel,2,2)"}) {
        add(d, "family");
    }
    add("sd(7,2,c3c4,1)", "negative");
    c.push_back({module_descriptor(q8xc3_f5_module()), "negative"});
    {
        ModuleAction markel = *family_module({"alpha", {}});
        markel.s = 2;
        c.push_back({module_descriptor(markel), "negative"});
    }
    add("mod(5,2,cyclic(4),1;2,0,0,3)", "negative");
    for (std::uint64_t r : units_of_order(15, 4)) {
        if (mod_pow(r, 2, 15) != 1) add("meta(15,4," + std::to_string(r) + ")", "negative");
    }
    for (const char* d : {"meta(3,2,2)", "meta(5,4,2)", "meta(7,3,2)", "meta(7,6,3)", "dp(cyclic(2),meta(7,3,2))"}) {
        add(d, "negative");
    }
    for (const char* d : {"dp(fam(alpha),fam(odd-7group,1))", "dp(q8,cyclic(3))", "dp(perm(3;(0,1);(0,1,2)),cyclic(2))",
                          "dp(q8,q8)"}) {
        add(d, "product");
    }
    add("mod(3,2,cyclic(3),1;1,1,0,1)", "camina");
    add("mod(5,2,cyclic(5),1;1,1,0,1)", "camina");
    for (auto& e : fuzz_entries()) c.push_back(e);
    return c;
}

struct Pool {
    std::mutex mutex;
    std::map<std::string, std::shared_future<PermutationGroup>> groups;
};

Pool& pool()
{
    static Pool p;
    return p;
}

std::vector<std::string> corpus_descriptors()
{
    std::vector<std::string> out;
    for (const auto& e : corpus()) out.push_back(e.descriptor);
    return out;
}

// Quotient groups of g by every proper nontrivial normal subgroup.
struct QuotientCheck {
    std::size_t normal_order = 0;
    bool cut = false;
    CutResult result;
};

// ---------------------------------------------------------------------------

Assertion isr_routes(const std::string& name, const PermutationGroup& g)
{
    const ClassData& cd = g.classes();
    for (std::size_t c = 0; c < cd.class_count(); ++c) {
        const bool power_route = element_type(cd, c).inverse_semi_rational;
        const bool b_route = is_isr_element(g, cd.rep(c));
        if (power_route != b_route) {
            return check("B_G(x)<tau> route agrees with power-map route on every class", "isr via B_G(x)", false,
                         json{{"group", name}, {"class", c}, {"power_map_route", power_route}, {"b_route", b_route}});
        }
    }
    return check("B_G(x)<tau> route agrees with power-map route on every class", "isr via B_G(x)", true,
                 json{{"group", name}, {"classes", cd.class_count()}});
}

Assertion p1mod4(const std::string& name, const PermutationGroup& g)
{
    const bool ok = p1mod4_shortcut_check(g.classes());
    return check("isr p-elements with p = 1 mod 4 are rational", "p = 1 mod 4 shortcut", ok, json{{"group", name}});
}

std::vector<Assertion> equivalence_for(const std::string& name, const PermutationGroup& g)
{
    std::vector<Assertion> out;
    const ClassData& cd = g.classes();
    const CutResult by_classes = cut_by_classes(cd);
    const CharacterTable t = character_table(g);
    const bool by_chars = is_cut_by_characters(t);
    json w{{"group", name}, {"order", g.order()}, {"classes", cd.class_count()}, {"cut_by_classes", by_classes.cut},
           {"cut_by_characters", by_chars}, {"prime", t.prime}};
    if (by_classes.witness) w["class_witness"] = cut_witness_json(cd, by_classes);
    if (auto row = first_non_cut_row(t)) w["character_witness"] = json{{"row", *row}, {"field", t.fields[*row].to_string()}};
    out.push_back(check("cut by classes equals cut by character fields", "cut criteria equivalence",
                        by_classes.cut == by_chars, std::move(w)));
    out.push_back(isr_routes(name, g));
    out.push_back(p1mod4(name, g));

    const RationalityReport rr = rationality_report(cd);
    std::optional<std::size_t> moved_row;
    for (std::size_t i = 0; i < t.rows.size() && !moved_row; ++i) {
        if (!galois_stabilizer(t, i).is_full()) moved_row = i;
    }
    json rw{{"group", name}, {"rational_by_classes", rr.rational_group}, {"rational_by_characters", !moved_row}};
    if (moved_row) rw["row"] = *moved_row;
    out.push_back(check("rational classes iff Galois-fixed characters", "rational groups", rr.rational_group == !moved_row,
                        std::move(rw)));
    return out;
}

std::vector<QuotientCheck> quotient_checks(const PermutationGroup& g)
{
    std::vector<QuotientCheck> out;
    const std::size_t order = g.order();
    for (const Subgroup& n : normal_subgroups(g)) {
        if (n.order() == 1 || n.order() == order) continue;
        Quotient q = quotient(g, n);
        q.group.materialize(order);
        QuotientCheck c;
        c.normal_order = n.order();
        c.result = cut_by_classes(q.group.classes());
        c.cut = c.result.cut;
        out.push_back(std::move(c));
    }
    return out;
}

json kernel_report_json(const KernelStructureReport& r)
{
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    json out{{"prime", r.prime}, {"checks", checks}};
    if (r.strict_cyclic_fixing) out["strict_cyclic_fixing"] = *r.strict_cyclic_fixing;
    return out;
}

// Cut and Frobenius, both recomputed from the group.
Assertion cut_frobenius(const std::string& name, const PermutationGroup& g, bool expect_cut, const std::string& claim,
                        const std::string& anchor)
{
    const CutResult cut = cut_by_classes(g.classes());
    auto s = detect_frobenius(g);
    json w{{"group", name}, {"order", g.order()}, {"cut", cut.cut}};
    w.update(frobenius_json(s));
    if (cut.witness) w["class_witness"] = cut_witness_json(g.classes(), cut);
    return check(claim, anchor, is_frobenius(s) && cut.cut == expect_cut, std::move(w));
}

Assertion too_large(const std::string& claim, const std::string& anchor, const std::string& name, std::size_t limit)
{
    return skip(claim, anchor, "order exceeds max_order " + std::to_string(limit), json{{"group", name}});
}

} // namespace

std::string to_string(Status s)
{
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
    }
    return "fail";
}

bool SuiteReport::passed() const { return count(Status::Fail) == 0; }

std::size_t SuiteReport::count(Status s) const
{
    return static_cast<std::size_t>(
        std::count_if(assertions.begin(), assertions.end(), [s](const Assertion& a) { return a.status == s; }));
}

const std::vector<CorpusEntry>& corpus()
{
    static const std::vector<CorpusEntry> c = build_corpus();
    return c;
}

PermutationGroup corpus_group(const std::string& descriptor)
{
    const std::string key = canonical_descriptor(descriptor);
    std::promise<PermutationGroup> promise;
    std::shared_future<PermutationGroup> future;
    bool owner = false;
    {
        std::lock_guard lock(pool().mutex);
        auto it = pool().groups.find(key);
        if (it == pool().groups.end()) {
            future = promise.get_future().share();
            pool().groups.emplace(key, future);
            owner = true;
        } else {
            future = it->second;
        }
    }
    if (owner) {
        try {
            promise.set_value(build_group(key));
        } catch (...) {
            promise.set_exception(std::current_exception());
        }
    }
    return future.get();
}

// ---------------------------------------------------------------------------

SuiteReport suite_criteria_equivalence(const VerifyOptions& opts)
{
    SuiteReport r{"criteria_equivalence", {}, 0};
    const auto names = corpus_descriptors();
    const std::size_t bound = std::min(kEquivalenceBound, opts.max_order);
    auto parts = parallel_map(names.size(), opts.jobs, [&](std::size_t i) -> std::vector<Assertion> {
        const std::string& name = names[i];
        try {
            PermutationGroup g = corpus_group(name);
            if (!fits(g, bound)) return {};
            return equivalence_for(name, g);
        } catch (const std::exception& e) {
            return {error_assertion("cut by classes equals cut by character fields", "cut criteria equivalence", name, e)};
        }
    });
    std::size_t groups = 0;
    for (const auto& p : parts) groups += !p.empty();
    append(r.assertions, std::move(parts));
    r.assertions.push_back(check("at least 30 corpus groups of order <= 1500 compared", "cut criteria equivalence",
                                 groups >= 30, json{{"groups", groups}, {"bound", bound}}));

    struct Example {
        const char* group;
        bool cut;
    };
    for (Example ex : {Example{"perm(3;(0,1);(0,1,2))", true}, Example{"cyclic(5)", false},
                       Example{"sd(7,2,c3c4,1)", false}}) {
        try {
            PermutationGroup g = corpus_group(ex.group);
            const bool a = is_cut_by_classes(g);
            const bool b = is_cut_by_characters(g);
            r.assertions.push_back(check(std::string(ex.group) + (ex.cut ? " is cut" : " is not cut") + " by both criteria",
                                         "cut criteria equivalence", a == ex.cut && b == ex.cut,
                                         json{{"group", g.descriptor()}, {"cut_by_classes", a}, {"cut_by_characters", b}}));
        } catch (const std::exception& e) {
            r.assertions.push_back(error_assertion("example", "cut criteria equivalence", ex.group, e));
        }
    }
    return r;
}

SuiteReport suite_theorem1(const VerifyOptions& opts)
{
    SuiteReport r{"theorem1", {}, 0};
    const std::string claim = "solvable cut group has prime spectrum in {2,3,5,7}";
    const std::string anchor = "spectrum of solvable cut groups";
    const auto names = corpus_descriptors();
    struct Part {
        std::vector<Assertion> assertions;
        std::size_t quotients = 0;
    };
    auto parts = parallel_map(names.size(), opts.jobs, [&](std::size_t i) -> Part {
        const std::string& name = names[i];
        Part p;
        try {
            PermutationGroup g = corpus_group(name);
            if (!fits(g, opts.max_order)) {
                p.assertions.push_back(too_large(claim, anchor, name, opts.max_order));
                return p;
            }
            const bool solvable = is_solvable(g);
            const CutResult cut = cut_by_classes(g.classes());
            const auto spectrum = prime_spectrum(g);
            json w{{"group", name}, {"order", g.order()}, {"solvable", solvable}, {"cut", cut.cut},
                   {"spectrum", spectrum_json(spectrum)}};
            if (!solvable) w["exempt"] = "not solvable";
            p.assertions.push_back(check(claim, anchor, !(solvable && cut.cut) || spectrum_allowed(spectrum), std::move(w)));
            if (!cut.cut) return p;
            if (g.order() > kQuotientBound) {
                p.assertions.push_back(skip("every quotient of a cut group is cut", "quotient closure",
                                            "quotient scan limited to order " + std::to_string(kQuotientBound),
                                            json{{"group", name}, {"order", g.order()}}));
                return p;
            }
            auto qs = quotient_checks(g);
            p.quotients = qs.size();
            json orders = json::array();
            bool ok = true;
            json fail = nullptr;
            for (const auto& q : qs) {
                orders.push_back(q.normal_order);
                if (!q.cut && ok) {
                    ok = false;
                    fail = json{{"normal_subgroup_order", q.normal_order}, {"class", q.result.witness->class_index},
                                {"k", q.result.witness->k}};
                }
            }
            json qw{{"group", name}, {"quotients", qs.size()}, {"normal_subgroup_orders", orders}};
            if (!ok) qw["failure"] = fail;
            p.assertions.push_back(check("every quotient of a cut group is cut", "quotient closure", ok, std::move(qw)));
        } catch (const std::exception& e) {
            p.assertions.push_back(error_assertion(claim, anchor, name, e));
        }
        return p;
    });
    std::size_t quotients = 0;
    for (auto& p : parts) {
        quotients += p.quotients;
        for (auto& a : p.assertions) r.assertions.push_back(std::move(a));
    }
    r.assertions.push_back(check("at least 100 quotient checks performed", "quotient closure", quotients >= 100,
                                 json{{"quotient_checks", quotients}}));

    auto example = [&](const std::string& desc, bool solvable, bool cut, std::vector<std::uint64_t> spectrum) {
        try {
            PermutationGroup g = corpus_group(desc);
            g.materialize(opts.max_order);
            const bool s = is_solvable(g);
            const bool c = is_cut_by_classes(g);
            const auto sp = prime_spectrum(g);
            r.assertions.push_back(check(desc + ": solvable " + (solvable ? "yes" : "no") + ", cut " + (cut ? "yes" : "no") +
                                             ", spectrum " + spectrum_text(spectrum),
                                         anchor, s == solvable && c == cut && sp == spectrum,
                                         json{{"group", desc}, {"solvable", s}, {"cut", c}, {"spectrum", sp}}));
        } catch (const std::exception& e) {
            r.assertions.push_back(error_assertion("example", anchor, desc, e));
        }
    };
    example("fam(f,1)", true, true, {2, 3, 7});
    example("dp(fam(alpha),fam(odd-7group,1))", true, true, {2, 3, 5, 7});
    example("sl25", false, false, {2, 3, 5});
    return r;
}

SuiteReport suite_spectra_remark(const VerifyOptions& opts)
{
    SuiteReport r{"spectra_remark", {}, 0};
    const std::string anchor = "spectra of solvable cut groups";
    struct Target {
        std::vector<std::uint64_t> spectrum;
        std::string group;
    };
    const std::vector<Target> targets{
        {{2}, "q8"},
        {{3}, "cyclic(3)"},
        {{2, 3}, "perm(3;(0,1);(0,1,2))"},
        {{2, 5}, "fam(alpha)"},
        {{3, 7}, "fam(odd-7group,1)"},
        {{2, 3, 5}, "fam(gamma)"},
        {{2, 3, 7}, "fam(e,1)"},
        {{2, 3, 5, 7}, "dp(fam(alpha),fam(odd-7group,1))"},
    };
    auto parts = parallel_map(targets.size(), opts.jobs, [&](std::size_t i) -> Assertion {
        const Target& t = targets[i];
        const std::string claim = "spectrum " + spectrum_text(t.spectrum) + " realized by a solvable cut group";
        try {
            PermutationGroup g = corpus_group(t.group);
            if (!fits(g, opts.max_order)) return too_large(claim, anchor, t.group, opts.max_order);
            const bool solvable = is_solvable(g);
            const CutResult cut = cut_by_classes(g.classes());
            const auto sp = prime_spectrum(g);
            json w{{"group", g.descriptor()}, {"order", g.order()}, {"solvable", solvable}, {"cut", cut.cut},
                   {"spectrum", sp}};
            if (cut.witness) w["class_witness"] = cut_witness_json(g.classes(), cut);
            return check(claim, anchor, solvable && cut.cut && sp == t.spectrum, std::move(w));
        } catch (const std::exception& e) {
            return error_assertion(claim, anchor, t.group, e);
        }
    });
    for (auto& a : parts) r.assertions.push_back(std::move(a));

    const std::string claim = "S_3 x (C_5^2 x| Q_8) x (C_7^2 x| SL(2,3)) is a solvable cut group with spectrum {2,3,5,7}";
    const std::vector<std::string> factors{"perm(3;(0,1);(0,1,2))", "fam(alpha)", "fam(delta)"};
    try {
        std::vector<PermutationGroup> groups;
        std::vector<const ClassData*> cds;
        std::set<std::uint64_t> spectrum;
        bool solvable = true;
        std::uint64_t order = 1;
        for (const auto& f : factors) groups.push_back(corpus_group(f));
        for (const auto& g : groups) {
            cds.push_back(&g.classes());
            solvable = solvable && is_solvable(g);
            for (auto p : prime_spectrum(g)) spectrum.insert(p);
            order *= g.order();
        }
        const ProductCutResult pr = product_cut_check(cds);
        const std::vector<std::uint64_t> sp(spectrum.begin(), spectrum.end());
        json w{{"factors", factors}, {"order", order},  {"exponent", pr.exponent}, {"class_tuples", pr.tuples},
               {"cut", pr.cut},      {"solvable", solvable}, {"spectrum", sp},     {"materialized", false}};
        if (pr.witness) w["tuple_witness"] = json{{"classes", pr.witness->classes}, {"k", pr.witness->k}};
        r.assertions.push_back(check(claim, anchor, pr.cut && solvable && sp == std::vector<std::uint64_t>{2, 3, 5, 7}, w));
    } catch (const std::exception& e) {
        r.assertions.push_back(error_assertion(claim, anchor, "triple product", e));
    }
    return r;
}

SuiteReport suite_complements(const VerifyOptions& opts)
{
    SuiteReport r{"complements", {}, 0};
    const std::string anchor = "cut Frobenius complements";
    struct Criteria {
        bool cut = false;
        bool sylow = false;
        bool involution = false;
        FrobeniusSubgroupWitness frobenius_subgroup;
    };
    auto evaluate = [](const PermutationGroup& k) {
        Criteria c;
        c.cut = is_cut_by_classes(k);
        c.sylow = complement_sylow_ok(k);
        c.involution = k.order() % 2 == 1 || unique_involution(k);
        c.frobenius_subgroup = has_frobenius_subgroup(k);
        return c;
    };
    auto criteria_json = [](const std::string& name, const PermutationGroup& k, const Criteria& c) {
        json sylow = json::array();
        for (const auto& s : complement_sylow_check(k)) {
            sylow.push_back(json{{"prime", s.prime}, {"order", s.order}, {"cyclic", s.cyclic},
                                 {"quaternion", s.quaternion}, {"pass", s.pass}});
        }
        json w{{"group", name},   {"order", k.order()},           {"cut", c.cut},
               {"sylow", sylow},  {"sylow_pass", c.sylow},        {"unique_involution_or_odd", c.involution},
               {"frobenius_subgroup", c.frobenius_subgroup.found}};
        if (c.frobenius_subgroup.found) {
            w["frobenius_subgroup_order"] = c.frobenius_subgroup.subgroup_order;
            w["frobenius_subgroup_kernel_order"] = c.frobenius_subgroup.kernel_order;
        }
        return w;
    };

    const std::vector<std::string> listed{"cyclic(2)", "cyclic(3)", "cyclic(4)", "cyclic(6)",
                                          "q8",        "c3c4",      "sl23",      "q8xc3"};
    auto good = parallel_map(listed.size(), opts.jobs, [&](std::size_t i) -> Assertion {
        const std::string claim = listed[i] + " is cut and passes the Sylow, involution and subgroup criteria";
        try {
            PermutationGroup k = corpus_group(listed[i]);
            Criteria c = evaluate(k);
            return check(claim, anchor, c.cut && c.sylow && c.involution && !c.frobenius_subgroup.found,
                         criteria_json(listed[i], k, c));
        } catch (const std::exception& e) {
            return error_assertion(claim, anchor, listed[i], e);
        }
    });
    for (auto& a : good) r.assertions.push_back(std::move(a));

    // The footnote lists seven candidates; the fifth and the seventh coincide.
    const std::vector<std::string> excluded{"meta(3,2,2)", "meta(5,4,2)", "meta(7,3,2)", "meta(7,6,3)",
                                            "dp(cyclic(2),meta(7,3,2))", "meta(15,4,2)", "dp(cyclic(2),meta(7,3,2))"};
    std::vector<std::size_t> distinct;
    for (std::size_t i = 0; i < excluded.size(); ++i) {
        if (std::find(excluded.begin(), excluded.begin() + static_cast<std::ptrdiff_t>(i), excluded[i]) ==
            excluded.begin() + static_cast<std::ptrdiff_t>(i)) {
            distinct.push_back(i);
        }
    }
    auto bad = parallel_map(distinct.size(), opts.jobs, [&](std::size_t j) -> Assertion {
        const std::string& name = excluded[distinct[j]];
        const std::string claim = name + " fails at least one complement criterion";
        try {
            PermutationGroup k = corpus_group(name);
            Criteria c = evaluate(k);
            json w = criteria_json(name, k, c);
            json failing = json::array();
            if (!c.sylow) failing.push_back("sylow_structure");
            if (!c.involution) failing.push_back("unique_involution");
            if (c.frobenius_subgroup.found) failing.push_back("frobenius_subgroup");
            w["failing_criteria"] = failing;
            return check(claim, anchor, !failing.empty(), std::move(w));
        } catch (const std::exception& e) {
            return error_assertion(claim, anchor, name, e);
        }
    });
    for (auto& a : bad) r.assertions.push_back(std::move(a));
    r.assertions.push_back(check("the excluded list names " + std::to_string(distinct.size()) + " distinct groups",
                                 anchor, distinct.size() == 6,
                                 json{{"listed", excluded.size()}, {"distinct", distinct.size()},
                                      {"repeated", "dp(cyclic(2),meta(7,3,2))"}}));
    return r;
}

SuiteReport suite_theorem2(const VerifyOptions& opts)
{
    SuiteReport r{"theorem2", {}, 0};
    const std::string anchor = "cut Frobenius groups";
    const std::size_t family_limit = std::max(opts.max_order, kFamilyOrderLimit);

    // Positive families.
    std::vector<std::string> positive;
    for (const char* l : {"a", "b", "c", "d", "e", "f"}) {
        for (int p = 1; p <= 2; ++p) positive.push_back(std::string("fam(") + l + "," + std::to_string(p) + ")");
    }
    for (const char* d : {"fam(alpha)", "fam(beta)", "fam(gamma)", "fam(delta)", "fam(odd-7group,1)",
                          "fam(odd-7group,2)", "fam(abelian-kernel,2,0)", "fam(abelian-kernel,0,2)",
                          "fam(abelian-kernel,2,2)"}) {
        positive.push_back(d);
    }
    auto pos = parallel_map(positive.size(), opts.jobs, [&](std::size_t i) -> Assertion {
        const std::string& name = positive[i];
        const std::string claim = name + " is a cut Frobenius group";
        try {
            PermutationGroup g = corpus_group(name);
            if (!fits(g, family_limit)) return too_large(claim, anchor, name, family_limit);
            return cut_frobenius(name, g, true, claim, anchor);
        } catch (const std::exception& e) {
            return error_assertion(claim, anchor, name, e);
        }
    });
    for (auto& a : pos) r.assertions.push_back(std::move(a));

    for (std::size_t d = 1; d <= 2; ++d) {
        const std::string claim = "t -> t^5 is an isomorphism W_1^" + std::to_string(d) + " x| C_6 -> W_2^" +
                                  std::to_string(d) + " x| C_6 and back";
        try {
            auto f = witness_isomorphism_w1_w2(d);
            auto b = witness_isomorphism_w2_w1(d);
            r.assertions.push_back(check(claim, anchor, f.is_bijective() && b.is_bijective(),
                                         json{{"d", d}, {"order", f.source().order()}, {"partial_verification", true},
                                              {"note", "uniqueness up to isomorphism is witnessed, not decided"}}));
        } catch (const std::exception& e) {
            r.assertions.push_back(error_assertion(claim, anchor, "W_1^" + std::to_string(d), e));
        }
    }

    // Diagonal copies: condition (3) against V^s x| K for s = 2, 3.
    auto copies = [&](const std::string& label, ModuleAction act, bool expected) {
        const std::string claim = "copies criterion for the " + label + " module is " + (expected ? "true" : "false") +
                                  " and agrees with V^s x| K for s = 2, 3";
        try {
            act.s = 1;
            const bool cond3 = copies_criterion(act);
            const UnitSubgroup zg = zg_subgroup(act);
            json w{{"module", module_descriptor(act)}, {"zg", zg.elements}, {"copies_criterion", cond3}};
            bool consistent = cond3 == expected;
            json powers = json::array();
            for (std::size_t s = 2; s <= 3; ++s) {
                ModuleAction a = act;
                a.s = s;
                std::uint64_t order = a.K.order();
                for (std::size_t i = 0; i < a.d * s; ++i) order *= a.p;
                const std::string name = module_descriptor(a);
                if (order > family_limit) {
                    powers.push_back(json{{"group", name}, {"s", s}, {"order", order},
                                          {"skipped", "order exceeds " + std::to_string(family_limit)}});
                    continue;
                }
                PermutationGroup g = corpus_group(name);
                g.materialize(family_limit);
                const CutResult cut = cut_by_classes(g.classes());
                json e{{"group", name}, {"s", s}, {"order", order}, {"cut", cut.cut}};
                bool frob = true;
                if (cut.cut) {
                    auto st = detect_frobenius(g);
                    frob = is_frobenius(st);
                    e["frobenius"] = frob;
                } else {
                    e["class_witness"] = cut_witness_json(g.classes(), cut);
                }
                consistent = consistent && (cut.cut && frob) == cond3;
                powers.push_back(std::move(e));
            }
            w["diagonal_powers"] = powers;
            r.assertions.push_back(check(claim, anchor, consistent, std::move(w)));
        } catch (const std::exception& e) {
            r.assertions.push_back(error_assertion(claim, anchor, label, e));
        }
    };
    copies("fam(e) C_6 on F_7", *family_module({"e", {1}}), true);
    copies("Markel Q_8 on F_5^2", *family_module({"alpha", {}}), false);

    // Negative cases.
    try {
        const std::string name = "sd(7,2,c3c4,1)";
        PermutationGroup g = corpus_group(name);
        auto s = detect_frobenius(g);
        const CutResult cut = cut_by_classes(g.classes());
        const CharacterTable t = character_table(g);
        json rows = json::array();
        for (std::size_t i = 0; i < t.fields.size(); ++i) {
            if (t.fields[i].kind == FieldDescriptor::Kind::HigherDegree) {
                rows.push_back(json{{"row", i}, {"degree", t.degrees[i]}, {"field_degree", t.fields[i].d},
                                    {"field", t.fields[i].to_string()}});
            }
        }
        const std::size_t cubic3 = count_fields(t, FieldDescriptor::Kind::HigherDegree, 3);
        json w{{"group", name}, {"order", g.order()}, {"cut", cut.cut}, {"higher_degree_3_characters", cubic3},
               {"rows", rows}, {"fields", field_counts(t)}};
        w.update(frobenius_json(s));
        if (cut.witness) w["class_witness"] = cut_witness_json(g.classes(), cut);
        r.assertions.push_back(check("C_7^2 x| (C_3 x| C_4) is Frobenius, not cut, with at least three characters of "
                                     "cubic field",
                                     anchor, is_frobenius(s) && !cut.cut && cubic3 >= 3, std::move(w)));
    } catch (const std::exception& e) {
        r.assertions.push_back(error_assertion("order 588 negative case", anchor, "sd(7,2,c3c4,1)", e));
    }
    try {
        const std::string name = module_descriptor(q8xc3_f5_module());
        PermutationGroup g = corpus_group(name);
        g.materialize(family_limit);
        const CutResult cut = cut_by_classes(g.classes());
        const CharacterTable t = character_table(g);
        const std::size_t rq5 = count_fields(t, FieldDescriptor::Kind::RealQuadratic, 5);
        json w{{"group", name}, {"order", g.order()}, {"cut", cut.cut}, {"real_quadratic_5_characters", rq5},
               {"fields", field_counts(t)}};
        if (cut.witness) w["class_witness"] = cut_witness_json(g.classes(), cut);
        r.assertions.push_back(check("C_5^4 x| (Q_8 x C_3) is not cut and has exactly 20 characters with field Q(sqrt 5)",
                                     anchor, !cut.cut && rq5 == 20, std::move(w)));
    } catch (const std::exception& e) {
        r.assertions.push_back(error_assertion("order 15000 negative case", anchor, "q8xc3 module", e));
    }
    for (std::uint64_t rr : units_of_order(15, 4)) {
        if (mod_pow(rr, 2, 15) == 1) continue;
        const std::string name = canonical_descriptor("meta(15,4," + std::to_string(rr) + ")");
        const std::string claim = name + " is not a cut Frobenius group";
        try {
            PermutationGroup g = corpus_group(name);
            auto s = detect_frobenius(g);
            const CutResult cut = cut_by_classes(g.classes());
            json w{{"group", name}, {"cut", cut.cut}};
            w.update(frobenius_json(s));
            r.assertions.push_back(check(claim, anchor, !(is_frobenius(s) && cut.cut), std::move(w)));
        } catch (const std::exception& e) {
            r.assertions.push_back(error_assertion(claim, anchor, name, e));
        }
    }

    // Odd complement with non-abelian kernel.
    struct Odd {
        std::string group;
        std::string kernel;
        std::function<Homomorphism(const PermutationGroup&)> aut;
    };
    const std::vector<Odd> odd{
        {"fam(odd-2group,1)", "xgroup",
         [](const PermutationGroup& x) {
             const auto& g = x.generators();
             return check_automorphism(x, {g[0] * g[1], g[0], g[2].pow(3) * g[3].pow(3), g[2]});
         }},
        {"fam(odd-2group,2)", "ygroup", [](const PermutationGroup& y) { return fpf_search_order3(y); }},
        {"fam(odd-7group)", "heis7",
         [](const PermutationGroup& p) { return fpf_search_order3(p, CyclicFilter::UpToConjugacy); }},
    };
    auto odd_parts = parallel_map(odd.size(), opts.jobs, [&](std::size_t i) -> std::vector<Assertion> {
        const Odd& o = odd[i];
        std::vector<Assertion> out;
        const std::string claim = o.group + " is a cut Frobenius group";
        try {
            PermutationGroup g = corpus_group(o.group);
            out.push_back(cut_frobenius(o.group, g, true, claim, anchor));
            PermutationGroup f = corpus_group(o.kernel);
            Homomorphism aut = o.aut(f);
            KernelStructureReport k = theorem2_kernel_structure(f, aut);
            json w{{"group", o.group}, {"kernel", o.kernel}, {"kernel_order", f.order()}};
            w["report"] = kernel_report_json(k);
            out.push_back(check(o.kernel + " with its order 3 automorphism passes the kernel structure checks", anchor,
                                k.pass(), std::move(w)));
        } catch (const std::exception& e) {
            out.push_back(error_assertion(claim, anchor, o.group, e));
        }
        return out;
    });
    append(r.assertions, std::move(odd_parts));
    return r;
}

SuiteReport suite_camina(const VerifyOptions& opts)
{
    SuiteReport r{"camina", {}, 0};
    const std::string anchor = "cut Camina groups";
    struct Case {
        std::string group;
        bool camina;
        bool cut;
        std::string note;
    };
    const std::vector<Case> cases{
        {"q8", true, true, "Camina 2-group"},
        {"mod(3,2,cyclic(3),1;1,1,0,1)", true, true, "extraspecial 3-group of exponent 3"},
        {"mod(5,2,cyclic(5),1;1,1,0,1)", true, false, "Camina 5-group"},
        {"perm(3;(0,1);(0,1,2))", true, true, "C_3 x| C_2"},
        {"fam(a,2)", true, true, "C_3^2 x| C_2"},
        {"fam(b,1)", true, true, "C_3^2 x| C_4, block action"},
        {"fam(b,2)", true, true, "C_3^4 x| C_4, block action"},
        {"fam(c,1)", true, true, "C_3^2 x| Q_8"},
        {"fam(alpha)", true, true, "C_5^2 x| Q_8"},
        {"fam(abelian-kernel,2,2)", true, true, "(C_2^2 x C_4^2) x| C_3"},
        {"fam(abelian-kernel,0,2)", true, true, "C_4^2 x| C_3"},
        {"fam(odd-7group,1)", true, true, "C_7 x| C_3, scalar"},
        {"fam(odd-7group,2)", true, true, "C_7^2 x| C_3, scalar"},
        {"fam(d,1)", true, true, "C_5 x| C_4, scalar"},
        {"fam(d,2)", true, true, "C_5^2 x| C_4, scalar"},
        {"fam(e,1)", true, true, "C_7 x| C_6, scalar"},
        {"fam(e,2)", true, true, "C_7^2 x| C_6, scalar"},
        {"mod(5,2,cyclic(4),1;2,0,0,3)", true, false, "C_5^2 x| C_4, non-scalar action"},
        {"fam(odd-7group)", true, true, "non-abelian 7-group kernel"},
        {"fam(odd-2group,1)", true, true, "non-abelian 2-group kernel"},
        {"cyclic(4)", false, true, "abelian"},
    };
    auto parts = parallel_map(cases.size(), opts.jobs, [&](std::size_t i) -> Assertion {
        const Case& c = cases[i];
        const std::string claim = c.group + (c.camina ? " is Camina" : " is not Camina") + " and " +
                                  (c.cut ? "cut" : "not cut");
        try {
            PermutationGroup g = corpus_group(c.group);
            const bool camina = is_camina(g);
            const CutResult cut = cut_by_classes(g.classes());
            json w{{"group", g.descriptor()}, {"order", g.order()}, {"camina", camina}, {"cut", cut.cut}, {"note", c.note}};
            if (cut.witness) w["class_witness"] = cut_witness_json(g.classes(), cut);
            return check(claim, anchor, camina == c.camina && cut.cut == c.cut, std::move(w));
        } catch (const std::exception& e) {
            return error_assertion(claim, anchor, c.group, e);
        }
    });
    for (auto& a : parts) r.assertions.push_back(std::move(a));

    // The scalar-action condition on complements of C_p^n kernels.
    struct Scalar {
        std::string label;
        std::uint64_t param;
        bool scalar;
    };
    for (const Scalar& s : {Scalar{"d", 1, true}, Scalar{"d", 2, true}, Scalar{"e", 1, true}, Scalar{"e", 2, true},
                            Scalar{"odd-7group", 2, true}, Scalar{"b", 1, false}}) {
        const std::string name = family_descriptor_string({s.label, {s.param}});
        const std::string claim = std::string("complement generator of ") + name + (s.scalar ? " acts" : " does not act") +
                                  " as a scalar on the kernel";
        try {
            ModuleAction act = *family_module({s.label, {s.param}});
            bool scalar = true;
            for (const auto& m : act.matrices) scalar = scalar && m.scalar_value().has_value();
            r.assertions.push_back(check(claim, anchor, scalar == s.scalar,
                                         json{{"group", name}, {"scalar", scalar}, {"module", module_descriptor(act)}}));
        } catch (const std::exception& e) {
            r.assertions.push_back(error_assertion(claim, anchor, name, e));
        }
    }

    try {
        PermutationGroup a4 = corpus_group("fam(abelian-kernel,2,0)");
        const bool camina = is_camina(a4);
        const bool cut = is_cut_by_classes(a4);
        const bool frob = is_frobenius(detect_frobenius(a4));
        r.assertions.push_back(skip("A_4 = C_2^2 x| C_3 and the parameter range n, m >= 1", anchor,
                                    "the stated range excludes A_4 although it is a cut Camina Frobenius group; "
                                    "flags recorded, neither reading asserted",
                                    json{{"group", "fam(abelian-kernel,2,0)"}, {"camina", camina}, {"cut", cut},
                                         {"frobenius", frob}}));
    } catch (const std::exception& e) {
        r.assertions.push_back(error_assertion("A_4 flags", anchor, "fam(abelian-kernel,2,0)", e));
    }
    return r;
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"criteria_equivalence", "theorem1", "spectra_remark",
                                                "complements",          "theorem2", "camina"};
    return names;
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& opts)
{
    using Fn = SuiteReport (*)(const VerifyOptions&);
    static const std::map<std::string, Fn> suites{{"criteria_equivalence", suite_criteria_equivalence},
                                                  {"theorem1", suite_theorem1},
                                                  {"spectra_remark", suite_spectra_remark},
                                                  {"complements", suite_complements},
                                                  {"theorem2", suite_theorem2},
                                                  {"camina", suite_camina}};
    auto it = suites.find(name);
    if (it == suites.end()) throw Error(ErrorKind::UnknownName, "suite '" + name + "'");
    const auto start = std::chrono::steady_clock::now();
    SuiteReport r = it->second(opts);
    r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<SuiteReport> run_suites(const std::string& name, const VerifyOptions& opts)
{
    std::vector<SuiteReport> out;
    if (name == "all") {
        for (const auto& n : suite_names()) out.push_back(run_suite(n, opts));
    } else {
        out.push_back(run_suite(name, opts));
    }
    return out;
}

json to_json(const SuiteReport& r, bool timings)
{
    json assertions = json::array();
    for (const auto& a : r.assertions) {
        json j{{"claim", a.claim}, {"anchor", a.anchor}, {"status", to_string(a.status)}, {"witness", a.witness}};
        if (a.status == Status::Skipped) j["reason"] = a.reason;
        assertions.push_back(std::move(j));
    }
    json out{{"suite", r.suite},
             {"passed", r.passed()},
             {"counts",
              {{"pass", r.count(Status::Pass)}, {"fail", r.count(Status::Fail)}, {"skipped", r.count(Status::Skipped)}}},
             {"assertions", assertions}};
    if (timings) out["elapsed_seconds"] = r.elapsed_seconds;
    return out;
}

json to_json(const std::vector<SuiteReport>& reports, bool timings)
{
    json suites = json::array();
    bool passed = true;
    for (const auto& r : reports) {
        suites.push_back(to_json(r, timings));
        passed = passed && r.passed();
    }
    return json{{"schema_version", 1}, {"passed", passed}, {"suites", suites}};
}

} // namespace cutkit
