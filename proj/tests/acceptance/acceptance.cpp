// One line per acceptance criterion; exit status 1 if any criterion fails.

#include "cutkit/chartab.hpp"
#include "cutkit/constructors.hpp"
#include "cutkit/descriptor.hpp"
#include "cutkit/frobenius.hpp"
#include "cutkit/rationality.hpp"
#include "cutkit/verify.hpp"

#include "../oracle.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace cutkit;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void criterion(int n, const std::string& title, const std::function<Outcome()>& body)
{
    const auto start = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (!o.pass) ++failures;
    std::ostringstream line;
    line.precision(3);
    line << (o.pass ? "PASS" : "FAIL") << "  criterion " << n << ": " << title << " [" << o.detail << "; " << secs
         << " s]";
    std::cout << line.str() << std::endl;
}

std::size_t count_field(const CharacterTable& t, FieldDescriptor::Kind kind, std::uint64_t d)
{
    std::size_t n = 0;
    for (const auto& f : t.fields) n += f.kind == kind && f.d == d;
    return n;
}

bool frobenius(const PermutationGroup& g)
{
    auto s = detect_frobenius(g);
    return s && check_frobenius_structure(*s);
}

const SuiteReport& find(const std::vector<SuiteReport>& all, const std::string& name)
{
    for (const auto& r : all) {
        if (r.suite == name) return r;
    }
    throw std::runtime_error("missing suite " + name);
}

std::uint64_t witness_number(const SuiteReport& r, const std::string& key)
{
    for (const auto& a : r.assertions) {
        if (a.witness.contains(key) && a.witness[key].is_number()) return a.witness[key].get<std::uint64_t>();
    }
    return 0;
}

std::string failing(const SuiteReport& r)
{
    std::string out;
    for (const auto& a : r.assertions) {
        if (a.status == Status::Fail) out += (out.empty() ? "" : " | ") + a.claim;
    }
    return out;
}

std::string counts(const SuiteReport& r)
{
    return std::to_string(r.count(Status::Pass)) + " pass, " + std::to_string(r.count(Status::Fail)) + " fail, " +
           std::to_string(r.count(Status::Skipped)) + " skipped";
}

// Library table rows reindexed by the oracle's classes, sorted.
std::vector<std::vector<Cyclotomic>> reindexed(const CharacterTable& t, const oracle::Classes& c)
{
    std::vector<std::vector<Cyclotomic>> rows;
    for (const auto& row : t.rows) {
        std::vector<Cyclotomic> r;
        for (const auto& members : c.members) r.push_back(row[t.classes().class_of(members[0])]);
        rows.push_back(std::move(r));
    }
    std::sort(rows.begin(), rows.end());
    return rows;
}

} // namespace

int main()
{
    std::cout << "cutkit acceptance" << std::endl;
    VerifyOptions opts;
    const auto t0 = Clock::now();
    const std::vector<SuiteReport> first = run_suites("all", opts);
    const double first_secs = std::chrono::duration<double>(Clock::now() - t0).count();

    criterion(1, "cut by classes agrees with cut by characters on the corpus up to order 1500", [&]() -> Outcome {
        const SuiteReport& r = find(first, "criteria_equivalence");
        const std::uint64_t groups = witness_number(r, "groups");
        const bool ok = r.passed() && groups >= 30 && r.elapsed_seconds <= 600;
        return {ok, std::to_string(groups) + " groups, " + counts(r) + ", " + std::to_string(r.elapsed_seconds) +
                        " s" + (ok ? "" : "; " + failing(r))};
    });

    criterion(2, "C_5^2 x| Q_8 is Frobenius, rational, cut, all character fields rational", []() -> Outcome {
        PermutationGroup g = family({"alpha", {}});
        const bool frob = frobenius(g);
        const bool rational = rationality_report(g.classes()).rational_group;
        const bool oracle_rational = oracle::is_rational(g.table());
        const bool cut = is_cut_by_classes(g);
        const CharacterTable t = character_table(g);
        const std::size_t rat = count_field(t, FieldDescriptor::Kind::Rational, 0);
        const bool ok = g.order() == 200 && frob && rational && oracle_rational && cut && rat == t.rows.size();
        return {ok, "order " + std::to_string(g.order()) + ", frobenius " + std::to_string(frob) + ", rational " +
                        std::to_string(rational) + ", cut " + std::to_string(cut) + ", rational fields " +
                        std::to_string(rat) + "/" + std::to_string(t.rows.size())};
    });

    criterion(3, "C_7^2 x| (C_3 x| C_4) is Frobenius, not cut, with cubic character fields", []() -> Outcome {
        PermutationGroup g = build_group("sd(7,2,c3c4,1)");
        const bool frob = frobenius(g);
        const bool cut = is_cut_by_classes(g);
        const bool oracle_cut = oracle::is_cut(g.table());
        const CharacterTable t = character_table(g);
        const std::size_t cubic = count_field(t, FieldDescriptor::Kind::HigherDegree, 3);
        const bool ok = g.order() == 588 && frob && !cut && !oracle_cut && cubic >= 3;
        return {ok, "order " + std::to_string(g.order()) + ", frobenius " + std::to_string(frob) + ", cut " +
                        std::to_string(cut) + ", HigherDegree(3) characters " + std::to_string(cubic)};
    });

    criterion(4, "C_5^4 x| (Q_8 x C_3) is not cut with exactly 20 fields Q(sqrt 5)", []() -> Outcome {
        PermutationGroup g = module_semidirect(q8xc3_f5_module());
        g.materialize(20000);
        const bool cut = is_cut_by_classes(g);
        const auto start = Clock::now();
        const CharacterTable t = character_table(g);
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        const std::size_t rq5 = count_field(t, FieldDescriptor::Kind::RealQuadratic, 5);
        const bool ok = g.order() == 15000 && !cut && rq5 == 20 && secs <= 300;
        return {ok, "order " + std::to_string(g.order()) + ", cut " + std::to_string(cut) + ", RealQuadratic(5) " +
                        std::to_string(rq5) + ", table " + std::to_string(secs) + " s"};
    });

    criterion(5, "SL(2,5) has a character with field Q(sqrt 5) and is not cut", []() -> Outcome {
        PermutationGroup g = named_group("sl25");
        const bool cut = is_cut_by_classes(g);
        const CharacterTable t = character_table(g);
        const std::size_t rq5 = count_field(t, FieldDescriptor::Kind::RealQuadratic, 5);
        const bool ok = g.order() == 120 && !cut && !oracle::is_cut(g.table()) && rq5 >= 1;
        return {ok, "cut " + std::to_string(cut) + ", RealQuadratic(5) " + std::to_string(rq5)};
    });

    criterion(6, "positive families are cut Frobenius; diagonal power criterion consistent", []() -> Outcome {
        std::vector<std::string> names;
        for (const char* l : {"a", "b", "c", "d", "e", "f"}) {
            for (int p = 1; p <= 2; ++p) names.push_back(std::string("fam(") + l + "," + std::to_string(p) + ")");
        }
        for (const char* l : {"alpha", "beta", "gamma", "delta"}) names.push_back(std::string("fam(") + l + ")");
        std::string bad;
        for (const auto& n : names) {
            PermutationGroup g = build_group(n);
            g.materialize(60000);
            if (!(frobenius(g) && is_cut_by_classes(g))) bad += n + " ";
        }
        // Case (e) module: conditions (1) and (2) through s = 2, 3, condition (3) directly.
        ModuleAction e = *family_module({"e", {1}});
        bool e_ok = copies_criterion(e);
        for (std::size_t s = 2; s <= 3; ++s) {
            ModuleAction a = e;
            a.s = s;
            PermutationGroup g = module_semidirect(a);
            e_ok = e_ok && frobenius(g) && is_cut_by_classes(g);
        }
        ModuleAction m = *family_module({"alpha", {}});
        const bool markel3 = copies_criterion(m);
        m.s = 2;
        PermutationGroup v2 = module_semidirect(m);
        const bool v2_cut = is_cut_by_classes(v2);
        const bool ok = bad.empty() && e_ok && !markel3 && !v2_cut && v2.order() == 5000;
        return {ok, std::to_string(names.size()) + " families" + (bad.empty() ? "" : ", failing " + bad) +
                        ", (e) module all conditions " + std::to_string(e_ok) + ", Markel condition (3) " +
                        std::to_string(markel3) + ", V^2 x| Q_8 cut " + std::to_string(v2_cut)};
    });

    criterion(7, "odd complement groups X, Y, Heisenberg are cut Frobenius", []() -> Outcome {
        PermutationGroup x = build_group("fam(odd-2group,1)");
        PermutationGroup y = build_group("fam(odd-2group,2)");
        PermutationGroup h = build_group("fam(odd-7group)");
        const bool xo = x.order() == 192 && frobenius(x) && is_cut_by_classes(x);
        PermutationGroup yk = named_group("ygroup");
        Homomorphism beta = fpf_search_order3(yk);
        const bool yo = frobenius(y) && is_cut_by_classes(y) && automorphism_order(beta) == 3 && is_fpf(beta);
        PermutationGroup hk = named_group("heis7");
        Homomorphism aut = fpf_search_order3(hk, CyclicFilter::UpToConjugacy);
        const KernelStructureReport rep = theorem2_kernel_structure(hk, aut);
        const bool ho = h.order() == 1029 && frobenius(h) && is_cut_by_classes(h) && oracle::is_cut(h.table()) &&
                        rep.pass();
        return {xo && yo && ho, "xgroup " + std::to_string(xo) + ", ygroup " + std::to_string(yo) + " (order " +
                                    std::to_string(y.order()) + "), heis7 " + std::to_string(ho) +
                                    ", kernel checks " + std::to_string(rep.checks.size())};
    });

    criterion(8, "spectra of solvable cut groups lie in {2,3,5,7}; quotients of cut groups are cut", [&]() -> Outcome {
        const SuiteReport& r = find(first, "theorem1");
        const std::uint64_t q = witness_number(r, "quotient_checks");
        const bool ok = r.passed() && q >= 100;
        return {ok, std::to_string(q) + " quotient checks, " + counts(r) + (ok ? "" : "; " + failing(r))};
    });

    criterion(9, "all eight spectra realized; triple product cut without materialization", [&]() -> Outcome {
        const SuiteReport& r = find(first, "spectra_remark");
        const bool ok = r.passed() && r.count(Status::Pass) >= 9 && r.elapsed_seconds <= 60;
        return {ok, counts(r) + ", " + std::to_string(r.elapsed_seconds) + " s" + (ok ? "" : "; " + failing(r))};
    });

    criterion(10, "eight complements pass, excluded candidates each fail a criterion", [&]() -> Outcome {
        const SuiteReport& r = find(first, "complements");
        return {r.passed() && r.count(Status::Pass) >= 14, counts(r) + (r.passed() ? "" : "; " + failing(r))};
    });

    criterion(11, "Dixon-Schneider tables match the eigenvector oracle at two primes", []() -> Outcome {
        std::string detail;
        bool ok = true;
        for (const char* name : {"perm(3;(0,1);(0,1,2))", "q8", "meta(7,3,2)", "sl23"}) {
            PermutationGroup g = build_group(name);
            const CharacterTable t = character_table(g);
            check_orthogonality(t);
            const std::uint64_t e = g.classes().exponent();
            const std::uint64_t q1 = oracle::table_prime(g.order(), e);
            const std::uint64_t q2 = oracle::table_prime(g.order(), e, q1);
            const oracle::Table o1 = oracle::character_table(g.table(), q1);
            const oracle::Table o2 = oracle::character_table(g.table(), q2);
            const CharacterTable t2 = character_table_with_prime(g, q2);
            const bool same = t.prime == q1 && o1.rows == o2.rows && reindexed(t, o1.classes) == o1.rows &&
                              reindexed(t2, o1.classes) == o1.rows;
            ok = ok && same;
            detail += std::string(detail.empty() ? "" : ", ") + name + " q=" + std::to_string(q1) + "/" +
                      std::to_string(q2) + (same ? " match" : " MISMATCH");
        }
        return {ok, detail};
    });

    criterion(12, "two verify all runs give byte-identical JSON", [&]() -> Outcome {
        const std::string a = to_json(first).dump(2);
        const std::vector<SuiteReport> second = run_suites("all", opts);
        const std::string b = to_json(second).dump(2);
        return {a == b, std::to_string(a.size()) + " bytes, first run " + std::to_string(first_secs) + " s"};
    });

    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
    return failures == 0 ? 0 : 1;
}
