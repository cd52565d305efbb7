#include "../oracle.hpp"
#include "helpers.hpp"

#include "cutkit/chartab.hpp"
#include "cutkit/rationality.hpp"

using namespace cutkit;

namespace {

ElementIndex element_of_order(const PermutationGroup& g, std::uint64_t n)
{
    for (ElementIndex i = 0; i < g.order(); ++i) {
        if (g.table().order_of(i) == n) return i;
    }
    throw std::runtime_error("no element of that order");
}

// x^k ~ x or x^-1 for all k coprime to o(x), straight from conjugation.
bool isr_direct(const PermutationGroup& g, ElementIndex x)
{
    const ElementTable& t = g.table();
    const std::uint64_t n = t.order_of(x);
    for (std::uint64_t k = 1; k < std::max<std::uint64_t>(n, 2); ++k) {
        if (oracle::gcd(k, n) != 1) continue;
        const ElementIndex y = t.power(x, static_cast<std::int64_t>(k));
        bool found = false;
        for (ElementIndex h = 0; h < t.size() && !found; ++h) {
            const ElementIndex c = t.conjugate(x, h);
            found = c == y || c == t.inverse(y);
        }
        if (!found) return false;
    }
    return true;
}

} // namespace

TEST(Rationality, UnitGroups)
{
    EXPECT_EQ(unit_group(7).size(), 6u);
    EXPECT_EQ(unit_group(15).size(), 8u);
    EXPECT_EQ(unit_group(1).size(), 1u);
    EXPECT_EQ(unit_group(2).size(), 1u);
    EXPECT_EQ(tau(7), 6u);
}

TEST(Rationality, LiftCoprime)
{
    const std::uint64_t k = lift_coprime(2, 5, 40);
    EXPECT_EQ(k % 5, 2u);
    EXPECT_EQ(oracle::gcd(k, 40), 1u);
    EXPECT_EQ(lift_coprime(1, 7, 100), 1u);
    const std::uint64_t k3 = lift_coprime(3, 4, 12);
    EXPECT_EQ(k3 % 4, 3u);
    EXPECT_NE(k3 % 3, 0u);
    EXPECT_KIND(lift_coprime(2, 4, 12), NotCoprimeInput);
}

TEST(Rationality, BGroups)
{
    PermutationGroup m = G("meta(7,3,2)");
    const UnitSubgroup b = bg_subgroup(m, element_of_order(m, 7));
    EXPECT_EQ(b.elements, (std::vector<std::uint64_t>{1, 2, 4}));
    EXPECT_EQ(b.index(), 2u);
    EXPECT_FALSE(b.contains_tau());

    PermutationGroup q8 = G("q8");
    EXPECT_TRUE(bg_subgroup(q8, element_of_order(q8, 4)).is_full());
    EXPECT_EQ(bg_subgroup(q8, element_of_order(q8, 2)).size(), 1u);
}

TEST(Rationality, ElementTypes)
{
    PermutationGroup m = G("meta(7,3,2)");
    const ClassData& cd = m.classes();
    const ElementIndex x = element_of_order(m, 7);
    ElementFlags f = element_type(cd, cd.class_of(x));
    EXPECT_TRUE(f.inverse_semi_rational);
    EXPECT_FALSE(f.rational);
    EXPECT_TRUE(is_isr_element(m, x));

    PermutationGroup c5 = G("cyclic(5)");
    const ElementIndex y = element_of_order(c5, 5);
    ElementFlags g = element_type(c5.classes(), c5.classes().class_of(y));
    EXPECT_FALSE(g.inverse_semi_rational);
    EXPECT_FALSE(g.semi_rational);

    // D_5: x ~ x^4 and x^2 ~ x^3, so m = 2 works but x^2 is not conjugate to x^-1.
    PermutationGroup d5 = G("perm(5;(0,1,2,3,4);(1,4)(2,3))");
    ElementFlags h = element_type(d5.classes(), d5.classes().class_of(element_of_order(d5, 5)));
    EXPECT_FALSE(h.inverse_semi_rational);
    EXPECT_TRUE(h.semi_rational);
    ASSERT_TRUE(h.semi_rational_witness.has_value());
    EXPECT_EQ(*h.semi_rational_witness, 2u);

    PermutationGroup s = s3();
    for (std::size_t c = 0; c < s.classes().class_count(); ++c) EXPECT_TRUE(element_type(s.classes(), c).rational);
}

TEST(Rationality, IsrRoutesAgree)
{
    for (const char* d : {"meta(7,3,2)", "sl23", "fam(e,1)", "c3c4", "meta(5,4,2)", "sl25"}) {
        PermutationGroup g = G(d);
        const ClassData& cd = g.classes();
        for (std::size_t c = 0; c < cd.class_count(); ++c) {
            const ElementFlags f = element_type(cd, c);
            EXPECT_EQ(f.inverse_semi_rational, isr_direct(g, cd.rep(c))) << d << " class " << c;
            EXPECT_EQ(f.inverse_semi_rational, is_isr_element(g, cd.rep(c))) << d;
            if (f.rational) EXPECT_TRUE(f.inverse_semi_rational);
            if (f.inverse_semi_rational) EXPECT_TRUE(f.semi_rational);
        }
    }
}

TEST(Rationality, CutDecisionAgainstBruteForce)
{
    for (const char* d : {"perm(3;(0,1);(0,1,2))", "cyclic(5)", "cyclic(6)", "q8", "meta(7,3,2)", "sl23", "sl25",
                          "c3c4", "fam(alpha)", "fam(d,1)", "sd(7,2,c3c4,1)", "meta(15,4,2)", "dp(q8,cyclic(3))"}) {
        PermutationGroup g = G(d);
        EXPECT_EQ(is_cut_by_classes(g), oracle::is_cut(g.table())) << d;
        EXPECT_EQ(rationality_report(g.classes()).rational_group, oracle::is_rational(g.table())) << d;
    }
    EXPECT_TRUE(is_cut_by_classes(s3()));
    EXPECT_FALSE(is_cut_by_classes(G("cyclic(5)")));
    EXPECT_FALSE(is_cut_by_classes(G("sl25")));
    const CutResult r = cut_by_classes(G("cyclic(5)").classes());
    ASSERT_TRUE(r.witness.has_value());
}

TEST(Rationality, ZgAndCopies)
{
    ModuleAction c6{7, 1, G("cyclic(6)"), {FpMatrix::scalar(1, 7, 3)}, 1};
    EXPECT_EQ(zg_subgroup(c6).size(), 6u);
    EXPECT_TRUE(copies_criterion(c6));

    ModuleAction markel = *family_module({"alpha", {}});
    EXPECT_EQ(zg_subgroup(markel).elements, (std::vector<std::uint64_t>{1, 4}));
    EXPECT_FALSE(copies_criterion(markel));

    ModuleAction sl = rep_search(G("sl23"), 5, 2, true);
    EXPECT_EQ(zg_subgroup(sl).elements, (std::vector<std::uint64_t>{1, 4}));

    ModuleAction c2{3, 1, G("cyclic(2)"), {FpMatrix::scalar(1, 3, 2)}, 1};
    EXPECT_TRUE(copies_criterion(c2));

    ModuleAction even{2, 2, G("cyclic(3)"), {FpMatrix::from_rows(2, {{0, 1}, {1, 1}})}, 1};
    EXPECT_KIND(copies_criterion(even), EvenPrime);
}

TEST(Rationality, ProductCutCheck)
{
    const std::vector<std::pair<const char*, const char*>> pairs{
        {"cyclic(2)", "cyclic(3)"}, {"cyclic(5)", "cyclic(5)"},  {"q8", "cyclic(3)"},      {"q8", "q8"},
        {"perm(3;(0,1);(0,1,2))", "cyclic(4)"}, {"meta(7,3,2)", "cyclic(2)"}, {"sl23", "cyclic(2)"},
        {"fam(d,1)", "cyclic(3)"}, {"c3c4", "perm(3;(0,1);(0,1,2))"}, {"meta(7,3,2)", "q8"},
        {"cyclic(4)", "cyclic(3)"}, {"fam(alpha)", "perm(3;(0,1);(0,1,2))"}};
    for (const auto& [a, b] : pairs) {
        PermutationGroup ga = G(a);
        PermutationGroup gb = G(b);
        const ClassData* cds[] = {&ga.classes(), &gb.classes()};
        const ProductCutResult r = product_cut_check(cds);
        PermutationGroup prod = direct_product(ga, gb);
        EXPECT_EQ(r.cut, is_cut_by_classes(prod)) << a << " x " << b;
        EXPECT_EQ(r.cut, oracle::is_cut(prod.table())) << a << " x " << b;
    }
    PermutationGroup c5 = G("cyclic(5)");
    const ClassData* two[] = {&c5.classes(), &c5.classes()};
    EXPECT_FALSE(product_cut_check(two).cut);
}

TEST(Rationality, P1Mod4Shortcut)
{
    for (const char* d : {"fam(d,1)", "fam(alpha)", "q8", "sl25", "cyclic(5)", "meta(15,4,2)"}) {
        EXPECT_TRUE(p1mod4_shortcut_check(G(d).classes())) << d;
    }
    PermutationGroup f = G("fam(d,1)");
    const ClassData& cd = f.classes();
    for (std::size_t c = 0; c < cd.class_count(); ++c) {
        if (cd.rep_order(c) == 5) {
            EXPECT_TRUE(element_type(cd, c).rational);
            EXPECT_TRUE(element_type(cd, c).inverse_semi_rational);
        }
    }
}

TEST(Rationality, RationalIffGaloisFixed)
{
    for (const char* d : {"perm(3;(0,1);(0,1,2))", "q8", "meta(7,3,2)", "sl23", "fam(alpha)", "cyclic(3)"}) {
        PermutationGroup g = G(d);
        const CharacterTable t = character_table(g);
        bool fixed = true;
        for (const auto& f : t.fields) fixed = fixed && f.kind == FieldDescriptor::Kind::Rational;
        EXPECT_EQ(rationality_report(g.classes()).rational_group, fixed) << d;
    }
}
