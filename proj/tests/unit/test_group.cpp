#include "../oracle.hpp"
#include "helpers.hpp"

#include "cutkit/group.hpp"
#include "cutkit/numtheory.hpp"

#include <set>

using namespace cutkit;

namespace {

std::multiset<std::size_t> class_sizes(const PermutationGroup& g)
{
    const ClassData& cd = g.classes();
    return {cd.sizes().begin(), cd.sizes().end()};
}

} // namespace

TEST(Group, Orders)
{
    EXPECT_EQ(s3().order(), 6u);
    EXPECT_EQ(G("q8").order(), 8u);
    EXPECT_EQ(G("sd(7,2,sl23,1)").order(), 1176u);
}

TEST(Group, OrderLimit)
{
    PermutationGroup g = G("sl25");
    EXPECT_KIND(g.materialize(100), OrderLimitExceeded);
}

TEST(Group, ClassesAgainstBruteForce)
{
    for (const char* d : {"perm(3;(0,1);(0,1,2))", "q8", "meta(7,3,2)", "sl23", "fam(alpha)", "perm(5;(0,1,2,3,4);(0,1))"}) {
        PermutationGroup g = G(d);
        const oracle::Classes o = oracle::conjugacy_classes(g.table());
        const ClassData& cd = g.classes();
        ASSERT_EQ(cd.class_count(), o.members.size()) << d;
        EXPECT_EQ(cd.exponent(), o.exponent) << d;
        std::vector<std::size_t> image(o.members.size(), SIZE_MAX);
        for (ElementIndex x = 0; x < g.order(); ++x) {
            std::size_t& m = image[o.class_of[x]];
            if (m == SIZE_MAX) m = cd.class_of(x);
            ASSERT_EQ(m, cd.class_of(x)) << d;
        }
    }
    EXPECT_EQ(class_sizes(s3()), (std::multiset<std::size_t>{1, 2, 3}));
    EXPECT_EQ(class_sizes(G("q8")), (std::multiset<std::size_t>{1, 1, 2, 2, 2}));
    EXPECT_EQ(G("meta(7,3,2)").classes().class_count(), 5u);
}

TEST(Group, PowerMaps)
{
    PermutationGroup q8 = G("q8");
    const ClassData& cd = q8.classes();
    for (std::size_t c = 0; c < cd.class_count(); ++c) {
        EXPECT_EQ(cd.power_map(1)[c], c);
        EXPECT_EQ(cd.power_map(cd.exponent() - 1)[c], cd.inverse_class(c));
        if (cd.rep_order(c) == 4) EXPECT_EQ(cd.power_map(3)[c], c);
    }
    PermutationGroup c5 = G("cyclic(5)");
    const ClassData& c5d = c5.classes();
    for (std::size_t c = 0; c < c5d.class_count(); ++c) {
        if (c5d.rep_order(c) == 5) EXPECT_NE(c5d.power_map(2)[c], c);
    }
    EXPECT_KIND(cd.power_map(2), NotCoprime);
}

TEST(Group, PowerMapIsAnAction)
{
    for (const char* d : {"sl23", "meta(7,3,2)", "fam(e,1)", "q8xc3"}) {
        PermutationGroup g = G(d);
        const ClassData& cd = g.classes();
        const std::uint64_t e = cd.exponent();
        for (std::uint64_t a : units_mod(e)) {
            for (std::uint64_t b : units_mod(e)) {
                for (std::size_t c = 0; c < cd.class_count(); ++c) {
                    EXPECT_EQ(cd.power_map(b)[cd.power_map(a)[c]], cd.power_map(a * b % e)[c]) << d;
                }
            }
        }
    }
}

TEST(Group, CentralizerNormalizer)
{
    PermutationGroup g = s3();
    EXPECT_EQ(centralizer(g, Perm::from_cycles(3, {{0, 1, 2}})).order(), 3u);
    PermutationGroup m = G("meta(7,3,2)");
    for (ElementIndex x = 0; x < m.order(); ++x) {
        if (m.table().order_of(x) == 7) {
            EXPECT_EQ(normalizer(m, cyclic_subgroup(m, x)).order(), 21u);
            EXPECT_EQ(centralizer(m, x).order(), 7u);
            break;
        }
    }
}

TEST(Group, DerivedSeries)
{
    auto s = derived_series(s3());
    ASSERT_EQ(s.size(), 3u);
    EXPECT_EQ(s[0].order(), 6u);
    EXPECT_EQ(s[1].order(), 3u);
    EXPECT_EQ(s[2].order(), 1u);
    EXPECT_TRUE(is_solvable(s3()));
    auto q = derived_series(G("q8"));
    EXPECT_EQ(q.back().order(), 1u);
    EXPECT_EQ(q[1].order(), 2u);
    EXPECT_FALSE(is_solvable(G("sl25")));
}

TEST(Group, Sylow)
{
    EXPECT_EQ(sylow_subgroup(s3(), 3).order(), 3u);
    PermutationGroup q8xc3 = G("q8xc3");
    Subgroup p = sylow_subgroup(q8xc3, 2);
    EXPECT_EQ(p.order(), 8u);
    EXPECT_FALSE(is_abelian(p.as_group()));
    EXPECT_EQ(sylow_subgroup(G("sl23"), 2).order(), 8u);
    EXPECT_EQ(sylow_subgroup(G("fam(f,1)"), 7).order(), 49u);
    EXPECT_KIND(sylow_subgroup(s3(), 5), PrimeDoesNotDivideOrder);
}

TEST(Group, Quotients)
{
    PermutationGroup g = s3();
    Quotient q = quotient(g, sylow_subgroup(g, 3));
    EXPECT_EQ(q.group.order(), 2u);
    PermutationGroup m = G("fam(alpha)");
    Quotient mq = quotient(m, sylow_subgroup(m, 5));
    EXPECT_EQ(mq.group.order(), 8u);
    EXPECT_FALSE(is_abelian(mq.group));
    EXPECT_EQ(mq.group.classes().class_count(), 5u);
    Quotient whole = quotient(g, whole_group(g));
    EXPECT_EQ(whole.group.order(), 1u);
    EXPECT_EQ(whole.group.degree(), 1u);
    EXPECT_KIND(quotient(g, sylow_subgroup(g, 2)), NotNormal);
}

TEST(Group, DirectProducts)
{
    PermutationGroup c6 = direct_product(G("cyclic(2)"), G("cyclic(3)"));
    EXPECT_EQ(c6.order(), 6u);
    EXPECT_TRUE(is_abelian(c6));
    EXPECT_EQ(G("dp(q8,cyclic(3))").order(), 24u);
    EXPECT_EQ(G("dp(fam(alpha),meta(7,3,2))").order(), 4200u);
}

TEST(Group, ExponentSpectrum)
{
    EXPECT_EQ(exponent(G("q8")), 4u);
    EXPECT_EQ(prime_spectrum(G("q8")), (std::vector<std::uint64_t>{2}));
    EXPECT_EQ(exponent(G("xgroup")), 4u);
    EXPECT_EQ(exponent(G("heis7")), 7u);
    EXPECT_EQ(prime_spectrum(G("heis7")), (std::vector<std::uint64_t>{7}));
}

TEST(Group, SubgroupLattice)
{
    EXPECT_EQ(subgroup_lattice(G("q8")).size(), 6u);
    EXPECT_EQ(subgroup_lattice(G("cyclic(6)")).size(), 4u);
    EXPECT_EQ(subgroup_lattice(s3()).size(), 6u);
    EXPECT_KIND(subgroup_lattice(G("fam(e,2)")), OrderLimitExceeded);
}

TEST(Group, NormalSubgroups)
{
    EXPECT_EQ(normal_subgroups(s3()).size(), 3u);
    EXPECT_EQ(normal_subgroups(G("q8")).size(), 6u);
}
