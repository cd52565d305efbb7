#include "helpers.hpp"

#include "cutkit/constructors.hpp"
#include "cutkit/frobenius.hpp"
#include "cutkit/pc.hpp"

using namespace cutkit;

TEST(Constructors, Presentations)
{
    for (const PcPresentation& p : {cyclic_presentation(4), q8_presentation(), c3c4_presentation(),
                                    heis7_presentation(), xgroup_presentation(), ygroup_presentation()}) {
        EXPECT_EQ(pc_group(p).order(), p.expected_order());
    }
    PermutationGroup c4 = pc_group(cyclic_presentation(4));
    EXPECT_EQ(c4.order(), 4u);
    EXPECT_EQ(c4.degree(), 4u);
}

TEST(Constructors, NamedGroups)
{
    EXPECT_EQ(G("xgroup").order(), 64u);
    PermutationGroup y = G("ygroup");
    EXPECT_EQ(y.order(), 64u);
    Subgroup z = center(y);
    EXPECT_EQ(z.order(), 4u);
    EXPECT_TRUE(z == derived_subgroup(whole_group(y)));
    EXPECT_EQ(exponent(quotient(y, z).group), 2u);

    PermutationGroup sl23 = G("sl23");
    EXPECT_EQ(sl23.order(), 24u);
    std::size_t involutions = 0;
    for (ElementIndex i = 0; i < sl23.order(); ++i) involutions += sl23.table().order_of(i) == 2;
    EXPECT_EQ(involutions, 1u);

    PermutationGroup c3c4 = G("c3c4");
    EXPECT_EQ(c3c4.order(), 12u);
    EXPECT_EQ(sylow_subgroup(c3c4, 2).order(), 4u);
    EXPECT_TRUE(is_abelian(sylow_subgroup(c3c4, 2).as_group()));
    EXPECT_EQ(exponent(sylow_subgroup(c3c4, 2).as_group()), 4u);

    EXPECT_EQ(G("heis7").order(), 343u);
    EXPECT_EQ(G("sl25").order(), 120u);
    EXPECT_EQ(G("q8xc3").order(), 24u);
    EXPECT_EQ(G("elemab(3,2)").order(), 9u);
    EXPECT_KIND(named_group("nosuch"), UnknownName);
}

TEST(Constructors, ModuleSemidirect)
{
    ModuleAction act{7, 1, G("cyclic(6)"), {FpMatrix::scalar(1, 7, 3)}, 1};
    PermutationGroup g = module_semidirect(act);
    EXPECT_EQ(g.order(), 42u);
    EXPECT_TRUE(detect_frobenius(g).has_value());

    ModuleAction inv{3, 1, G("cyclic(2)"), {FpMatrix::scalar(1, 3, 2)}, 2};
    EXPECT_EQ(module_semidirect(inv).order(), 18u);

    ModuleAction bad{7, 1, G("cyclic(4)"), {FpMatrix::scalar(1, 7, 2)}, 1};
    EXPECT_KIND(validate_action(bad), InvalidAction);
}

TEST(Constructors, RepSearch)
{
    ModuleAction a = rep_search(G("sl23"), 5, 2, true);
    EXPECT_TRUE(is_fixed_point_free(a));
    EXPECT_EQ(module_semidirect(a).order(), 600u);
    ModuleAction b = rep_search(G("c3c4"), 7, 2, true);
    EXPECT_EQ(module_semidirect(b).order(), 588u);
    EXPECT_EQ(rep_search(G("sl23"), 5, 2, true).matrices, a.matrices);
    EXPECT_KIND(rep_search(G("cyclic(4)"), 3, 1, true), NoActionFound);
}

TEST(Constructors, Families)
{
    EXPECT_EQ(family({"e", {1}}).order(), 42u);
    EXPECT_EQ(family({"alpha", {}}).order(), 200u);
    PermutationGroup a4 = family({"abelian-kernel", {2, 0}});
    EXPECT_EQ(a4.order(), 12u);
    EXPECT_TRUE(detect_frobenius(a4).has_value());
    const std::vector<std::pair<FamilyDescriptor, std::size_t>> orders{
        {{"a", {1}}, 6},    {{"a", {2}}, 18},  {{"b", {1}}, 36},   {{"c", {1}}, 72},
        {{"d", {1}}, 20},   {{"d", {2}}, 100},  {{"e", {2}}, 294},  {{"f", {1}}, 1176},
        {{"beta", {}}, 300}, {{"gamma", {}}, 600}, {{"delta", {}}, 1176}};
    for (const auto& [fd, n] : orders) EXPECT_EQ(family(fd).order(), n) << family_descriptor_string(fd);
    EXPECT_KIND(family({"nosuch", {}}), UnknownName);
}

TEST(Constructors, FamilyKernels)
{
    for (const char* l : {"a", "b", "c", "d", "e"}) {
        for (std::uint64_t s = 1; s <= 2; ++s) {
            const FamilyDescriptor fd{l, {s}};
            auto act = family_module(fd);
            ASSERT_TRUE(act.has_value());
            auto st = detect_frobenius(family(fd));
            ASSERT_TRUE(st.has_value()) << l;
            std::size_t kernel = 1;
            for (std::size_t i = 0; i < act->d * act->s; ++i) kernel *= act->p;
            EXPECT_EQ(st->kernel.order(), kernel) << l;
            EXPECT_EQ((st->kernel.order() - 1) % st->complement.order(), 0u);
            EXPECT_TRUE(is_abelian(st->kernel.as_group()));
        }
    }
}

TEST(Constructors, Automorphisms)
{
    PermutationGroup x = G("xgroup");
    const auto& g = x.generators();
    Homomorphism alpha = check_automorphism(x, {g[0] * g[1], g[0], g[2].pow(3) * g[3].pow(3), g[2]});
    EXPECT_EQ(automorphism_order(alpha), 3u);
    EXPECT_TRUE(is_fpf(alpha));
    EXPECT_EQ(semidirect_by_automorphism(x, alpha, 3).order(), 192u);

    Homomorphism id = check_automorphism(x, g);
    EXPECT_EQ(automorphism_order(id), 1u);
    EXPECT_FALSE(is_fpf(id));
    EXPECT_TRUE(fixes_every_cyclic(id));

    PermutationGroup c7 = G("elemab(7,2)");
    std::vector<Perm> inv;
    for (const auto& p : c7.generators()) inv.push_back(p.inverse());
    Homomorphism minus = check_automorphism(c7, inv);
    EXPECT_EQ(automorphism_order(minus), 2u);
    EXPECT_TRUE(is_fpf(minus));
    EXPECT_TRUE(fixes_every_cyclic(minus));

    PermutationGroup s = s3();
    Homomorphism inner = inner_automorphism(s, s.generators()[1]);
    EXPECT_FALSE(is_fpf(inner));

    const Perm r = s.generators()[1];
    EXPECT_KIND(check_automorphism(s, {r, r}), NotAHomomorphism);
}

TEST(Constructors, FpfSearch)
{
    EXPECT_NO_THROW(fpf_search_order3(G("ygroup")));
    Homomorphism v4 = fpf_search_order3(G("elemab(2,2)"));
    EXPECT_EQ(automorphism_order(v4), 3u);
    // An order 3 element of GL(3,2) always has eigenvalue 1.
    EXPECT_KIND(fpf_search_order3(G("elemab(2,3)")), NoneFound);
    EXPECT_KIND(fpf_search_order3(G("cyclic(4)")), NoneFound);

    PermutationGroup h = G("heis7");
    EXPECT_KIND(fpf_search_order3(h, CyclicFilter::Strict), NoneFound);
    Homomorphism aut = fpf_search_order3(h, CyclicFilter::UpToConjugacy);
    EXPECT_TRUE(fixes_every_cyclic_up_to_conjugacy(aut));
    PermutationGroup sd = semidirect_by_automorphism(h, aut, 3);
    EXPECT_EQ(sd.order(), 1029u);
    EXPECT_TRUE(detect_frobenius(sd).has_value());

    PermutationGroup c7 = G("cyclic(7)");
    Homomorphism sq = check_automorphism(c7, {c7.generators()[0].pow(2)});
    PermutationGroup m = semidirect_by_automorphism(c7, sq, 3);
    EXPECT_EQ(m.order(), 21u);
    EXPECT_FALSE(is_abelian(m));
}

TEST(Constructors, WitnessIsomorphisms)
{
    Homomorphism f1 = witness_isomorphism_w1_w2(1);
    EXPECT_EQ(f1.source().order(), 42u);
    EXPECT_TRUE(f1.is_bijective());
    Homomorphism f2 = witness_isomorphism_w1_w2(2);
    EXPECT_EQ(f2.source().order(), 294u);
    Homomorphism round = f1.then(witness_isomorphism_w2_w1(1));
    for (const Perm& p : f1.source().generators()) EXPECT_EQ(round.apply(p), p);
}
