#include "../oracle.hpp"
#include "helpers.hpp"

#include "cutkit/chartab.hpp"
#include "cutkit/numtheory.hpp"
#include "cutkit/rationality.hpp"

#include <algorithm>
#include <map>

using namespace cutkit;
using Kind = FieldDescriptor::Kind;

namespace {

std::vector<std::uint64_t> sorted_degrees(const CharacterTable& t)
{
    auto d = t.degrees;
    std::sort(d.begin(), d.end());
    return d;
}

std::size_t count(const CharacterTable& t, Kind k, std::uint64_t d)
{
    return static_cast<std::size_t>(
        std::count_if(t.fields.begin(), t.fields.end(), [&](const FieldDescriptor& f) { return f.kind == k && f.d == d; }));
}

} // namespace

TEST(Chartab, ClassMultCoeffs)
{
    PermutationGroup s = s3();
    const ClassData& cd = s.classes();
    const ClassMultCoeffs a = class_mult_coeffs(cd);
    std::size_t id = 0, tr = 0, rot = 0;
    for (std::size_t c = 0; c < cd.class_count(); ++c) {
        if (cd.rep_order(c) == 1) id = c;
        if (cd.rep_order(c) == 2) tr = c;
        if (cd.rep_order(c) == 3) rot = c;
    }
    for (std::size_t j = 0; j < cd.class_count(); ++j) {
        for (std::size_t k = 0; k < cd.class_count(); ++k) EXPECT_EQ(a[id][j][k], j == k ? 1u : 0u);
    }
    EXPECT_EQ(a[tr][tr][id], 3u);
    EXPECT_EQ(a[tr][tr][rot], 3u);
    EXPECT_EQ(a[tr][tr][tr], 0u);
}

TEST(Chartab, SmallTables)
{
    const CharacterTable s = character_table(s3());
    EXPECT_EQ(sorted_degrees(s), (std::vector<std::uint64_t>{1, 1, 2}));
    EXPECT_EQ(count(s, Kind::Rational, 0), 3u);

    const CharacterTable m = character_table(G("meta(7,3,2)"));
    EXPECT_EQ(sorted_degrees(m), (std::vector<std::uint64_t>{1, 1, 1, 3, 3}));
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
        if (m.degrees[i] == 3) EXPECT_EQ(m.fields[i], (FieldDescriptor{Kind::ImaginaryQuadratic, 7, {}}));
        if (m.degrees[i] == 1 && i != 0) EXPECT_EQ(m.fields[i], (FieldDescriptor{Kind::ImaginaryQuadratic, 3, {}}));
    }
    EXPECT_EQ(m.fields[0].kind, Kind::Rational);

    const CharacterTable c3 = character_table(G("cyclic(3)"));
    EXPECT_EQ(count(c3, Kind::ImaginaryQuadratic, 3), 2u);
    const CharacterTable c5 = character_table(G("cyclic(5)"));
    EXPECT_EQ(count(c5, Kind::HigherDegree, 4), 4u);
    const CharacterTable sl25 = character_table(G("sl25"));
    EXPECT_GE(count(sl25, Kind::RealQuadratic, 5), 1u);
}

TEST(Chartab, Invariants)
{
    for (const char* d : {"perm(3;(0,1);(0,1,2))", "q8", "meta(7,3,2)", "sl23", "sl25", "fam(alpha)", "fam(b,1)",
                          "heis7", "c3c4", "perm(5;(0,1,2,3,4);(0,1))"}) {
        PermutationGroup g = G(d);
        const CharacterTable t = character_table(g);
        const ClassData& cd = t.classes();
        ASSERT_EQ(t.rows.size(), cd.class_count()) << d;
        std::uint64_t sum = 0;
        for (auto deg : t.degrees) sum += deg * deg;
        EXPECT_EQ(sum, g.order()) << d;
        EXPECT_NO_THROW(check_orthogonality(t)) << d;
        // Galois closure under the column power permutation.
        for (std::uint64_t k : units_mod(t.conductor)) {
            const auto& pm = cd.power_map(k);
            for (const auto& row : t.rows) {
                std::vector<Cyclotomic> image;
                for (std::size_t c = 0; c < row.size(); ++c) image.push_back(row[pm[c]]);
                EXPECT_NE(std::find(t.rows.begin(), t.rows.end(), image), t.rows.end()) << d;
            }
        }
        // Orbit sums are rational.
        for (const auto& orbit : galois_orbits(t)) {
            for (std::size_t c = 0; c < cd.class_count(); ++c) {
                Cyclotomic s(t.conductor);
                for (std::size_t i : orbit) s = s + t.rows[i][c];
                EXPECT_TRUE(s.is_rational()) << d;
            }
        }
        for (std::size_t i = 0; i < t.rows.size(); ++i) {
            const UnitSubgroup st = galois_stabilizer(t, i);
            const FieldDescriptor& f = t.fields[i];
            if (st.is_full()) EXPECT_EQ(f.kind, Kind::Rational);
            if (st.index() == 2 && st.contains_tau()) EXPECT_EQ(f.kind, Kind::RealQuadratic);
            if (st.index() == 2 && !st.contains_tau()) EXPECT_EQ(f.kind, Kind::ImaginaryQuadratic);
            if (st.index() > 2) EXPECT_EQ(f.kind, Kind::HigherDegree);
        }
        EXPECT_EQ(is_cut_by_characters(t), is_cut_by_classes(g)) << d;
    }
}

TEST(Chartab, StabilizerOfOrder21)
{
    const CharacterTable m = character_table(G("meta(7,3,2)"));
    EXPECT_TRUE(galois_stabilizer(m, 0).is_full());
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
        if (m.degrees[i] != 3) continue;
        const UnitSubgroup s = galois_stabilizer(m, i);
        EXPECT_EQ(s.index(), 2u);
        EXPECT_FALSE(s.contains_tau());
    }
}

TEST(Chartab, CutByCharacters)
{
    EXPECT_TRUE(is_cut_by_characters(G("q8")));
    EXPECT_FALSE(is_cut_by_characters(G("sd(7,2,c3c4,1)")));
    EXPECT_FALSE(is_cut_by_characters(G("cyclic(5)")));
}

TEST(Chartab, WedderburnCenters)
{
    EXPECT_EQ(wedderburn_centers(character_table(s3())).size(), 3u);
    const auto q8 = wedderburn_centers(character_table(G("q8")));
    EXPECT_EQ(q8.size(), 5u);
    for (const auto& f : q8) EXPECT_EQ(f.kind, Kind::Rational);
    const auto c5 = wedderburn_centers(character_table(G("cyclic(5)")));
    ASSERT_EQ(c5.size(), 2u);
    EXPECT_EQ(std::count_if(c5.begin(), c5.end(), [](const FieldDescriptor& f) { return f.kind == Kind::HigherDegree; }),
              1);
}

TEST(Chartab, DixonPrime)
{
    EXPECT_EQ(dixon_prime(6, 6), 7u);
    EXPECT_EQ(dixon_prime(6, 6, 7), 13u);
    EXPECT_EQ(dixon_prime(24, 12), oracle::table_prime(24, 12));
    EXPECT_EQ(dixon_prime(15000, 60), oracle::table_prime(15000, 60));
}

TEST(Chartab, EigenvectorOracleTwoPrimes)
{
    for (const char* d : {"perm(3;(0,1);(0,1,2))", "q8", "meta(7,3,2)", "sl23", "c3c4"}) {
        PermutationGroup g = G(d);
        const CharacterTable t = character_table(g);
        const std::uint64_t q2 = oracle::table_prime(g.order(), t.conductor, t.prime);
        const oracle::Table o1 = oracle::character_table(g.table(), t.prime);
        const oracle::Table o2 = oracle::character_table(g.table(), q2);
        EXPECT_EQ(o1.rows, o2.rows) << d;
        const CharacterTable t2 = character_table_with_prime(g, q2);
        for (const CharacterTable* lib : {&t, &t2}) {
            std::vector<std::vector<Cyclotomic>> rows;
            for (const auto& row : lib->rows) {
                std::vector<Cyclotomic> r;
                for (const auto& members : o1.classes.members) r.push_back(row[lib->classes().class_of(members[0])]);
                rows.push_back(r);
            }
            std::sort(rows.begin(), rows.end());
            EXPECT_EQ(rows, o1.rows) << d << " at q=" << lib->prime;
        }
    }
}

TEST(Chartab, Brauer)
{
    ModuleAction c6{7, 1, G("cyclic(6)"), {FpMatrix::scalar(1, 7, 3)}, 1};
    const BrauerCharacter b = brauer_character_of_module(c6);
    const ClassData& cd = c6.K.classes();
    EXPECT_EQ(b.values[cd.class_of(c6.K.table().identity())].integer_value(), 1);
    EXPECT_EQ(field_of_values(cd, b.values, b.conductor), (FieldDescriptor{Kind::ImaginaryQuadratic, 3, {}}));

    ModuleAction markel = *family_module({"alpha", {}});
    const BrauerCharacter q = brauer_character_of_module(markel);
    const ClassData& qd = markel.K.classes();
    for (std::size_t c = 0; c < qd.class_count(); ++c) {
        ASSERT_TRUE(q.values[c].is_rational());
        if (qd.rep_order(c) == 1) EXPECT_EQ(q.values[c].integer_value(), 2);
        if (qd.rep_order(c) == 2) EXPECT_EQ(q.values[c].integer_value(), -2);
    }
    ModuleAction two = markel;
    two.s = 2;
    const BrauerCharacter q2 = brauer_character_of_module(two);
    for (std::size_t c = 0; c < qd.class_count(); ++c) EXPECT_EQ(q2.values[c], q.values[c].scaled(2));

    ModuleAction trivial{5, 1, G("cyclic(2)"), {FpMatrix::scalar(1, 5, 1)}, 1};
    for (const auto& v : brauer_character_of_module(trivial).values) EXPECT_EQ(v.integer_value(), 1);

    ModuleAction bad{3, 1, G("cyclic(2)"), {FpMatrix::scalar(1, 3, 2)}, 1};
    bad.K = G("cyclic(6)");
    bad.matrices = {FpMatrix::scalar(1, 3, 2)};
    EXPECT_KIND(brauer_character_of_module(bad), PrimeDividesComplementOrder);
}

TEST(Chartab, KEigenvalueProperty)
{
    ModuleAction c6{7, 1, G("cyclic(6)"), {FpMatrix::scalar(1, 7, 3)}, 1};
    EXPECT_TRUE(has_k_eigenvalue_property(c6, 6));
    EXPECT_TRUE(has_k_eigenvalue_property(*family_module({"alpha", {}}), 4));
    ModuleAction inv{7, 1, G("cyclic(2)"), {FpMatrix::scalar(1, 7, 6)}, 1};
    EXPECT_FALSE(has_k_eigenvalue_property(inv, 3));
    EXPECT_KIND(has_k_eigenvalue_property(inv, 5), KDoesNotDivide);
}
