#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace atomzeta;

TEST(ClassGroup, ClassNumberMatchesDirichletFormula)
{
    for (std::int64_t d = -1; d >= -200; --d) {
        if (!is_squarefree(d)) continue;
        const auto f = make_field(d);
        const long disc = f.discriminant();
        const long h = oracle::class_number_dirichlet(disc);
        EXPECT_EQ(static_cast<long>(class_number(f)), h) << "d = " << d;
        EXPECT_EQ(oracle::reduced_form_count(disc), h) << "d = " << d;
    }
    EXPECT_EQ(class_number(make_field(-5)), 2u);
    EXPECT_EQ(class_number(make_field(-23)), 3u);
}

TEST(ClassGroup, HeegnerFieldsArePrincipal)
{
    std::mt19937_64 rng(31);
    for (std::int64_t d : {-1, -2, -3, -7, -11, -19, -43, -67, -163}) {
        const auto f = make_field(d);
        EXPECT_EQ(class_number(f), 1u);
        EXPECT_EQ(class_group_structure(f).describe(), "trivial");
        for (const auto& I : enumerate_ideals(f, 300)) EXPECT_TRUE(is_principal(I).principal) << d << " " << I;
    }
}

TEST(ClassGroup, GeneratorsRegenerateIdeal)
{
    for (std::int64_t d : {-1, -5, -6, -23, -26, -71, 2, 3, 10, 15, 79}) {
        const auto f = make_field(d);
        long principal = 0;
        for (const auto& I : enumerate_ideals(f, 400)) {
            const auto r = is_principal(I);
            if (!r.principal) {
                if (f.is_imaginary()) {
                    EXPECT_FALSE(generator_by_ellipse_scan(I).has_value()) << I;
                }
                continue;
            }
            ++principal;
            ASSERT_TRUE(r.generator.has_value());
            EXPECT_EQ(principal_ideal(*r.generator), I) << d << " " << I;
            if (f.is_imaginary()) {
                EXPECT_TRUE(generator_by_ellipse_scan(I).has_value()) << I;
            }
        }
        EXPECT_GT(principal, 0);
    }
}

TEST(ClassGroup, RealPrincipalityAgreesWithElementBox)
{
    // an ideal is principal iff some element of the unit-sized box generates it
    for (std::int64_t d : {10, 15, 26, 79}) {
        const auto f = make_field(d);
        const oracle::NormTable table(f, 120);
        for (const auto& I : enumerate_ideals(f, 120)) {
            bool found = false;
            auto it = table.by_norm.find(I.norm().get_si());
            if (it != table.by_norm.end())
                for (const auto& e : it->second) found = found || principal_ideal(e) == I;
            if (I.is_unit_ideal()) found = true;
            EXPECT_EQ(is_principal(I).principal, found) << d << " " << I;
        }
    }
}

TEST(ClassGroup, Structure)
{
    EXPECT_EQ(class_group_structure(make_field(-5)).describe(), "Z/2");
    EXPECT_EQ(class_group_structure(make_field(-23)).describe(), "Z/3");
    EXPECT_EQ(class_group_structure(make_field(-14)).describe(), "Z/4");
    EXPECT_EQ(class_group_structure(make_field(-21)).describe(), "Z/2 x Z/2");
    EXPECT_EQ(class_group_structure(make_field(-105)).describe(), "Z/2 x Z/2 x Z/2");
    EXPECT_EQ(class_group_structure(make_field(-65)).describe(), "Z/2 x Z/4");
    for (std::int64_t d = -1; d >= -300; --d) {
        if (!is_squarefree(d)) continue;
        const auto f = make_field(d);
        EXPECT_EQ(class_group_structure(f).order(), class_number(f));
    }
}

TEST(Davenport, MatchesRank2ClosedForm)
{
    for (std::uint64_t m1 = 1; m1 <= 36; ++m1)
        for (std::uint64_t m2 = m1; m1 * m2 <= 36; m2 += m1) {
            AbelianGroupSpec g;
            if (m1 > 1) g.factors.push_back(m1);
            if (m2 > 1) g.factors.push_back(m2);
            EXPECT_EQ(davenport_constant(g), m1 + m2 - 1) << g.describe();
        }
}

TEST(Davenport, SmallCases)
{
    EXPECT_EQ(davenport_constant(AbelianGroupSpec{}), 1u);
    EXPECT_EQ(davenport_constant(AbelianGroupSpec{{2, 2, 2}}), 4u);
    EXPECT_EQ(davenport_constant(AbelianGroupSpec{{2, 2, 2, 2}}), 5u);
    try {
        davenport_constant(AbelianGroupSpec{{100}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::cap_exceeded);
    }
    EXPECT_EQ(davenport_rank2_formula(AbelianGroupSpec{{100}}), 100u);
}
