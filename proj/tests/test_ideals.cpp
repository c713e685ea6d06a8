#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"

using namespace atomzeta;

namespace {

const std::vector<std::int64_t> sample_d = {-1, -2, -3, -5, -6, -7, -23, -26, 2, 3, 5, 10, 13};

Ideal random_ideal(const QuadraticField& f, std::mt19937_64& rng)
{
    // ideal generated by two elements: Z-span of g, g*w for each
    const Element w = Element::omega(f);
    const Element g1 = oracle::random_nonzero(f, rng, 20), g2 = oracle::random_nonzero(f, rng, 20);
    const Element gens[4] = {g1, g1 * w, g2, g2 * w};
    return Ideal::from_generators(f, gens);
}

}

TEST(Ideal, HnfFromGeneratorsIsValid)
{
    std::mt19937_64 rng(21);
    for (auto d : sample_d) {
        const auto f = make_field(d);
        for (int i = 0; i < 200; ++i) {
            const Ideal I = random_ideal(f, rng);
            EXPECT_TRUE(is_valid_hnf(I)) << I;
            EXPECT_TRUE(I.c() > 0 && divisible(I.a(), I.c()) && divisible(I.b(), I.c()));
            EXPECT_TRUE(I.b() >= 0 && I.b() < I.a());
        }
    }
}

TEST(Ideal, NormMatchesResidueCount)
{
    std::mt19937_64 rng(22);
    for (auto d : sample_d) {
        const auto f = make_field(d);
        for (int i = 0; i < 30; ++i) {
            const Ideal I = random_ideal(f, rng);
            if (I.a() > 400) continue;
            EXPECT_EQ(ideal_norm(I), oracle::residue_count_norm(I)) << I;
        }
    }
}

TEST(Ideal, NormIsMultiplicative)
{
    std::mt19937_64 rng(23);
    for (auto d : sample_d) {
        const auto f = make_field(d);
        for (int i = 0; i < 200; ++i) {
            const Ideal I = random_ideal(f, rng), J = random_ideal(f, rng);
            const Ideal IJ = ideal_mul(I, J);
            EXPECT_TRUE(is_valid_hnf(IJ));
            EXPECT_EQ(IJ.norm(), I.norm() * J.norm());
            EXPECT_EQ(IJ, ideal_mul(J, I));
            // IJ sits inside both factors
            EXPECT_TRUE(ideal_divides(I, IJ));
            EXPECT_TRUE(ideal_divides(J, IJ));
        }
    }
}

TEST(Ideal, PrincipalIsMultiplicative)
{
    std::mt19937_64 rng(24);
    for (auto d : sample_d) {
        const auto f = make_field(d);
        for (int i = 0; i < 200; ++i) {
            const auto a = oracle::random_nonzero(f, rng, 50), b = oracle::random_nonzero(f, rng, 50);
            EXPECT_EQ(principal_ideal(a * b), ideal_mul(principal_ideal(a), principal_ideal(b)));
            EXPECT_EQ(principal_ideal(a).norm(), abs_norm(a));
            EXPECT_TRUE(contains(principal_ideal(a), a * b));
        }
    }
}

TEST(Ideal, RationalIntegerNormIsSquare)
{
    for (auto d : sample_d) {
        const auto f = make_field(d);
        for (long m = 2; m <= 500; ++m) EXPECT_EQ(principal_ideal(Element(f, m)).norm(), Int(m * m)) << d << " " << m;
    }
    const auto q = rational_field();
    for (long m = 2; m <= 500; ++m) EXPECT_EQ(principal_ideal(Element(q, m)).norm(), Int(m));
}

TEST(Primes, GaussianSplittingFollowsResidueMod4)
{
    const auto f = make_field(-1);
    for (auto p : primes_up_to(10000)) {
        const auto kind = splitting_type(p, f);
        if (p == 2) {
            EXPECT_EQ(kind, SplitKind::ramified);
            continue;
        }
        EXPECT_EQ(kind == SplitKind::split, p % 4 == 1) << p;
        EXPECT_EQ(kind == SplitKind::inert, p % 4 == 3) << p;
    }
}

TEST(Primes, SplittingMatchesRootCount)
{
    // number of roots of the minimal polynomial of omega mod p
    for (auto d : sample_d) {
        const auto f = make_field(d);
        const long t = f.omega_trace(), c = f.omega_constant().get_si();
        for (auto p : primes_up_to(300)) {
            long roots = 0;
            for (long x = 0; x < static_cast<long>(p); ++x)
                if ((((x * x - t * x - c) % static_cast<long>(p)) + static_cast<long>(p)) % static_cast<long>(p) == 0) ++roots;
            const auto above = primes_above(p, f);
            switch (splitting_type(p, f)) {
            case SplitKind::split:
                EXPECT_EQ(roots, 2);
                ASSERT_EQ(above.size(), 2u);
                break;
            case SplitKind::inert:
                EXPECT_EQ(roots, 0);
                ASSERT_EQ(above.size(), 1u);
                EXPECT_EQ(above[0].ideal.norm(), Int(p * p));
                break;
            case SplitKind::ramified:
                EXPECT_EQ(roots, 1);
                ASSERT_EQ(above.size(), 1u);
                EXPECT_EQ(ideal_pow(above[0].ideal, 2), principal_ideal(Element(f, static_cast<long>(p))));
                break;
            default: FAIL();
            }
            if (above.size() == 2) {
                EXPECT_EQ(ideal_mul(above[0].ideal, above[1].ideal), principal_ideal(Element(f, static_cast<long>(p))));
            }
        }
    }
}

TEST(Primes, FactorIdealRoundTrips)
{
    std::mt19937_64 rng(25);
    for (auto d : sample_d) {
        const auto f = make_field(d);
        for (int i = 0; i < 100; ++i) {
            const Ideal I = random_ideal(f, rng);
            const auto F = factor_ideal(I);
            EXPECT_EQ(multiply_out(f, F), I) << I;
            Int n = 1;
            for (const auto& [P, e] : F) {
                EXPECT_TRUE(ideal_divides(P.ideal, I));
                n *= ipow(P.ideal.norm(), static_cast<unsigned long>(e));
            }
            EXPECT_EQ(n, I.norm());
        }
    }
}

TEST(Primes, EnumerateMatchesHnfScan)
{
    for (auto d : {-1, -2, -3, -5, -6, -23, 2, 5, 10}) {
        const auto f = make_field(d);
        auto scan = oracle::hnf_scan(f, 200);
        std::sort(scan.begin(), scan.end());
        const auto ideals = enumerate_ideals(f, 200);
        EXPECT_EQ(ideals, scan) << "d = " << d;
    }
    // Gaussian ideals of norm <= 100 are the (a+bi) up to units: sum_{n<=100} r2(n)/4
    long count = 0;
    for (long n = 1; n <= 100; ++n)
        for (long a = 1; a * a <= n; ++a)
            for (long b = 0; a * a + b * b <= n; ++b)
                if (a * a + b * b == n) ++count;
    EXPECT_EQ(static_cast<long>(enumerate_ideals(make_field(-1), 100).size()), count);
}

TEST(Forms, IdealToFormIsHomomorphism)
{
    std::mt19937_64 rng(26);
    for (auto d : {-1, -5, -14, -23, -26, -47, -71, -105}) {
        const auto f = make_field(d);
        for (int i = 0; i < 100; ++i) {
            const Ideal I = random_ideal(f, rng), J = random_ideal(f, rng);
            const QuadForm lhs = reduce_form(ideal_to_form(ideal_mul(I, J)));
            const QuadForm rhs = compose(ideal_to_form(I), ideal_to_form(J));
            EXPECT_EQ(lhs, rhs) << I << " " << J;
            EXPECT_EQ(ideal_to_form(I).discriminant(), f.discriminant());
        }
    }
}

TEST(Forms, FormToIdealInverts)
{
    for (auto d : {-5, -23, -47, -105}) {
        const auto f = make_field(d);
        for (const auto& q : reduced_forms(Int(f.discriminant()))) {
            const Ideal I = form_to_ideal(f, q);
            EXPECT_TRUE(is_valid_hnf(I));
            EXPECT_EQ(reduce_form(ideal_to_form(I)), q);
        }
    }
}
