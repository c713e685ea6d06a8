#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace atomzeta;

namespace {

const std::vector<std::int64_t> sample_d = {-1, -2, -3, -5, -6, -7, -15, -23, 2, 3, 5, 6, 13, 94};

}

TEST(Integer, FactorU64MatchesTrialDivision)
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        const std::uint64_t n = 2 + rng() % 2000000;
        std::uint64_t m = n, back = 1;
        for (const auto& [p, e] : factor_u64(n)) {
            EXPECT_TRUE(is_prime_u64(p));
            for (int k = 0; k < e; ++k) {
                ASSERT_EQ(m % p, 0u);
                m /= p;
                back *= p;
            }
        }
        EXPECT_EQ(back, n);
    }
    // semiprime of two large primes goes through Pollard-Brent
    const std::uint64_t p = 1000000007ULL, q = 998244353ULL;
    const auto F = factor_u64(p * q);
    ASSERT_EQ(F.size(), 2u);
    EXPECT_EQ(F[0].first, q);
    EXPECT_EQ(F[1].first, p);
}

TEST(Integer, PrimeSieveMatchesMillerRabin)
{
    const auto ps = primes_up_to(20000);
    std::size_t j = 0;
    for (std::uint64_t n = 0; n <= 20000; ++n) {
        const bool in = j < ps.size() && ps[j] == n;
        if (in) ++j;
        EXPECT_EQ(in, is_prime_u64(n)) << n;
    }
    EXPECT_EQ(primes_up_to(10000000).size(), 664579u);
}

TEST(Integer, SqrtModPrime)
{
    for (std::uint64_t p : primes_up_to(600)) {
        if (p == 2) continue;
        for (std::uint64_t a = 0; a < p; ++a) {
            bool qr = false;
            for (std::uint64_t x = 0; x < p; ++x) qr = qr || (x * x) % p == a;
            if (!qr) continue;
            const std::uint64_t r = sqrt_mod_prime(a, p);
            EXPECT_EQ((r * r) % p, a) << a << " mod " << p;
        }
    }
}

TEST(Field, Validation)
{
    EXPECT_THROW(make_field(0), Error);
    EXPECT_THROW(make_field(1), Error);
    try {
        make_field(12);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::not_squarefree);
        EXPECT_NE(std::string(e.what()).find("not squarefree"), std::string::npos);
    }
    EXPECT_THROW(make_field(-4), Error);
    EXPECT_THROW(parse_field("abc"), Error);
    EXPECT_TRUE(parse_field("Q").is_rational());
    EXPECT_EQ(parse_field("-5").d(), -5);
}

TEST(Field, IntegralBasisAndDiscriminant)
{
    EXPECT_EQ(make_field(-1).discriminant(), -4);
    EXPECT_EQ(make_field(-5).discriminant(), -20);
    EXPECT_EQ(make_field(-3).discriminant(), -3);
    EXPECT_EQ(make_field(5).discriminant(), 5);
    EXPECT_EQ(make_field(2).discriminant(), 8);
    EXPECT_EQ(make_field(-23).basis(), BasisKind::half_sqrt);
    EXPECT_EQ(make_field(-5).basis(), BasisKind::sqrt_d);
    EXPECT_EQ(rational_field().degree(), 1);
    // omega^2 = t omega + c
    for (auto d : sample_d) {
        const auto f = make_field(d);
        const Element w = Element::omega(f);
        EXPECT_EQ(w * w, Element(f, f.omega_constant(), f.omega_trace()));
    }
}

TEST(Field, MismatchThrows)
{
    const Element a(make_field(-1), 1, 1), b(make_field(-5), 1, 1);
    try {
        (void)(a * b);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::field_mismatch);
    }
}

TEST(Element, NormIsMultiplicative)
{
    std::mt19937_64 rng(1);
    for (auto d : sample_d) {
        const auto f = make_field(d);
        for (int i = 0; i < 200; ++i) {
            const auto a = oracle::random_element(f, rng, 1000), b = oracle::random_element(f, rng, 1000);
            EXPECT_EQ(norm(a * b), norm(a) * norm(b));
        }
    }
    const auto q = rational_field();
    for (int i = 0; i < 50; ++i) {
        const auto a = oracle::random_element(q, rng, 1000), b = oracle::random_element(q, rng, 1000);
        EXPECT_EQ(norm(a * b), norm(a) * norm(b));
    }
}

TEST(Element, MinimalPolynomialConstantTerm)
{
    // |f(0)|^{n / deg f} = |N(e)|
    std::mt19937_64 rng(2);
    for (auto d : sample_d) {
        const auto f = make_field(d);
        for (int i = 0; i < 200; ++i) {
            const auto e = oracle::random_nonzero(f, rng, 300);
            const auto mp = minimal_poly(e);
            const unsigned long deg = mp.size() - 1;
            ASSERT_TRUE(deg == 1 || deg == 2);
            EXPECT_EQ(mp.back(), 1);
            EXPECT_EQ(ipow(abs(mp[0]), 2 / deg), abs_norm(e)) << e;
            // e is a root
            Element v = Element::integer(f, 0);
            Element p = Element::one(f);
            for (const auto& c : mp) {
                v = v + c * p;
                p *= e;
            }
            EXPECT_TRUE(v.is_zero()) << e;
        }
    }
    const auto q = rational_field();
    const auto mp = minimal_poly(Element(q, -7));
    ASSERT_EQ(mp.size(), 2u);
    EXPECT_EQ(mp[0], 7);
}

TEST(Element, ConjugationIsAutomorphism)
{
    std::mt19937_64 rng(3);
    for (auto d : sample_d) {
        const auto f = make_field(d);
        for (int i = 0; i < 200; ++i) {
            const auto a = oracle::random_element(f, rng, 500), b = oracle::random_element(f, rng, 500);
            EXPECT_EQ(conj(a * b), conj(a) * conj(b));
            EXPECT_EQ(conj(a + b), conj(a) + conj(b));
            EXPECT_EQ(conj(conj(a)), a);
            EXPECT_EQ(a * conj(a), Element::integer(f, norm(a)));
            EXPECT_EQ(a + conj(a), Element::integer(f, trace(a)));
        }
    }
}

TEST(Element, DividesAgreesWithExplicitDivision)
{
    std::mt19937_64 rng(4);
    for (auto d : sample_d) {
        const auto f = make_field(d);
        for (int i = 0; i < 300; ++i) {
            const auto b = oracle::random_nonzero(f, rng, 30), q = oracle::random_element(f, rng, 30);
            const auto a = b * q;
            auto r = exact_quotient(a, b);
            ASSERT_TRUE(r.has_value());
            EXPECT_EQ(*r, q);
            EXPECT_TRUE(divides(b, a));
            // a + 1 is divisible only if b | 1
            EXPECT_EQ(divides(b, a + Element::one(f)), is_unit(b));
        }
    }
}

TEST(Element, ToString)
{
    EXPECT_EQ(to_string(Element(make_field(-5), 1, 1)), "1+sqrt(-5)");
    EXPECT_EQ(to_string(Element(make_field(-5), 1, -1)), "1-sqrt(-5)");
    EXPECT_EQ(to_string(Element(make_field(-1), 0, -1)), "-sqrt(-1)");
    EXPECT_EQ(to_string(Element(make_field(13), 1, 1)), "(3+sqrt(13))/2");
    EXPECT_EQ(to_string(Element(rational_field(), -12)), "-12");
}

TEST(Units, FundamentalUnitMatchesPellScan)
{
    for (std::int64_t d = 2; d <= 100; ++d) {
        if (!is_squarefree(d)) continue;
        const auto f = make_field(d);
        const auto eps = fundamental_unit(f);
        EXPECT_EQ(eps, oracle::pell_scan(f)) << "d = " << d;
        EXPECT_TRUE(is_unit(eps));
    }
    EXPECT_EQ(to_string(fundamental_unit(make_field(2))), "1+sqrt(2)");
    EXPECT_EQ(to_string(fundamental_unit(make_field(94))), "2143295+221064*sqrt(94)");
}

TEST(Units, RootsOfUnity)
{
    EXPECT_EQ(roots_of_unity(make_field(-1)).size(), 4u);
    EXPECT_EQ(roots_of_unity(make_field(-3)).size(), 6u);
    EXPECT_EQ(roots_of_unity(make_field(-5)).size(), 2u);
    EXPECT_EQ(roots_of_unity(make_field(7)).size(), 2u);
    EXPECT_EQ(roots_of_unity(rational_field()).size(), 2u);
    for (const auto& z : roots_of_unity(make_field(-3))) EXPECT_EQ(power(z, 6), Element::one(make_field(-3)));
}

TEST(Units, CanonicalAssociateConsistentAndIdempotent)
{
    std::mt19937_64 rng(5);
    for (auto d : sample_d) {
        const auto f = make_field(d);
        std::vector<Element> units = roots_of_unity(f);
        if (f.is_real()) {
            const auto eps = fundamental_unit(f);
            const auto inv = *exact_quotient(Element::one(f), eps);
            for (auto k : {eps, inv, power(eps, 3), power(inv, 2)}) {
                units.push_back(k);
                units.push_back(-k);
            }
        }
        for (int i = 0; i < 100; ++i) {
            const auto e = oracle::random_nonzero(f, rng, 200);
            const auto c = canonical_associate(e);
            EXPECT_EQ(canonical_associate(c), c);
            EXPECT_TRUE(oracle::associated_brute(c, e));
            for (const auto& u : units) EXPECT_EQ(canonical_associate(u * e), c) << e << " * " << u;
        }
    }
}
