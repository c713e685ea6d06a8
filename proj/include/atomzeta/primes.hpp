#pragma once

// Prime ideals, ideal factorization and norm-bounded ideal enumeration.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ideal.hpp"

namespace atomzeta {

/// Decomposition of a rational prime p in Z_K.  `rational` is the
/// degenerate K = Q case, where pZ is its own (degree-1) prime.
enum class SplitKind { split, inert, ramified, rational };

inline const char* to_string(SplitKind k)
{
    switch (k) {
    case SplitKind::split: return "split";
    case SplitKind::inert: return "inert";
    case SplitKind::ramified: return "ramified";
    case SplitKind::rational: return "rational";
    }
    return "?";
}

struct PrimeIdeal {
    std::uint64_t p = 0;
    SplitKind kind = SplitKind::rational;
    Ideal ideal;
    int residue_degree = 1;

    friend bool operator==(const PrimeIdeal& l, const PrimeIdeal& r) { return l.ideal == r.ideal; }
};

/// Prime-ideal powers sorted by (p, b).
using FactoredIdeal = std::vector<std::pair<PrimeIdeal, int>>;

inline SplitKind splitting_type(std::uint64_t p, const QuadraticField& f)
{
    if (!is_prime_u64(p)) throw Error(ErrorKind::not_prime, std::to_string(p) + " is not prime");
    if (f.is_rational()) return SplitKind::rational;
    switch (kronecker_prime(from_i64(f.discriminant()), p)) {
    case 1: return SplitKind::split;
    case -1: return SplitKind::inert;
    default: return SplitKind::ramified;
    }
}

inline std::vector<PrimeIdeal> primes_above(std::uint64_t p, const QuadraticField& f)
{
    const SplitKind kind = splitting_type(p, f);
    const Int P = from_u64(p);
    if (kind == SplitKind::rational) {
        return {PrimeIdeal{p, kind, Ideal::from_hnf_unchecked(f, P, 0, 1), 1}};
    }
    if (kind == SplitKind::inert) {
        return {PrimeIdeal{p, kind, Ideal::from_hnf_unchecked(f, P, 0, P), 2}};
    }
    // roots r of X^2 - t X - c mod p give <p, omega - r>
    const std::uint64_t t = static_cast<std::uint64_t>(f.omega_trace());
    const std::uint64_t c = to_u64(mod_pos(f.omega_constant(), P));
    std::vector<std::uint64_t> roots;
    if (p == 2) {
        for (std::uint64_t r = 0; r < 2; ++r)
            if ((r * r + t * r + c) % 2 == 0) roots.push_back(r);
    } else {
        const std::uint64_t disc = to_u64(mod_pos(from_i64(f.discriminant()), P));
        const std::uint64_t s = sqrt_mod_prime(disc, p);
        const std::uint64_t inv2 = (p + 1) / 2;
        roots.push_back(detail::mulmod((t + s) % p, inv2, p));
        roots.push_back(detail::mulmod((t + p - s) % p, inv2, p));
        if (roots[0] == roots[1]) roots.pop_back();
    }
    if (roots.size() != (kind == SplitKind::split ? 2u : 1u))
        throw Error(ErrorKind::internal, "root count disagrees with splitting type at p = " + std::to_string(p));
    std::vector<PrimeIdeal> out;
    for (auto r : roots) out.push_back(PrimeIdeal{p, kind, Ideal::from_hnf_unchecked(f, P, P - r, 1), 1});
    std::sort(out.begin(), out.end(), [](const PrimeIdeal& l, const PrimeIdeal& r) { return l.ideal.b() < r.ideal.b(); });
    return out;
}

/// I / P for a prime ideal P containing I.
inline Ideal divide_by_prime(const Ideal& I, const PrimeIdeal& P)
{
    const Int p = from_u64(P.p);
    if (P.kind == SplitKind::rational) {
        if (!divisible(I.a(), p)) throw Error(ErrorKind::internal, "ideal not divisible by " + p.get_str());
        return Ideal::from_hnf_unchecked(I.field(), I.a() / p, 0, 1);
    }
    if (P.kind == SplitKind::inert) return divide_by_integer(I, p);
    return divide_by_integer(ideal_mul(I, conj(P.ideal)), p);
}

inline FactoredIdeal factor_ideal(const Ideal& I)
{
    FactoredIdeal out;
    Ideal rest = I;
    for (auto [p, e] : factor_integer(I.a())) {
        (void)e;
        for (const auto& P : primes_above(p, I.field())) {
            int v = 0;
            while (ideal_divides(P.ideal, rest)) {
                rest = divide_by_prime(rest, P);
                ++v;
            }
            if (v > 0) out.emplace_back(P, v);
        }
    }
    if (!rest.is_unit_ideal()) throw Error(ErrorKind::internal, "ideal factorization left cofactor " + to_string(rest));
    return out;
}

inline Ideal multiply_out(const QuadraticField& f, const FactoredIdeal& F)
{
    Ideal r = unit_ideal(f);
    for (const auto& [P, e] : F) r = ideal_mul(r, ideal_pow(P.ideal, static_cast<unsigned>(e)));
    return r;
}

/// Visits every divisor prod P_i^{k_i}, 0 <= k_i <= e_i, in lexicographic
/// exponent order (first prime varies slowest).  The visitor also gets the
/// exponent vector.
inline void for_each_divisor(const QuadraticField& f, const FactoredIdeal& F,
                             const std::function<void(const Ideal&, const std::vector<int>&)>& visit)
{
    std::vector<int> k(F.size(), 0);
    std::function<void(std::size_t, const Ideal&)> rec = [&](std::size_t i, const Ideal& cur) {
        if (i == F.size()) {
            visit(cur, k);
            return;
        }
        Ideal acc = cur;
        for (int j = 0; j <= F[i].second; ++j) {
            k[i] = j;
            rec(i + 1, acc);
            if (j < F[i].second) acc = ideal_mul(acc, F[i].first.ideal);
        }
        k[i] = 0;
    };
    rec(0, unit_ideal(f));
}

inline std::vector<Ideal> divisor_ideals(const QuadraticField& f, const FactoredIdeal& F)
{
    std::vector<Ideal> out;
    for_each_divisor(f, F, [&](const Ideal& I, const std::vector<int>&) { out.push_back(I); });
    return out;
}

/// All prime ideals of norm <= bound, sorted by (norm, b).
inline std::vector<PrimeIdeal> prime_ideals_up_to(const QuadraticField& f, std::uint64_t bound)
{
    std::vector<PrimeIdeal> out;
    for (auto p : primes_up_to(bound)) {
        for (auto& P : primes_above(p, f))
            if (P.ideal.norm() <= from_u64(bound)) out.push_back(std::move(P));
    }
    std::sort(out.begin(), out.end(), [](const PrimeIdeal& l, const PrimeIdeal& r) { return l.ideal < r.ideal; });
    return out;
}

/// Visits every ideal of norm <= kappa exactly once, together with its
/// prime factorization (here ordered by prime-ideal norm).  Visit order is
/// unspecified.
inline void for_each_ideal(const QuadraticField& f, std::uint64_t kappa,
                           const std::function<void(const Ideal&, const FactoredIdeal&)>& visit)
{
    if (kappa < 1) return;
    const auto primes = prime_ideals_up_to(f, kappa);
    std::vector<std::uint64_t> norms;
    for (const auto& P : primes) norms.push_back(to_u64(P.ideal.norm()));
    FactoredIdeal factors;
    // multisets of prime ideals with nondecreasing index
    std::function<void(std::size_t, const Ideal&, std::uint64_t)> rec = [&](std::size_t start, const Ideal& cur,
                                                                           std::uint64_t n) {
        visit(cur, factors);
        for (std::size_t j = start; j < primes.size(); ++j) {
            if (norms[j] > kappa / n) break;
            const bool same = !factors.empty() && factors.back().first == primes[j];
            if (same)
                ++factors.back().second;
            else
                factors.emplace_back(primes[j], 1);
            rec(j, ideal_mul(cur, primes[j].ideal), n * norms[j]);
            if (same)
                --factors.back().second;
            else
                factors.pop_back();
        }
    };
    rec(0, unit_ideal(f), 1);
}

/// Every ideal of norm <= kappa, ordered by (norm, a, b).
inline std::vector<Ideal> enumerate_ideals(const QuadraticField& f, std::uint64_t kappa)
{
    std::vector<Ideal> out;
    for_each_ideal(f, kappa, [&](const Ideal& I, const FactoredIdeal&) { out.push_back(I); });
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace atomzeta
