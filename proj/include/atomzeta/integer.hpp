#pragma once

// Exact integer helpers: GMP-backed Int plus 64-bit factorization,
// primality, square roots modulo primes and a prime sieve.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace atomzeta {

using Int = mpz_class;

/// (prime, exponent) pairs in increasing prime order.
using Factorization = std::vector<std::pair<std::uint64_t, int>>;

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b)
{
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

// Brent's variant of Pollard rho; n odd composite.
inline std::uint64_t pollard_brent(std::uint64_t n)
{
    for (std::uint64_t c = 1;; ++c) {
        auto f = [&](std::uint64_t x) { return (mulmod(x, x, n) + c) % n; };
        std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
        std::uint64_t r = 1;
        const std::uint64_t m = 128;
        do {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = f(y);
            std::uint64_t k = 0;
            do {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = gcd_u64(q, n);
                k += m;
            } while (k < r && g == 1);
            r <<= 1;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd_u64(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

} // namespace detail

/// Deterministic Miller-Rabin for the full 64-bit range.
inline bool is_prime_u64(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = detail::powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = detail::mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// Trial division by small primes, then Miller-Rabin and Pollard-Brent.
inline Factorization factor_u64(std::uint64_t n)
{
    Factorization out;
    if (n < 2) return out;
    std::vector<std::uint64_t> stack;
    auto push = [&](std::uint64_t p) { stack.push_back(p); };
    for (std::uint64_t p = 2; p < 1000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            push(p);
            n /= p;
        }
    }
    std::vector<std::uint64_t> work;
    if (n > 1) work.push_back(n);
    while (!work.empty()) {
        std::uint64_t m = work.back();
        work.pop_back();
        if (m == 1) continue;
        if (is_prime_u64(m)) {
            push(m);
            continue;
        }
        std::uint64_t g = detail::pollard_brent(m);
        work.push_back(g);
        work.push_back(m / g);
    }
    std::sort(stack.begin(), stack.end());
    for (auto p : stack) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1);
    }
    return out;
}

inline bool fits_u64(const Int& n)
{
    return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const Int& n)
{
    if (!fits_u64(n)) throw Error(ErrorKind::out_of_range, "integer does not fit in 64 bits: " + n.get_str());
    std::uint64_t r = 0;
    mpz_export(&r, nullptr, -1, sizeof r, 0, 0, n.get_mpz_t());
    return r;
}

inline Int from_u64(std::uint64_t v)
{
    Int r;
    mpz_import(r.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
    return r;
}

inline Int from_i64(std::int64_t v)
{
    Int r = from_u64(v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v));
    if (v < 0) r = -r;
    return r;
}

/// Factor |n| for 1 <= |n| < 2^64.
inline Factorization factor_integer(const Int& n)
{
    Int a = abs(n);
    if (a == 0) throw Error(ErrorKind::zero_element, "cannot factor zero");
    return factor_u64(to_u64(a));
}

inline bool is_squarefree(std::int64_t d)
{
    std::uint64_t a = d < 0 ? static_cast<std::uint64_t>(-(d + 1)) + 1 : static_cast<std::uint64_t>(d);
    for (auto [p, e] : factor_u64(a))
        if (e > 1) return false;
    return true;
}

inline Int ipow(const Int& b, unsigned long e)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline Int isqrt(const Int& n)
{
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_square(const Int& n)
{
    return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

/// Floor division (rounds toward minus infinity).
inline Int floor_div(const Int& a, const Int& b)
{
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/// Non-negative residue.
inline Int mod_pos(const Int& a, const Int& m)
{
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (sgn(r) < 0) r += abs(m);
    return r;
}

inline bool divisible(const Int& a, const Int& b)
{
    return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

/// Kronecker symbol (disc | p) for a rational prime p; p = 2 uses the
/// residue of disc mod 8.
inline int kronecker_prime(const Int& disc, std::uint64_t p)
{
    if (p == 2) {
        Int r = mod_pos(disc, 8);
        if (r == 1 || r == 7) return 1;
        if (r == 3 || r == 5) return -1;
        return 0;
    }
    Int pp = from_u64(p);
    Int r = mod_pos(disc, pp);
    if (r == 0) return 0;
    return mpz_legendre(r.get_mpz_t(), pp.get_mpz_t());
}

/// Square root of a modulo an odd prime p (Tonelli-Shanks); a must be a
/// quadratic residue.
inline std::uint64_t sqrt_mod_prime(std::uint64_t a, std::uint64_t p)
{
    a %= p;
    if (a == 0 || p == 2) return a;
    if (p % 4 == 3) return detail::powmod(a, (p + 1) / 4, p);
    std::uint64_t q = p - 1;
    int s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    std::uint64_t z = 2;
    while (detail::powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    std::uint64_t c = detail::powmod(z, q, p);
    std::uint64_t r = detail::powmod(a, (q + 1) / 2, p);
    std::uint64_t t = detail::powmod(a, q, p);
    int m = s;
    while (t != 1) {
        int i = 0;
        std::uint64_t tt = t;
        while (tt != 1) {
            tt = detail::mulmod(tt, tt, p);
            ++i;
        }
        std::uint64_t b = c;
        for (int j = 0; j < m - i - 1; ++j) b = detail::mulmod(b, b, p);
        r = detail::mulmod(r, b, p);
        c = detail::mulmod(b, b, p);
        t = detail::mulmod(t, c, p);
        m = i;
    }
    return r;
}

/// Primes <= limit (sieve of Eratosthenes over odd numbers).
inline std::vector<std::uint64_t> primes_up_to(std::uint64_t limit)
{
    std::vector<std::uint64_t> out;
    if (limit < 2) return out;
    out.push_back(2);
    const std::uint64_t half = (limit - 1) / 2; // index i <-> 2i + 1
    std::vector<bool> composite(half + 1, false);
    for (std::uint64_t i = 1; i <= half; ++i) {
        if (composite[i]) continue;
        const std::uint64_t p = 2 * i + 1;
        out.push_back(p);
        for (std::uint64_t j = (p * p - 1) / 2; j <= half; j += p) composite[j] = true;
    }
    return out;
}

} // namespace atomzeta
