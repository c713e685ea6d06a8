#pragma once

// Brute-force reference computations.  They only use element arithmetic,
// exact division and plain enumeration, never the ideal/class-group
// machinery they are used to check.

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include <atomzeta/atomzeta.hpp>

namespace oracle {

using atomzeta::Element;
using atomzeta::Int;
using atomzeta::QuadraticField;

/// Smallest unit > 1 by scanning Y = 1, 2, ... for N(X + Y w) = +-1.
inline Element pell_scan(const QuadraticField& f)
{
    const Int D = atomzeta::from_i64(f.discriminant());
    const int t = f.omega_trace();
    for (Int Y = 1;; ++Y) {
        // (2X + tY)^2 = D Y^2 +- 4
        // -4 first: for equal Y the smaller root gives the smaller unit
        for (int s : {-4, 4}) {
            const Int sq = D * Y * Y + s;
            if (!atomzeta::is_square(sq)) continue;
            const Int r = atomzeta::isqrt(sq);
            // the root with 2X + tY = +r is the one > 1
            const Int num = r - t * Y;
            if (atomzeta::divisible(num, 2)) return Element(f, num / 2, Y);
        }
    }
}

inline double real_value(const Element& e)
{
    const double disc = static_cast<double>(e.field().discriminant());
    return (2.0 * e.x().get_d() + e.field().omega_trace() * e.y().get_d() + e.y().get_d() * std::sqrt(disc)) / 2.0;
}

/// All elements of a coordinate box that contains every element with
/// |N| <= bound (imaginary), or a representative of every associate class
/// with |N| <= bound (real; box sized by the fundamental unit).
inline std::vector<Element> small_elements(const QuadraticField& f, long bound)
{
    std::vector<Element> out;
    const double disc = std::fabs(static_cast<double>(f.discriminant()));
    double scale = 1.0;
    if (f.is_real()) scale = real_value(pell_scan(f));
    // 2x + ty = sigma + sigma', y = (sigma - sigma') / sqrt(disc)
    const long ymax = static_cast<long>(2.0 * scale * std::sqrt(static_cast<double>(bound)) / std::sqrt(disc)) + 2;
    const long smax = static_cast<long>(2.0 * scale * std::sqrt(static_cast<double>(bound))) + 2;
    const int t = f.omega_trace();
    for (long y = -ymax; y <= ymax; ++y) {
        for (long s = -smax; s <= smax; ++s) {
            // s = 2x + t y
            if (((s - t * y) % 2 + 2) % 2 != 0) continue;
            const long x = (s - t * y) / 2;
            Element e(f, x, y);
            const Int n = atomzeta::abs_norm(e);
            if (n >= 1 && n <= bound) out.push_back(e);
        }
    }
    return out;
}

/// Elements of small_elements grouped by |N|.
struct NormTable {
    std::map<long, std::vector<Element>> by_norm;

    NormTable(const QuadraticField& f, long bound)
    {
        for (auto& e : small_elements(f, bound)) by_norm[atomzeta::abs_norm(e).get_si()].push_back(e);
    }
};

/// e is an atom iff no x with 1 < |N(x)| < |N(e)|, |N(x)| dividing |N(e)|,
/// divides e exactly.  Needs table bound >= |N(e)| / 2.
inline bool is_atom_brute(const Element& e, const NormTable& table)
{
    const long n = atomzeta::abs_norm(e).get_si();
    if (n <= 1) return false;
    for (long k = 2; k < n; ++k) {
        if (n % k != 0) continue;
        auto it = table.by_norm.find(k);
        if (it == table.by_norm.end()) continue;
        for (const auto& x : it->second)
            if (atomzeta::exact_quotient(e, x)) return false;
    }
    return true;
}

/// Mutual divisibility.
inline bool associated_brute(const Element& a, const Element& b)
{
    return atomzeta::exact_quotient(a, b).has_value() && atomzeta::exact_quotient(b, a).has_value();
}

/// Associate classes of atoms with |N| = n, counted from the element box.
inline std::vector<Element> atom_classes_of_norm(long n, const NormTable& table)
{
    std::vector<Element> reps;
    auto it = table.by_norm.find(n);
    if (it == table.by_norm.end()) return reps;
    for (const auto& e : it->second) {
        if (!is_atom_brute(e, table)) continue;
        bool seen = false;
        for (const auto& r : reps)
            if (associated_brute(r, e)) {
                seen = true;
                break;
            }
        if (!seen) reps.push_back(e);
    }
    return reps;
}

/// Class number from Dirichlet's formula h = -(w / 2|D|) sum_{a<|D|} (D|a) a.
inline long class_number_dirichlet(long disc)
{
    const long w = disc == -4 ? 4 : disc == -3 ? 6 : 2;
    Int sum = 0;
    const Int D(disc);
    for (long a = 1; a < -disc; ++a) sum += Int(mpz_kronecker_si(D.get_mpz_t(), a)) * a;
    const Int h = -(sum * w) / (2 * (-disc));
    return h.get_si();
}

/// Reduced primitive forms by direct triple enumeration.
inline long reduced_form_count(long disc)
{
    long count = 0;
    for (long A = 1; 3 * A * A <= -disc; ++A)
        for (long B = -A; B <= A; ++B)
            for (long C = A; 4 * A * C - B * B <= -disc; ++C) {
                if (B * B - 4 * A * C != disc) continue;
                if (B < 0 && (-B == A || A == C)) continue;
                if (std::gcd(std::gcd(A, std::labs(B)), C) != 1) continue;
                ++count;
            }
    return count;
}

/// |Z_K / I| by counting residues of Z_K / aZ_K that lie in I.
inline long residue_count_norm(const atomzeta::Ideal& I)
{
    const long a = I.a().get_si();
    long inside = 0;
    for (long x = 0; x < a; ++x)
        for (long y = 0; y < a; ++y)
            if (atomzeta::contains(I, Element(I.field(), x, y))) ++inside;
    return a * a / inside;
}

/// Every valid HNF triple (a, b, c) with a*c <= kappa.
inline std::vector<atomzeta::Ideal> hnf_scan(const QuadraticField& f, long kappa)
{
    std::vector<atomzeta::Ideal> out;
    const Element w = Element::omega(f);
    for (long c = 1; c * c <= kappa; ++c)
        for (long a = c; a * c <= kappa; a += c)
            for (long b = 0; b < a; b += c) {
                // closure: w*a and w*(b + c w) must lie in the lattice
                auto I = atomzeta::Ideal::from_hnf_unchecked(f, a, b, c);
                bool ok = true;
                for (const auto& g : {Element(f, a), Element(f, b, c)})
                    if (!atomzeta::contains(I, g * w)) ok = false;
                if (ok) out.push_back(I);
            }
    return out;
}

/// Uniform random element with coordinates in [-r, r].
inline Element random_element(const QuadraticField& f, std::mt19937_64& rng, long r)
{
    std::uniform_int_distribution<long> dist(-r, r);
    if (f.is_rational()) return Element(f, dist(rng));
    return Element(f, dist(rng), dist(rng));
}

inline Element random_nonzero(const QuadraticField& f, std::mt19937_64& rng, long r)
{
    for (;;) {
        Element e = random_element(f, rng, r);
        if (!e.is_zero()) return e;
    }
}

} // namespace oracle
