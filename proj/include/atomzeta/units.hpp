#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "element.hpp"

namespace atomzeta {

namespace detail {

// First convergent p/q of the continued fraction of omega with
// N(p - q*omega) = +-1.  Every unit eta = p - q*omega satisfies
// |p/q - omega| < 1/(2 q^2) once disc > 4, so Legendre's theorem puts it
// among the convergents, and the smallest q gives the smallest unit > 1.
inline std::pair<Int, Int> fundamental_unit_cf(const QuadraticField& f)
{
    const Int D = from_i64(f.discriminant());
    const Int s = isqrt(D);
    // omega = (P + sqrt D) / Q
    Int P = f.omega_trace();
    Int Q = 2;
    Int p_prev = 1, p_prev2 = 0, q_prev = 0, q_prev2 = 1;
    for (;;) {
        const Int a = sgn(Q) > 0 ? floor_div(P + s, Q) : floor_div(P + s + 1, Q);
        const Int p = a * p_prev + p_prev2;
        const Int q = a * q_prev + q_prev2;
        const Element eta(f, p, -q);
        if (abs_norm(eta) == 1) {
            // epsilon = conj(p - q omega) up to sign = (p - q t) + q omega
            return {p - q * f.omega_trace(), q};
        }
        p_prev2 = p_prev;
        p_prev = p;
        q_prev2 = q_prev;
        q_prev = q;
        P = a * Q - P;
        Q = (D - P * P) / Q;
    }
}

} // namespace detail

/// Smallest unit > 1 (under sqrt(d) > 0) of a real quadratic ring.
inline Element fundamental_unit(const QuadraticField& f)
{
    if (!f.is_real()) throw Error(ErrorKind::unsupported, "fundamental unit requires a real quadratic field");
    const auto& data = f.data();
    std::call_once(data.unit_once, [&] { data.unit = detail::fundamental_unit_cf(f); });
    return Element(f, data.unit.first, data.unit.second);
}

/// Torsion units of Z_K.
inline std::vector<Element> roots_of_unity(const QuadraticField& f)
{
    std::vector<Element> out{Element(f, 1), Element(f, -1)};
    if (f.is_imaginary() && f.d() == -1) {
        out.emplace_back(f, 0, 1);
        out.emplace_back(f, 0, -1);
    } else if (f.is_imaginary() && f.d() == -3) {
        // omega = (1 + sqrt(-3))/2 is a primitive sixth root of unity
        out.emplace_back(f, 0, 1);
        out.emplace_back(f, -1, 1);
        out.emplace_back(f, 0, -1);
        out.emplace_back(f, 1, -1);
    }
    return out;
}

struct UnitGroup {
    std::vector<Element> roots_of_unity;
    std::optional<Element> fundamental_unit; // real fields only

    std::string describe() const
    {
        std::string s = "roots of unity: " + std::to_string(roots_of_unity.size());
        if (fundamental_unit) {
            s += ", fundamental unit " + to_string(*fundamental_unit) + " (norm " +
                 norm(*fundamental_unit).get_str() + ")";
        }
        return s;
    }
};

inline UnitGroup unit_group(const QuadraticField& f)
{
    UnitGroup g{roots_of_unity(f), std::nullopt};
    if (f.is_real()) g.fundamental_unit = fundamental_unit(f);
    return g;
}

/// Deterministic representative of the associate class of e.
///
/// Imaginary fields and Q: among the unit multiples, the one with x > 0 and
/// y >= 0; when no multiple qualifies (only +-1 available) the one with
/// x > 0, or x = 0 and y > 0.  Real fields: the multiple with positive
/// embedding in the band [sqrt|N|, eps*sqrt|N|).
inline Element canonical_associate(const Element& e)
{
    if (e.is_zero()) throw Error(ErrorKind::zero_element, "zero has no associate class");
    const auto& f = e.field();
    if (f.is_real()) {
        const Int n = abs_norm(e);
        const Element eps = fundamental_unit(f);
        const Element eps_inv = norm(eps) * conj(eps);
        Element a = embedding_sign(e) > 0 ? e : -e;
        while (!embedding_square_at_least(a, n)) a *= eps;
        for (;;) {
            Element b = a * eps_inv;
            if (!embedding_square_at_least(b, n)) break;
            a = std::move(b);
        }
        return a;
    }
    const auto units = roots_of_unity(f);
    std::optional<Element> best;
    auto consider = [&](auto&& pred) {
        for (const auto& u : units) {
            Element c = u * e;
            if (!pred(c)) continue;
            if (!best || std::tie(c.x(), c.y()) < std::tie(best->x(), best->y())) best = std::move(c);
        }
    };
    consider([](const Element& c) { return sgn(c.x()) > 0 && sgn(c.y()) >= 0; });
    if (!best) consider([](const Element& c) { return sgn(c.x()) > 0 || (sgn(c.x()) == 0 && sgn(c.y()) > 0); });
    return *best;
}

inline bool is_associated(const Element& a, const Element& b)
{
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return canonical_associate(a) == canonical_associate(b);
}

} // namespace atomzeta
