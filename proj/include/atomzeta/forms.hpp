#pragma once

// Positive definite binary quadratic forms Ax^2 + Bxy + Cy^2 of negative
// discriminant, and their correspondence with ideals of imaginary
// quadratic rings.

#include <array>
#include <ostream>
#include <string>
#include <tuple>

#include "ideal.hpp"

namespace atomzeta {

struct QuadForm {
    Int A, B, C;

    Int discriminant() const { return B * B - 4 * A * C; }

    /// |B| <= A <= C, and B >= 0 when |B| = A or A = C.
    bool is_reduced() const
    {
        if (sgn(A) <= 0) return false;
        if (abs(B) > A || A > C) return false;
        if ((abs(B) == A || A == C) && sgn(B) < 0) return false;
        return true;
    }

    friend bool operator==(const QuadForm& l, const QuadForm& r) { return l.A == r.A && l.B == r.B && l.C == r.C; }
    friend bool operator<(const QuadForm& l, const QuadForm& r)
    {
        return std::tie(l.A, l.B, l.C) < std::tie(r.A, r.B, r.C);
    }
};

inline std::string to_string(const QuadForm& f)
{
    return "(" + f.A.get_str() + ", " + f.B.get_str() + ", " + f.C.get_str() + ")";
}

inline std::ostream& operator<<(std::ostream& os, const QuadForm& f) { return os << to_string(f); }

/// 2x2 integer matrix [[m00, m01], [m10, m11]] acting on column vectors.
using Transform = std::array<Int, 4>;

/// Reduced form together with M in SL2(Z) such that reduced(v) = f(M v).
struct ReducedForm {
    QuadForm form;
    Transform transform;
};

inline void check_negative(const Int& disc)
{
    if (sgn(disc) >= 0)
        throw Error(ErrorKind::unsupported, "form reduction requires a negative discriminant (got " + disc.get_str() + ")");
}

inline ReducedForm reduce_form_with_transform(QuadForm f)
{
    check_negative(f.discriminant());
    if (sgn(f.A) <= 0) throw Error(ErrorKind::unsupported, "only positive definite forms are reduced");
    Transform m{Int(1), Int(0), Int(0), Int(1)};
    for (;;) {
        // x -> x + k y brings B into (-A, A]
        const Int k = floor_div(f.A - f.B, 2 * f.A);
        if (k != 0) {
            f.C = f.A * k * k + f.B * k + f.C;
            f.B = f.B + 2 * f.A * k;
            m[1] += m[0] * k;
            m[3] += m[2] * k;
        }
        if (f.A > f.C || (f.A == f.C && sgn(f.B) < 0)) {
            // (x, y) -> (-y, x)
            std::swap(f.A, f.C);
            f.B = -f.B;
            Int t0 = m[0], t2 = m[2];
            m[0] = m[1];
            m[2] = m[3];
            m[1] = -t0;
            m[3] = -t2;
            continue;
        }
        break;
    }
    return {std::move(f), std::move(m)};
}

inline QuadForm reduce_form(const QuadForm& f) { return reduce_form_with_transform(f).form; }

/// The reduced form representing 1.
inline QuadForm principal_form(const Int& disc)
{
    check_negative(disc);
    const Int b = divisible(disc, 2) ? Int(0) : Int(1);
    return QuadForm{1, b, (b * b - disc) / 4};
}

inline QuadForm opposite(const QuadForm& f) { return QuadForm{f.A, -f.B, f.C}; }

/// Dirichlet composition followed by reduction.
inline QuadForm compose(QuadForm f1, QuadForm f2)
{
    const Int disc = f1.discriminant();
    if (disc != f2.discriminant()) throw Error(ErrorKind::field_mismatch, "forms have different discriminants");
    check_negative(disc);
    if (f1.A > f2.A) std::swap(f1, f2);
    const Int s = (f1.B + f2.B) / 2;
    const Int n = f2.B - s;
    Int y1, d;
    if (divisible(f2.A, f1.A)) {
        y1 = 0;
        d = f1.A;
    } else {
        Int v;
        mpz_gcdext(d.get_mpz_t(), y1.get_mpz_t(), v.get_mpz_t(), f2.A.get_mpz_t(), f1.A.get_mpz_t());
    }
    Int x2, y2, d1;
    if (divisible(s, d)) {
        y2 = -1;
        x2 = 0;
        d1 = d;
    } else {
        Int v;
        mpz_gcdext(d1.get_mpz_t(), x2.get_mpz_t(), v.get_mpz_t(), s.get_mpz_t(), d.get_mpz_t());
        y2 = -v;
    }
    const Int v1 = f1.A / d1, v2 = f2.A / d1;
    const Int r = mod_pos(y1 * y2 * n - x2 * f2.C, v1);
    const Int b3 = f2.B + 2 * v2 * r;
    const Int a3 = v1 * v2;
    const Int c3 = (b3 * b3 - disc) / (4 * a3);
    return reduce_form(QuadForm{a3, b3, c3});
}

/// Norm form N(u a + v (b + c omega)) / N(I) of the ideal's HNF basis.
inline QuadForm ideal_to_form(const Ideal& I)
{
    const auto& f = I.field();
    if (!f.is_imaginary()) throw Error(ErrorKind::unsupported, "ideal_to_form requires an imaginary quadratic field");
    const Element alpha(f, I.a());
    const Element beta(f, I.b(), I.c());
    const Int n = I.norm();
    return QuadForm{norm(alpha) / n, trace(alpha * conj(beta)) / n, norm(beta) / n};
}

/// Ideal aZ + ((B - t)/2 + omega)Z whose norm form is f.
inline Ideal form_to_ideal(const QuadraticField& field, const QuadForm& f)
{
    if (!field.is_imaginary()) throw Error(ErrorKind::unsupported, "form_to_ideal requires an imaginary quadratic field");
    if (f.discriminant() != from_i64(field.discriminant()))
        throw Error(ErrorKind::field_mismatch, "form discriminant does not match the field");
    return Ideal::from_hnf_unchecked(field, f.A, (f.B - field.omega_trace()) / 2, 1);
}

} // namespace atomzeta
