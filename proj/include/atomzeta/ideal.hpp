#pragma once

#include <compare>
#include <ostream>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "element.hpp"

namespace atomzeta {

/// Nonzero ideal aZ + (b + c*omega)Z of Z_K in Hermite normal form:
/// a, c > 0, c | a, c | b, 0 <= b < a.  Over Q the ideal is aZ and
/// (b, c) = (0, 1), so norm() = a*c holds uniformly.
class Ideal {
public:
    const QuadraticField& field() const { return field_; }
    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }

    /// Absolute norm |Z_K / I|.
    Int norm() const { return a_ * c_; }

    bool is_unit_ideal() const { return a_ == 1 && c_ == 1; }

    /// Z-basis: a and b + c*omega (just a over Q).
    std::vector<Element> basis() const
    {
        if (field_.is_rational()) return {Element(field_, a_)};
        return {Element(field_, a_), Element(field_, b_, c_)};
    }

    friend bool operator==(const Ideal& l, const Ideal& r)
    {
        return l.field_ == r.field_ && l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_;
    }

    /// Order by (norm, a, b).
    friend bool operator<(const Ideal& l, const Ideal& r)
    {
        const Int nl = l.norm(), nr = r.norm();
        if (nl != nr) return nl < nr;
        if (l.a_ != r.a_) return l.a_ < r.a_;
        return l.b_ < r.b_;
    }

    /// Builds the HNF of the Z-module spanned by the given elements, which
    /// must span a rank-n lattice.
    static Ideal from_generators(const QuadraticField& f, std::span<const Element> gens)
    {
        if (f.is_rational()) {
            Int g = 0;
            for (const auto& e : gens) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.x().get_mpz_t());
            if (g == 0) throw Error(ErrorKind::zero_element, "zero ideal");
            return Ideal(f, g, 0, 1);
        }
        // Euclid on the omega coordinate; x-only leftovers feed the gcd for a.
        bool have_pivot = false;
        Int px, py, a = 0;
        for (const auto& e : gens) {
            if (!(e.field() == f)) throw Error(ErrorKind::field_mismatch, "generator from another field");
            if (e.y() == 0) {
                mpz_gcd(a.get_mpz_t(), a.get_mpz_t(), e.x().get_mpz_t());
                continue;
            }
            if (!have_pivot) {
                px = e.x();
                py = e.y();
                have_pivot = true;
                continue;
            }
            Int g, u, w;
            mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), w.get_mpz_t(), py.get_mpz_t(), e.y().get_mpz_t());
            const Int ky = e.y() / g, kp = py / g;
            // (ky*pivot - kp*e) has zero omega coordinate
            const Int rx = ky * px - kp * e.x();
            mpz_gcd(a.get_mpz_t(), a.get_mpz_t(), rx.get_mpz_t());
            px = u * px + w * e.x();
            py = g;
        }
        if (!have_pivot || a == 0) throw Error(ErrorKind::zero_element, "generators do not span a full-rank ideal");
        a = abs(a);
        if (sgn(py) < 0) {
            px = -px;
            py = -py;
        }
        return Ideal(f, a, mod_pos(px, a), py);
    }

    /// HNF from raw (a, b, c) without checks; b is reduced mod a.
    static Ideal from_hnf_unchecked(const QuadraticField& f, Int a, Int b, Int c)
    {
        Int bb = mod_pos(b, a);
        return Ideal(f, std::move(a), std::move(bb), std::move(c));
    }

private:
    Ideal(QuadraticField f, Int a, Int b, Int c) : field_(std::move(f)), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

    QuadraticField field_;
    Int a_, b_, c_;
};

inline Ideal unit_ideal(const QuadraticField& f)
{
    const Element one = Element::one(f);
    if (f.is_rational()) return Ideal::from_generators(f, std::span(&one, 1));
    const Element gens[] = {one, Element::omega(f)};
    return Ideal::from_generators(f, gens);
}

inline Ideal principal_ideal(const Element& e)
{
    if (e.is_zero()) throw Error(ErrorKind::zero_element, "principal ideal of zero");
    const auto& f = e.field();
    if (f.is_rational()) return Ideal::from_generators(f, std::span(&e, 1));
    const Element gens[] = {e, e * Element::omega(f)};
    return Ideal::from_generators(f, gens);
}

inline Int ideal_norm(const Ideal& I) { return I.norm(); }

inline bool contains(const Ideal& I, const Element& e)
{
    if (I.field().is_rational()) return divisible(e.x(), I.a());
    if (!divisible(e.y(), I.c())) return false;
    const Int k = e.y() / I.c();
    return divisible(e.x() - k * I.b(), I.a());
}

/// J | I, i.e. I is contained in J.
inline bool ideal_divides(const Ideal& J, const Ideal& I)
{
    for (const auto& g : I.basis())
        if (!contains(J, g)) return false;
    return true;
}

inline Ideal ideal_mul(const Ideal& I, const Ideal& J)
{
    if (!(I.field() == J.field())) throw Error(ErrorKind::field_mismatch, "ideals from different fields");
    if (I.field().is_rational()) {
        const Element g(I.field(), I.a() * J.a());
        return Ideal::from_generators(I.field(), std::span(&g, 1));
    }
    std::vector<Element> gens;
    gens.reserve(4);
    for (const auto& u : I.basis())
        for (const auto& v : J.basis()) gens.push_back(u * v);
    return Ideal::from_generators(I.field(), gens);
}

inline Ideal ideal_pow(const Ideal& I, unsigned e)
{
    Ideal r = unit_ideal(I.field());
    for (unsigned i = 0; i < e; ++i) r = ideal_mul(r, I);
    return r;
}

inline Ideal conj(const Ideal& I)
{
    if (I.field().is_rational()) return I;
    const Element gens[] = {Element(I.field(), I.a()), conj(Element(I.field(), I.b(), I.c()))};
    return Ideal::from_generators(I.field(), gens);
}

/// I / m for a positive rational integer m with I contained in mZ_K.
inline Ideal divide_by_integer(const Ideal& I, const Int& m)
{
    if (!divisible(I.a(), m) || !divisible(I.b(), m) || !divisible(I.c(), m))
        throw Error(ErrorKind::internal, "ideal not divisible by " + m.get_str());
    return Ideal::from_hnf_unchecked(I.field(), I.a() / m, I.b() / m, I.c() / m);
}

/// HNF invariants plus closure under multiplication by omega.
inline bool is_valid_hnf(const Ideal& I)
{
    if (sgn(I.a()) <= 0 || sgn(I.c()) <= 0) return false;
    if (sgn(I.b()) < 0 || I.b() >= I.a()) return false;
    if (I.field().is_rational()) return I.b() == 0 && I.c() == 1;
    if (!divisible(I.a(), I.c()) || !divisible(I.b(), I.c())) return false;
    const Element w = Element::omega(I.field());
    for (const auto& g : I.basis())
        if (!contains(I, g * w)) return false;
    return true;
}

inline std::string to_string(const Ideal& I)
{
    if (I.field().is_rational()) return "(" + I.a().get_str() + ")";
    return "[" + I.a().get_str() + ", " + I.b().get_str() + ", " + I.c().get_str() + "]";
}

inline std::ostream& operator<<(std::ostream& os, const Ideal& I) { return os << to_string(I); }

} // namespace atomzeta
