#pragma once

#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "integer.hpp"

namespace atomzeta {

/// Element x + y*omega of Z_K in integral-basis coordinates.  For K = Q
/// the y coordinate is always zero.
class Element {
public:
    Element(QuadraticField field, Int x, Int y = 0) : field_(std::move(field)), x_(std::move(x)), y_(std::move(y))
    {
        if (field_.is_rational() && y_ != 0)
            throw Error(ErrorKind::field_mismatch, "rational integers have no omega coordinate");
    }

    static Element integer(const QuadraticField& f, const Int& m) { return Element(f, m, 0); }
    static Element one(const QuadraticField& f) { return Element(f, 1, 0); }
    static Element omega(const QuadraticField& f) { return Element(f, 0, 1); }

    const Int& x() const { return x_; }
    const Int& y() const { return y_; }
    const QuadraticField& field() const { return field_; }

    bool is_zero() const { return x_ == 0 && y_ == 0; }
    bool is_rational_integer() const { return y_ == 0; }

    friend bool operator==(const Element& a, const Element& b)
    {
        return a.field_ == b.field_ && a.x_ == b.x_ && a.y_ == b.y_;
    }

    friend Element operator+(const Element& a, const Element& b)
    {
        check_same(a, b);
        return Element(a.field_, a.x_ + b.x_, a.y_ + b.y_);
    }

    friend Element operator-(const Element& a, const Element& b)
    {
        check_same(a, b);
        return Element(a.field_, a.x_ - b.x_, a.y_ - b.y_);
    }

    friend Element operator-(const Element& a) { return Element(a.field_, -a.x_, -a.y_); }

    friend Element operator*(const Element& a, const Element& b)
    {
        check_same(a, b);
        // omega^2 = t*omega + c
        const Int yy = a.y_ * b.y_;
        Int x = a.x_ * b.x_ + yy * a.field_.omega_constant();
        Int y = a.x_ * b.y_ + a.y_ * b.x_;
        if (a.field_.omega_trace() != 0) y += yy;
        return Element(a.field_, std::move(x), std::move(y));
    }

    Element& operator*=(const Element& o) { return *this = *this * o; }

    friend Element operator*(const Int& k, const Element& a) { return Element(a.field_, k * a.x_, k * a.y_); }

private:
    static void check_same(const Element& a, const Element& b)
    {
        if (!(a.field_ == b.field_))
            throw Error(ErrorKind::field_mismatch, "operands belong to different fields (" + a.field_.name() + " vs " +
                                                       b.field_.name() + ")");
    }

    QuadraticField field_;
    Int x_;
    Int y_;
};

/// Galois conjugate; omega maps to trace(omega) - omega.  Identity on Q.
inline Element conj(const Element& e)
{
    if (e.field().is_rational()) return e;
    Int x = e.x();
    if (e.field().omega_trace() != 0) x += e.y();
    return Element(e.field(), std::move(x), -e.y());
}

inline Int trace(const Element& e)
{
    if (e.field().is_rational()) return e.x();
    return 2 * e.x() + e.field().omega_trace() * e.y();
}

/// Field norm N_{K/Q}; may be negative in real quadratic fields.
inline Int norm(const Element& e)
{
    if (e.field().is_rational()) return e.x();
    Int n = e.x() * e.x() - e.field().omega_constant() * e.y() * e.y();
    if (e.field().omega_trace() != 0) n += e.x() * e.y();
    return n;
}

inline Int abs_norm(const Element& e) { return abs(norm(e)); }

/// Minimal polynomial over Q, coefficients from the constant term up
/// (monic leading coefficient last).
inline std::vector<Int> minimal_poly(const Element& e)
{
    if (e.is_rational_integer()) return {-e.x(), 1};
    return {norm(e), -trace(e), 1};
}

inline bool is_unit(const Element& e) { return abs_norm(e) == 1; }

/// a / b when the quotient lies in Z_K.
inline std::optional<Element> exact_quotient(const Element& a, const Element& b)
{
    if (b.is_zero()) throw Error(ErrorKind::zero_element, "division by zero");
    if (a.field().is_rational()) {
        if (!(a.field() == b.field())) throw Error(ErrorKind::field_mismatch, "operands belong to different fields");
        if (!divisible(a.x(), b.x())) return std::nullopt;
        return Element(a.field(), a.x() / b.x());
    }
    const Int n = norm(b);
    const Element num = a * conj(b);
    if (!divisible(num.x(), n) || !divisible(num.y(), n)) return std::nullopt;
    Int qx, qy;
    mpz_divexact(qx.get_mpz_t(), num.x().get_mpz_t(), n.get_mpz_t());
    mpz_divexact(qy.get_mpz_t(), num.y().get_mpz_t(), n.get_mpz_t());
    return Element(a.field(), std::move(qx), std::move(qy));
}

/// b | a in Z_K.
inline bool divides(const Element& b, const Element& a) { return exact_quotient(a, b).has_value(); }

inline Element power(Element b, unsigned e)
{
    Element r = Element::one(b.field());
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

/// Sign of p + q*sqrt(D) for D > 0 not a perfect square.
inline int sign_surd(const Int& p, const Int& q, const Int& D)
{
    const int sp = sgn(p), sq = sgn(q);
    if (sq == 0) return sp;
    if (sp == 0 || sp == sq) return sq;
    // opposite signs: compare p^2 with q^2 D
    const int c = cmp(p * p, q * q * D);
    return c > 0 ? sp : sq;
}

/// Sign of the real embedding sigma(e) that sends sqrt(d) to the
/// positive root.  Real fields and Q only.
inline int embedding_sign(const Element& e)
{
    if (e.field().is_rational()) return sgn(e.x());
    // 2*sigma(e) = (2x + t*y) + y*sqrt(disc)
    return sign_surd(2 * e.x() + e.field().omega_trace() * e.y(), e.y(), from_i64(e.field().discriminant()));
}

/// Whether sigma(e)^2 >= bound for the positive real embedding.
inline bool embedding_square_at_least(const Element& e, const Int& bound)
{
    const Int p = 2 * e.x() + e.field().omega_trace() * e.y();
    const Int disc = from_i64(e.field().discriminant());
    // (p + y sqrt(D))^2 >= 4 bound
    return sign_surd(p * p + e.y() * e.y() * disc - 4 * bound, 2 * p * e.y(), disc) >= 0;
}

inline std::string to_string(const Element& e)
{
    std::ostringstream os;
    const auto& f = e.field();
    if (f.is_rational() || e.y() == 0) {
        os << e.x().get_str();
        return os.str();
    }
    auto surd = [&](const Int& coef) {
        std::ostringstream s;
        if (coef == 1)
            ;
        else if (coef == -1)
            s << "-";
        else
            s << coef.get_str() << "*";
        s << "sqrt(" << f.d() << ")";
        return s.str();
    };
    if (f.basis() == BasisKind::sqrt_d) {
        if (e.x() != 0) {
            os << e.x().get_str() << (sgn(e.y()) > 0 ? "+" : "");
        }
        os << surd(e.y());
    } else {
        // x + y(1+sqrt d)/2 = (2x + y + y sqrt d)/2
        const Int r = 2 * e.x() + e.y();
        os << "(";
        if (r != 0) os << r.get_str() << (sgn(e.y()) > 0 ? "+" : "");
        os << surd(e.y()) << ")/2";
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Element& e) { return os << to_string(e); }

} // namespace atomzeta
