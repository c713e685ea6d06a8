#pragma once

// Principality of ideals, class groups of imaginary quadratic fields, and
// the Davenport constant of finite abelian groups.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "forms.hpp"
#include "primes.hpp"
#include "units.hpp"

namespace atomzeta {

struct Principality {
    bool principal = false;
    std::optional<Element> generator;
};

namespace detail {

// Real fields: the canonical associate g of any generator satisfies
// sigma(g) in [sqrt N, eps sqrt N) and |sigma'(g)| = N / sigma(g) <= sqrt N,
// so its omega coordinate Y = (sigma - sigma') / sqrt(disc) obeys
// |Y| < (eps + 1) sqrt(N) / sqrt(disc).  Every such Y is a multiple of c,
// and for each Y the norm equation is a quadratic in X, so scanning Y
// covers the whole band.
inline Principality real_generator_search(const Ideal& I)
{
    const auto& f = I.field();
    const Int n = I.norm();
    const Element eps = fundamental_unit(f);
    const long double disc = static_cast<long double>(f.discriminant());
    const long double eps_val =
        (2.0L * eps.x().get_d() + f.omega_trace() * eps.y().get_d() + eps.y().get_d() * std::sqrt(disc)) / 2.0L;
    const long double ymax = (eps_val + 1.0L) * std::sqrt(n.get_d()) / std::sqrt(disc) + 1.0L;
    const long double vmax_f = ymax / I.c().get_d();
    if (vmax_f > 1e8L)
        throw Error(ErrorKind::cap_exceeded, "principality search range too large for ideal " + to_string(I));
    const long vmax = static_cast<long>(vmax_f) + 1;
    const Int D = from_i64(f.discriminant());
    const int t = f.omega_trace();
    for (long step = 0; step <= 2 * vmax; ++step) {
        const long v = (step % 2 == 0) ? step / 2 : -(step + 1) / 2;
        const Int Y = Int(v) * I.c();
        for (int s : {1, -1}) {
            const Int dx = D * Y * Y + 4 * s * n;
            if (!is_square(dx)) continue;
            const Int r = isqrt(dx);
            for (const Int& num : {Int(-t * Y + r), Int(-t * Y - r)}) {
                if (!divisible(num, 2)) continue;
                Element alpha(f, num / 2, Y);
                if (contains(I, alpha)) return {true, canonical_associate(alpha)};
            }
        }
    }
    return {false, std::nullopt};
}

} // namespace detail

/// Ellipse scan for a generator in an imaginary field: every element of I
/// with |N| = N(I).  Slow; kept as an independent cross-check of the
/// reduction route.
inline std::optional<Element> generator_by_ellipse_scan(const Ideal& I)
{
    const auto& f = I.field();
    if (!f.is_imaginary()) throw Error(ErrorKind::unsupported, "ellipse scan needs an imaginary field");
    const Int n = I.norm();
    const Int D = from_i64(f.discriminant());
    // 4N(X + Y omega) = (2X + tY)^2 + |D| Y^2, so |Y| <= 2 sqrt(N/|D|)
    const Int ymax = isqrt(4 * n / abs(D)) + 1;
    const int t = f.omega_trace();
    for (Int Y = -ymax; Y <= ymax; ++Y) {
        const Int rem = 4 * n + D * Y * Y; // (2X + tY)^2
        if (!is_square(rem)) continue;
        const Int r = isqrt(rem);
        for (const Int& num : {Int(-t * Y + r), Int(-t * Y - r)}) {
            if (!divisible(num, 2)) continue;
            Element alpha(f, num / 2, Y);
            if (contains(I, alpha)) return alpha;
        }
    }
    return std::nullopt;
}

/// Whether I is principal, with a generator when it is.  Imaginary fields
/// reduce the norm form of I while tracking the basis change; a reduced
/// form with A = 1 hands back the vector that represents 1.
inline Principality is_principal(const Ideal& I)
{
    const auto& f = I.field();
    if (f.is_rational()) return {true, Element(f, I.a())};
    if (f.is_real()) return detail::real_generator_search(I);
    const auto red = reduce_form_with_transform(ideal_to_form(I));
    if (red.form.A != 1) return {false, std::nullopt};
    const Int& u = red.transform[0];
    const Int& v = red.transform[2];
    Element g(f, u * I.a() + v * I.b(), v * I.c());
    if (abs_norm(g) != I.norm()) throw Error(ErrorKind::internal, "reduction produced a non-generator for " + to_string(I));
    return {true, canonical_associate(g)};
}

/// Invariant factors m_1 | m_2 | ... | m_r with every m_i >= 2.
struct AbelianGroupSpec {
    std::vector<std::uint64_t> factors;

    std::uint64_t order() const
    {
        std::uint64_t o = 1;
        for (auto m : factors) o *= m;
        return o;
    }

    std::size_t rank() const { return factors.size(); }

    std::string describe() const
    {
        if (factors.empty()) return "trivial";
        std::string s;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) s += " x ";
            s += "Z/" + std::to_string(factors[i]);
        }
        return s;
    }

    friend bool operator==(const AbelianGroupSpec&, const AbelianGroupSpec&) = default;
};

/// Reduced primitive forms of a negative discriminant, sorted.
inline std::vector<QuadForm> reduced_forms(const Int& disc)
{
    check_negative(disc);
    std::vector<QuadForm> out;
    const Int amax = isqrt(abs(disc) / 3);
    for (Int A = 1; A <= amax; ++A) {
        for (Int B = -A + 1; B <= A; ++B) {
            const Int num = B * B - disc;
            if (!divisible(num, 4 * A)) continue;
            const Int C = num / (4 * A);
            QuadForm q{A, B, C};
            if (!q.is_reduced()) continue;
            Int g = gcd(gcd(A, B), C);
            if (g != 1) continue;
            out.push_back(std::move(q));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::uint64_t class_number(const QuadraticField& f)
{
    if (f.is_rational()) return 1;
    if (!f.is_imaginary()) throw Error(ErrorKind::unsupported, "class numbers are only computed for imaginary fields");
    return reduced_forms(from_i64(f.discriminant())).size();
}

inline QuadForm form_power(const QuadForm& g, std::uint64_t e)
{
    QuadForm r = principal_form(g.discriminant());
    QuadForm b = g;
    while (e) {
        if (e & 1) r = compose(r, b);
        b = compose(b, b);
        e >>= 1;
    }
    return r;
}

/// Invariant factors of a finite abelian group from the orders of its
/// elements: |G[q^k]| = q^{r_k} and r_k - r_{k-1} cyclic q-factors have
/// exponent >= k.
inline AbelianGroupSpec structure_from_orders(const std::vector<std::uint64_t>& orders)
{
    const std::uint64_t h = orders.size();
    std::vector<std::vector<int>> exps; // per prime: exponents of cyclic factors, descending
    std::vector<std::uint64_t> qs;
    for (auto [q, e] : factor_u64(h)) {
        std::vector<int> r(static_cast<std::size_t>(e) + 2, 0);
        std::uint64_t qk = 1;
        for (int k = 1; k <= e + 1; ++k) {
            qk *= q;
            std::uint64_t cnt = 0;
            for (auto o : orders)
                if (qk % o == 0) ++cnt;
            int rk = 0;
            for (std::uint64_t c = cnt; c > 1; c /= q) ++rk;
            r[static_cast<std::size_t>(k)] = rk;
        }
        std::vector<int> cyc;
        for (int k = 1; k <= e + 1; ++k) {
            const int ge_k = r[static_cast<std::size_t>(k)] - r[static_cast<std::size_t>(k - 1)];
            const int ge_k1 = (k + 1 <= e + 1) ? r[static_cast<std::size_t>(k + 1)] - r[static_cast<std::size_t>(k)] : 0;
            for (int i = 0; i < ge_k - ge_k1; ++i) cyc.push_back(k);
        }
        std::sort(cyc.rbegin(), cyc.rend());
        qs.push_back(q);
        exps.push_back(std::move(cyc));
    }
    std::size_t rank = 0;
    for (const auto& c : exps) rank = std::max(rank, c.size());
    std::vector<std::uint64_t> inv(rank, 1);
    for (std::size_t i = 0; i < qs.size(); ++i)
        for (std::size_t j = 0; j < exps[i].size(); ++j)
            for (int k = 0; k < exps[i][j]; ++k) inv[rank - 1 - j] *= qs[i];
    return AbelianGroupSpec{inv};
}

inline AbelianGroupSpec class_group_structure(const QuadraticField& f)
{
    if (f.is_rational()) return {};
    if (!f.is_imaginary()) throw Error(ErrorKind::unsupported, "class group structure is only computed for imaginary fields");
    const auto forms = reduced_forms(from_i64(f.discriminant()));
    const std::uint64_t h = forms.size();
    const QuadForm id = principal_form(from_i64(f.discriminant()));
    const auto hf = factor_u64(h);
    std::vector<std::uint64_t> orders;
    orders.reserve(forms.size());
    for (const auto& g : forms) {
        std::uint64_t o = h;
        for (auto [q, e] : hf) {
            (void)e;
            while (o % q == 0 && form_power(g, o / q) == id) o /= q;
        }
        orders.push_back(o);
    }
    return structure_from_orders(orders);
}

/// Default cap on |G| for the exhaustive Davenport search.
inline constexpr std::uint64_t davenport_default_cap = 64;

/// m_1 + m_2 - 1 for rank <= 2 (m for cyclic groups, 1 when trivial).
inline std::uint64_t davenport_rank2_formula(const AbelianGroupSpec& g)
{
    if (g.rank() > 2) throw Error(ErrorKind::unsupported, "closed form only covers rank <= 2");
    std::uint64_t d = 1;
    for (auto m : g.factors) d += m - 1;
    return d;
}

/// Smallest D such that every sequence of length D over G has a nonempty
/// zero-sum subsequence, by exhaustive search for the longest zero-sum
/// free sequence.  The search state is the set of nonempty subset sums,
/// which alone decides how a sequence can be extended.
inline std::uint64_t davenport_constant(const AbelianGroupSpec& g, std::uint64_t cap = davenport_default_cap)
{
    const std::uint64_t n = g.order();
    if (n > cap || n > 64) {
        throw Error(ErrorKind::cap_exceeded, "group order " + std::to_string(n) + " exceeds the exhaustive cap " +
                                                 std::to_string(std::min<std::uint64_t>(cap, 64)) +
                                                 "; use the rank <= 2 closed form m1 + m2 - 1 where it applies");
    }
    if (n == 1) return 1;
    // element i <-> mixed-radix digits over the invariant factors
    std::vector<std::vector<std::uint8_t>> add(n, std::vector<std::uint8_t>(n));
    std::vector<std::uint8_t> neg(n);
    auto digits = [&](std::uint64_t i) {
        std::vector<std::uint64_t> d;
        for (auto m : g.factors) {
            d.push_back(i % m);
            i /= m;
        }
        return d;
    };
    auto index = [&](const std::vector<std::uint64_t>& d) {
        std::uint64_t i = 0;
        for (std::size_t k = g.factors.size(); k-- > 0;) i = i * g.factors[k] + d[k];
        return i;
    };
    for (std::uint64_t i = 0; i < n; ++i) {
        const auto di = digits(i);
        std::vector<std::uint64_t> dn(di.size());
        for (std::size_t k = 0; k < di.size(); ++k) dn[k] = (g.factors[k] - di[k]) % g.factors[k];
        neg[i] = static_cast<std::uint8_t>(index(dn));
        for (std::uint64_t j = 0; j < n; ++j) {
            const auto dj = digits(j);
            std::vector<std::uint64_t> ds(di.size());
            for (std::size_t k = 0; k < di.size(); ++k) ds[k] = (di[k] + dj[k]) % g.factors[k];
            add[i][j] = static_cast<std::uint8_t>(index(ds));
        }
    }
    auto shift = [&](std::uint64_t set, std::uint64_t x) {
        std::uint64_t out = 0;
        for (std::uint64_t s = set; s; s &= s - 1) out |= 1ULL << add[static_cast<std::size_t>(__builtin_ctzll(s))][x];
        return out;
    };
    std::unordered_map<std::uint64_t, int> memo;
    std::function<int(std::uint64_t)> longest = [&](std::uint64_t sums) -> int {
        if (auto it = memo.find(sums); it != memo.end()) return it->second;
        int best = 0;
        for (std::uint64_t x = 1; x < n; ++x) {
            if (sums >> neg[x] & 1ULL) continue; // would close a zero sum
            const std::uint64_t next = sums | (1ULL << x) | shift(sums, x);
            if (next & 1ULL) continue;
            if (next == sums) continue; // cannot happen for zero-sum free extensions
            best = std::max(best, 1 + longest(next));
        }
        memo.emplace(sums, best);
        return best;
    };
    return static_cast<std::uint64_t>(longest(0)) + 1;
}

} // namespace atomzeta
