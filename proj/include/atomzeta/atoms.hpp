#pragma once

// Irreducible elements (atoms), factorizations into atoms, and the atoms
// dividing a rational integer.
//
// Everything here works on the prime-ideal factorization of (e): e = xy
// with x, y non-units exactly when (e) is the product of two proper
// principal ideals, i.e. when some proper nonempty sub-multiset of its
// prime ideals has a principal product.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "class_group.hpp"

namespace atomzeta {

struct AtomFactorization {
    Element unit;
    std::vector<std::pair<Element, int>> factors; // canonical, pairwise non-associated

    /// unit * prod atom^e
    Element product() const
    {
        Element r = unit;
        for (const auto& [a, e] : factors) r *= power(a, static_cast<unsigned>(e));
        return r;
    }

    int length() const
    {
        int n = 0;
        for (const auto& [a, e] : factors) n += e;
        return n;
    }
};

namespace detail {

inline bool atom_order(const Element& l, const Element& r)
{
    const Int nl = abs_norm(l), nr = abs_norm(r);
    if (nl != nr) return nl < nr;
    return std::tie(l.x(), l.y()) < std::tie(r.x(), r.y());
}

/// Exponent box of a factored ideal with per-point ideal products,
/// principality flags and norms; points are mixed-radix indices with the
/// first prime as the least significant digit.
class DivisorLattice {
public:
    DivisorLattice(const QuadraticField& f, const FactoredIdeal& F, std::optional<Int> norm_bound = std::nullopt)
        : field_(f), F_(F)
    {
        std::size_t total = 1;
        for (const auto& [P, e] : F_) {
            radix_.push_back(static_cast<std::size_t>(e) + 1);
            total *= radix_.back();
        }
        ideals_.reserve(total);
        principal_.assign(total, 0);
        for (std::size_t i = 0; i < total; ++i) {
            const auto k = digits(i);
            // build from the point with the last nonzero digit lowered
            std::optional<Ideal> I;
            Int n = 1;
            for (std::size_t j = 0; j < k.size(); ++j) n *= ipow(F_[j].first.ideal.norm(), static_cast<unsigned long>(k[j]));
            norms_.push_back(n);
            if (i == 0) {
                I = unit_ideal(f);
            } else if (!norm_bound || n <= *norm_bound) {
                std::size_t j = 0;
                while (k[j] == 0) ++j;
                const std::size_t prev = i - stride(j);
                if (ideals_[prev]) I = ideal_mul(*ideals_[prev], F_[j].first.ideal);
            }
            ideals_.push_back(I);
        }
    }

    std::size_t size() const { return ideals_.size(); }
    std::size_t top() const { return ideals_.size() - 1; }

    std::vector<std::size_t> digits(std::size_t i) const
    {
        std::vector<std::size_t> d(radix_.size());
        for (std::size_t j = 0; j < radix_.size(); ++j) {
            d[j] = i % radix_[j];
            i /= radix_[j];
        }
        return d;
    }

    std::size_t stride(std::size_t j) const
    {
        std::size_t s = 1;
        for (std::size_t t = 0; t < j; ++t) s *= radix_[t];
        return s;
    }

    const std::optional<Ideal>& ideal(std::size_t i) const { return ideals_[i]; }
    const Int& norm(std::size_t i) const { return norms_[i]; }

    /// Principality of point i (cached).
    bool principal(std::size_t i)
    {
        if (principal_[i] == 0) {
            if (!ideals_[i]) throw Error(ErrorKind::internal, "divisor outside the norm bound queried");
            auto r = is_principal(*ideals_[i]);
            principal_[i] = r.principal ? 1 : 2;
            if (r.principal) generators_.emplace(i, std::move(*r.generator));
        }
        return principal_[i] == 1;
    }

    const Element& generator(std::size_t i)
    {
        if (!principal(i)) throw Error(ErrorKind::internal, "generator of a non-principal divisor requested");
        return generators_.at(i);
    }

    /// j <= i componentwise.
    bool below(std::size_t j, std::size_t i) const
    {
        for (std::size_t t = 0; t < radix_.size(); ++t) {
            if (j % radix_[t] > i % radix_[t]) return false;
            j /= radix_[t];
            i /= radix_[t];
        }
        return true;
    }

    /// Principal point i whose generator is an atom: no proper nonempty
    /// sub-point is principal.
    bool atomic(std::size_t i)
    {
        if (i == 0 || !principal(i)) return false;
        for (std::size_t j = 1; j < i; ++j)
            if (below(j, i) && principal(j)) return false;
        return true;
    }

private:
    QuadraticField field_;
    FactoredIdeal F_;
    std::vector<std::size_t> radix_;
    std::vector<std::optional<Ideal>> ideals_;
    std::vector<Int> norms_;
    std::vector<std::uint8_t> principal_; // 0 unknown, 1 yes, 2 no
    std::map<std::size_t, Element> generators_;
};

inline void require_nonzero(const Element& e)
{
    if (e.is_zero()) throw Error(ErrorKind::zero_element, "zero is neither a unit nor an atom");
}

} // namespace detail

inline bool is_atom(const Element& e)
{
    detail::require_nonzero(e);
    if (is_unit(e)) return false;
    const Int n = abs_norm(e);
    // a prime norm leaves a single prime ideal: nothing proper to split off
    if (fits_u64(n) && is_prime_u64(to_u64(n))) return true;
    const FactoredIdeal F = factor_ideal(principal_ideal(e));
    detail::DivisorLattice lattice(e.field(), F);
    for (std::size_t j = 1; j < lattice.top(); ++j)
        if (lattice.principal(j)) return false;
    return true;
}

/// One factorization of e into atoms.  Each round removes a principal
/// sub-product of the remaining prime ideals of smallest total exponent
/// (ties: earlier primes first); minimality makes its generator an atom.
inline AtomFactorization factor_into_atoms(const Element& e)
{
    detail::require_nonzero(e);
    if (is_unit(e)) throw Error(ErrorKind::unit_element, "unit has no atom factorization");
    const auto& f = e.field();
    const FactoredIdeal F = factor_ideal(principal_ideal(e));
    std::vector<int> rem;
    for (const auto& [P, k] : F) rem.push_back(k);

    std::vector<Element> atoms;
    Element cur = e;
    int left = 0;
    for (int k : rem) left += k;
    while (left > 0) {
        std::optional<std::vector<int>> found;
        std::optional<Element> gen;
        std::vector<int> pick(rem.size(), 0);
        // exponent vectors of total `size` below rem, earlier primes first
        std::function<bool(std::size_t, int, const Ideal&)> search = [&](std::size_t i, int need, const Ideal& acc) {
            if (i == rem.size()) {
                if (need != 0) return false;
                auto r = is_principal(acc);
                if (!r.principal) return false;
                found = pick;
                gen = std::move(r.generator);
                return true;
            }
            int later = 0;
            for (std::size_t j = i + 1; j < rem.size(); ++j) later += rem[j];
            for (int take = std::min(need, rem[i]); take >= 0; --take) {
                if (need - take > later) break;
                pick[i] = take;
                if (search(i + 1, need - take, ideal_mul(acc, ideal_pow(F[i].first.ideal, static_cast<unsigned>(take)))))
                    return true;
            }
            pick[i] = 0;
            return false;
        };
        for (int size = 1; size <= left && !found; ++size) search(0, size, unit_ideal(f));
        if (!found) throw Error(ErrorKind::internal, "no principal sub-product found while factoring " + to_string(e));
        const Element g = canonical_associate(*gen);
        auto q = exact_quotient(cur, g);
        if (!q) throw Error(ErrorKind::internal, "generator does not divide the remaining cofactor");
        cur = std::move(*q);
        for (std::size_t i = 0; i < rem.size(); ++i) {
            rem[i] -= (*found)[i];
            left -= (*found)[i];
        }
        atoms.push_back(g);
    }
    if (!is_unit(cur)) throw Error(ErrorKind::internal, "cofactor after atom extraction is not a unit");

    std::sort(atoms.begin(), atoms.end(), detail::atom_order);
    AtomFactorization out{cur, {}};
    for (auto& a : atoms) {
        if (!out.factors.empty() && out.factors.back().first == a)
            ++out.factors.back().second;
        else
            out.factors.emplace_back(std::move(a), 1);
    }
    return out;
}

/// Principal ideals dividing mZ_K whose generators are atoms, restricted to
/// norm <= norm_bound when given; sorted by (norm, a, b).
inline std::vector<Ideal> atom_ideals_dividing(std::uint64_t m, const QuadraticField& f,
                                               std::optional<Int> norm_bound = std::nullopt)
{
    if (m < 1) throw Error(ErrorKind::out_of_range, "m must be a positive integer");
    std::vector<Ideal> out;
    if (m == 1) return out;
    const FactoredIdeal F = factor_ideal(principal_ideal(Element::integer(f, from_u64(m))));
    detail::DivisorLattice lattice(f, F, norm_bound);
    for (std::size_t i = 1; i < lattice.size(); ++i) {
        if (!lattice.ideal(i)) continue;
        if (lattice.atomic(i)) out.push_back(*lattice.ideal(i));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Canonical representatives of every associate class of atoms dividing m.
inline std::vector<Element> atoms_dividing(std::uint64_t m, const QuadraticField& f)
{
    if (m < 1) throw Error(ErrorKind::out_of_range, "m must be a positive integer");
    std::vector<Element> out;
    if (m == 1) return out;
    const FactoredIdeal F = factor_ideal(principal_ideal(Element::integer(f, from_u64(m))));
    detail::DivisorLattice lattice(f, F);
    for (std::size_t i = 1; i < lattice.size(); ++i)
        if (lattice.atomic(i)) out.push_back(lattice.generator(i));
    std::sort(out.begin(), out.end(), detail::atom_order);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// m^n == prod N(a_i Z_K)^{e_i}, the integer form of taking n-th roots of
/// ideal norms.
inline bool verify_norm_identity(std::uint64_t m, const AtomFactorization& F)
{
    const int n = F.unit.field().degree();
    Int rhs = 1;
    for (const auto& [a, e] : F.factors) rhs *= ipow(abs_norm(a), static_cast<unsigned long>(e));
    return ipow(from_u64(m), static_cast<unsigned long>(n)) == rhs;
}

} // namespace atomzeta
