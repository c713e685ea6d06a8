#pragma once

// Ideal sets and partial sums of sum_{I in J} N(I)^{-s} under a norm
// cutoff kappa, plus the atom census a_n = #{atom ideals of norm n}.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "atoms.hpp"
#include "bigfloat.hpp"

namespace atomzeta {

/// Exact rational exponent num/den, den > 0, in lowest terms.
struct Rational {
    long num = 0;
    unsigned long den = 1;

    static Rational make(long num, long den)
    {
        if (den == 0) throw Error(ErrorKind::parse, "zero denominator in exponent");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const long g = std::gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        return Rational{num, static_cast<unsigned long>(den)};
    }

    /// "p/q" or "p".
    static Rational parse(const std::string& s)
    {
        const auto slash = s.find('/');
        try {
            std::size_t pos = 0;
            const long p = std::stol(s.substr(0, slash), &pos);
            if (pos != (slash == std::string::npos ? s.size() : slash)) throw std::invalid_argument(s);
            long q = 1;
            if (slash != std::string::npos) {
                const std::string tail = s.substr(slash + 1);
                q = std::stol(tail, &pos);
                if (pos != tail.size()) throw std::invalid_argument(s);
            }
            return make(p, q);
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            throw Error(ErrorKind::parse, "bad exponent '" + s + "' (expected p/q)");
        }
    }

    std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Rational&, const Rational&) = default;
};

/// n^{-s}, correctly rounded steps: n^|p| exactly, then the q-th root,
/// then the reciprocal when s > 0.
inline BigFloat norm_power(std::uint64_t n, const Rational& s, mpfr_prec_t prec)
{
    BigFloat out(prec);
    if (s.num == 0) {
        mpfr_set_ui(out.get(), 1, MPFR_RNDN);
        return out;
    }
    const unsigned long e = static_cast<unsigned long>(s.num < 0 ? -s.num : s.num);
    const Int np = ipow(from_u64(n), e);
    if (s.num > 0 && s.den == 1) {
        BigFloat t(prec + 64);
        mpfr_set_z(t.get(), np.get_mpz_t(), MPFR_RNDN);
        mpfr_ui_div(out.get(), 1, t.get(), MPFR_RNDN);
        return out;
    }
    if (s.num > 0 && s.den == 2) {
        BigFloat t(prec + 64);
        mpfr_set_z(t.get(), np.get_mpz_t(), MPFR_RNDN);
        mpfr_rec_sqrt(out.get(), t.get(), MPFR_RNDN);
        return out;
    }
    BigFloat t(prec + 64);
    mpfr_set_z(t.get(), np.get_mpz_t(), MPFR_RNDN);
    if (s.den > 1) mpfr_rootn_ui(t.get(), t.get(), s.den, MPFR_RNDN);
    if (s.num > 0)
        mpfr_ui_div(out.get(), 1, t.get(), MPFR_RNDN);
    else
        mpfr_set(out.get(), t.get(), MPFR_RNDN);
    return out;
}

/// sum += count * term, the single accumulation step every series uses.
inline void accumulate(BigFloat& sum, std::uint64_t count, const BigFloat& term)
{
    if (count == 0) return;
    if (count == 1) {
        mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
        return;
    }
    BigFloat t(term.precision());
    mpfr_mul_ui(t.get(), term.get(), count, MPFR_RNDN);
    mpfr_add(sum.get(), sum.get(), t.get(), MPFR_RNDN);
}

/// Thread count: ATOMZETA_THREADS if set, else the hardware concurrency.
inline unsigned default_threads()
{
    if (const char* env = std::getenv("ATOMZETA_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    const unsigned h = std::thread::hardware_concurrency();
    return h ? h : 1;
}

/// The set X of positive integers.  Grammar: all | primes | ap:a,q |
/// list:1,2,3 | file:PATH (one integer per line).
struct XSetSpec {
    enum class Kind { all, primes, progression, list, file };
    Kind kind = Kind::all;
    std::uint64_t ap_start = 0, ap_step = 1;
    std::vector<std::uint64_t> values; // list and file, sorted and unique
    std::string path;

    static XSetSpec parse(const std::string& s)
    {
        XSetSpec x;
        auto parse_u64_list = [&](const std::string& body, const std::string& token) {
            std::vector<std::uint64_t> out;
            std::size_t start = 0;
            while (start <= body.size()) {
                auto comma = body.find(',', start);
                if (comma == std::string::npos) comma = body.size();
                const std::string item = body.substr(start, comma - start);
                std::size_t pos = 0;
                unsigned long long v = 0;
                try {
                    if (item.empty() || item[0] == '-') throw std::invalid_argument(item);
                    v = std::stoull(item, &pos);
                } catch (const std::exception&) {
                    throw Error(ErrorKind::parse, "bad integer '" + item + "' in X-set '" + token + "'");
                }
                if (pos != item.size() || v == 0)
                    throw Error(ErrorKind::parse, "bad integer '" + item + "' in X-set '" + token + "'");
                out.push_back(v);
                start = comma + 1;
            }
            return out;
        };
        if (s == "all") {
            x.kind = Kind::all;
        } else if (s == "primes") {
            x.kind = Kind::primes;
        } else if (s.rfind("ap:", 0) == 0) {
            const auto v = parse_u64_list(s.substr(3), s);
            if (v.size() != 2) throw Error(ErrorKind::parse, "ap needs exactly a,q: '" + s + "'");
            x.kind = Kind::progression;
            x.ap_start = v[0];
            x.ap_step = v[1];
        } else if (s.rfind("list:", 0) == 0) {
            x.kind = Kind::list;
            x.values = parse_u64_list(s.substr(5), s);
        } else if (s.rfind("file:", 0) == 0) {
            x.kind = Kind::file;
            x.path = s.substr(5);
            std::ifstream in(x.path);
            if (!in) throw Error(ErrorKind::parse, "cannot read X-set file '" + x.path + "'");
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                auto v = parse_u64_list(line, s);
                x.values.insert(x.values.end(), v.begin(), v.end());
            }
        } else {
            throw Error(ErrorKind::parse, "unknown X-set '" + s + "'");
        }
        std::sort(x.values.begin(), x.values.end());
        x.values.erase(std::unique(x.values.begin(), x.values.end()), x.values.end());
        return x;
    }

    std::string canonical() const
    {
        switch (kind) {
        case Kind::all: return "all";
        case Kind::primes: return "primes";
        case Kind::progression: return "ap:" + std::to_string(ap_start) + "," + std::to_string(ap_step);
        case Kind::list:
        case Kind::file: {
            std::string s = kind == Kind::list ? "list:" : "file:" + path;
            if (kind == Kind::list) {
                for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + std::to_string(values[i]);
            }
            return s;
        }
        }
        return "?";
    }

    /// Members of X in [lo, hi], increasing.
    std::vector<std::uint64_t> members(std::uint64_t lo, std::uint64_t hi) const
    {
        std::vector<std::uint64_t> out;
        if (hi < lo) return out;
        switch (kind) {
        case Kind::all:
            for (std::uint64_t m = lo; m <= hi; ++m) out.push_back(m);
            break;
        case Kind::primes:
            for (auto p : primes_up_to(hi))
                if (p >= lo) out.push_back(p);
            break;
        case Kind::progression:
            for (std::uint64_t m = ap_start; m <= hi; m += ap_step) {
                if (m >= lo && m > 0) out.push_back(m);
                if (ap_step == 0) break;
            }
            break;
        case Kind::list:
        case Kind::file:
            for (auto v : values)
                if (v >= lo && v <= hi) out.push_back(v);
            break;
        }
        return out;
    }
};

/// Which ideal set J the series runs over.
struct ASetSpec {
    enum class Kind { atoms_dividing, all_atoms, prime_ideals };
    Kind kind = Kind::all_atoms;
    XSetSpec x; // atoms_dividing only

    /// atoms-dividing:XSPEC | atoms-dividing-primes | all-atoms | prime-ideals
    static ASetSpec parse(const std::string& s)
    {
        ASetSpec a;
        if (s == "all-atoms") {
            a.kind = Kind::all_atoms;
        } else if (s == "prime-ideals") {
            a.kind = Kind::prime_ideals;
        } else if (s == "atoms-dividing-primes") {
            a.kind = Kind::atoms_dividing;
            a.x = XSetSpec::parse("primes");
        } else if (s.rfind("atoms-dividing:", 0) == 0) {
            a.kind = Kind::atoms_dividing;
            a.x = XSetSpec::parse(s.substr(15));
        } else {
            throw Error(ErrorKind::parse, "unknown ideal set '" + s + "'");
        }
        return a;
    }

    std::string canonical() const
    {
        switch (kind) {
        case Kind::all_atoms: return "all-atoms";
        case Kind::prime_ideals: return "prime-ideals";
        case Kind::atoms_dividing: return "atoms-dividing:" + x.canonical();
        }
        return "?";
    }
};

/// Member of a built ideal set.  `source` is the least m in X producing
/// the ideal (atoms-dividing sets), else 0.
struct IdealEntry {
    Ideal ideal;
    std::uint64_t norm = 0;
    std::uint64_t source = 0;
};

namespace detail {

template <typename Work>
void run_sharded(std::size_t count, unsigned threads, Work&& work)
{
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        work(0, 0, count);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned t = 0; t < threads; ++t) {
        const std::size_t lo = count * t / threads, hi = count * (t + 1) / threads;
        pool.emplace_back([&, t, lo, hi] {
            try {
                work(t, lo, hi);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

inline void sort_entries(std::vector<IdealEntry>& v)
{
    std::sort(v.begin(), v.end(), [](const IdealEntry& l, const IdealEntry& r) {
        if (l.ideal == r.ideal) return l.source < r.source;
        return l.ideal < r.ideal;
    });
    v.erase(std::unique(v.begin(), v.end(), [](const IdealEntry& l, const IdealEntry& r) { return l.ideal == r.ideal; }),
            v.end());
}

} // namespace detail

/// Members of the ideal set with norm <= kappa, sorted by (norm, a, b).
/// For atoms-dividing sets X is truncated to 2 <= m <= kappa, so the result
/// may miss atoms of small norm that only divide larger members of X.
inline std::vector<IdealEntry> build_ideal_set(const QuadraticField& f, const ASetSpec& spec, std::uint64_t kappa,
                                               unsigned threads = 1)
{
    std::vector<IdealEntry> out;
    if (kappa < 1) throw Error(ErrorKind::out_of_range, "kappa must be >= 1");
    const Int bound = from_u64(kappa);
    switch (spec.kind) {
    case ASetSpec::Kind::prime_ideals:
        for (auto& P : prime_ideals_up_to(f, kappa)) {
            const std::uint64_t n = to_u64(P.ideal.norm());
            out.push_back(IdealEntry{std::move(P.ideal), n, 0});
        }
        break;
    case ASetSpec::Kind::atoms_dividing: {
        const auto ms = spec.x.members(2, kappa);
        std::vector<std::vector<IdealEntry>> parts(std::max(1u, threads));
        detail::run_sharded(ms.size(), threads, [&](unsigned t, std::size_t lo, std::size_t hi) {
            for (std::size_t i = lo; i < hi; ++i)
                for (auto& I : atom_ideals_dividing(ms[i], f, bound)) {
                    const std::uint64_t n = to_u64(I.norm());
                    parts[t].push_back(IdealEntry{std::move(I), n, ms[i]});
                }
        });
        for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
        break;
    }
    case ASetSpec::Kind::all_atoms: {
        std::vector<std::pair<Ideal, FactoredIdeal>> all;
        for_each_ideal(f, kappa, [&](const Ideal& I, const FactoredIdeal& F) {
            if (!F.empty()) all.emplace_back(I, F);
        });
        std::vector<std::vector<IdealEntry>> parts(std::max(1u, threads));
        detail::run_sharded(all.size(), threads, [&](unsigned t, std::size_t lo, std::size_t hi) {
            for (std::size_t i = lo; i < hi; ++i) {
                detail::DivisorLattice lattice(f, all[i].second);
                if (lattice.atomic(lattice.top()))
                    parts[t].push_back(IdealEntry{all[i].first, to_u64(all[i].first.norm()), 0});
            }
        });
        for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
        break;
    }
    }
    detail::sort_entries(out);
    return out;
}

struct SeriesRow {
    std::uint64_t kappa = 0;
    std::uint64_t count = 0;
    BigFloat sum;
};

/// sum of N^{-s} over members with N <= kappa (and source <= kappa),
/// accumulated by increasing norm, one count * term step per distinct norm.
inline SeriesRow zeta_partial(const std::vector<IdealEntry>& set, const Rational& s, std::uint64_t kappa,
                              mpfr_prec_t prec = default_precision_bits)
{
    SeriesRow row{kappa, 0, BigFloat(prec)};
    std::size_t i = 0;
    while (i < set.size()) {
        const std::uint64_t n = set[i].norm;
        if (n > kappa) break;
        std::uint64_t k = 0;
        for (; i < set.size() && set[i].norm == n; ++i)
            if (set[i].source <= kappa) ++k;
        if (k == 0) continue;
        accumulate(row.sum, k, norm_power(n, s, prec));
        row.count += k;
    }
    return row;
}

/// Heuristic labels; a finite computation cannot show divergence.
inline constexpr const char* label_divergent = "consistent with divergence";
inline constexpr const char* label_no_signal = "no divergence signal";

struct SeriesTable {
    std::string field;
    std::string aset;
    Rational s;
    std::vector<SeriesRow> rows;
    std::vector<double> increments;    // row i minus row i-1
    bool increments_bounded_below = false;
    double increment_threshold = 0.1;

    const char* label() const { return increments_bounded_below ? label_divergent : label_no_signal; }
};

/// One partial-sum row per grid point; increments between consecutive rows
/// must all reach `threshold` for the divergence label.
inline SeriesTable divergence_table(const QuadraticField& f, const ASetSpec& spec, const Rational& s,
                                    std::vector<std::uint64_t> grid, unsigned threads = 1,
                                    mpfr_prec_t prec = default_precision_bits, double threshold = 0.1)
{
    if (grid.empty()) throw Error(ErrorKind::out_of_range, "empty kappa grid");
    if (!std::is_sorted(grid.begin(), grid.end()) || std::adjacent_find(grid.begin(), grid.end()) != grid.end())
        throw Error(ErrorKind::out_of_range, "kappa grid must be strictly increasing");
    const auto set = build_ideal_set(f, spec, grid.back(), threads);
    SeriesTable t{f.name(), spec.canonical(), s, {}, {}, false, threshold};
    for (auto k : grid) t.rows.push_back(zeta_partial(set, s, k, prec));
    t.increments_bounded_below = t.rows.size() > 1;
    for (std::size_t i = 1; i < t.rows.size(); ++i) {
        const double inc = (t.rows[i].sum - t.rows[i - 1].sum).to_double();
        t.increments.push_back(inc);
        if (!(inc >= threshold)) t.increments_bounded_below = false;
    }
    return t;
}

/// sum_{p <= x} 1/p with the same term and accumulation kernel as
/// zeta_partial over the prime ideals of Q.
inline BigFloat euler_primes_sum(std::uint64_t x, mpfr_prec_t prec = default_precision_bits)
{
    if (x < 2) throw Error(ErrorKind::out_of_range, "x must be >= 2");
    BigFloat sum(prec);
    const Rational one{1, 1};
    for (auto p : primes_up_to(x)) accumulate(sum, 1, norm_power(p, one, prec));
    return sum;
}

struct CensusTable {
    std::string field;
    std::uint64_t kappa = 0;
    std::vector<std::uint64_t> a;          // a[n] for 0 <= n <= kappa (a[0] unused)
    std::vector<std::uint64_t> cumulative; // A(x) = sum_{n <= x} a_n
    std::uint64_t davenport = 1;
    std::string class_group;

    /// A(x) log x / (x (log log x)^{D-1}); empty when log log x <= 0.
    std::optional<double> ratio(std::uint64_t x) const
    {
        const double lx = std::log(static_cast<double>(x));
        if (x < 3 || std::log(lx) <= 0) return std::nullopt;
        const double llx = std::log(lx);
        return static_cast<double>(cumulative[x]) * lx / (static_cast<double>(x) * std::pow(llx, static_cast<double>(davenport) - 1.0));
    }
};

/// Davenport constant of the class group: exhaustive search up to the cap,
/// the rank <= 2 closed form beyond it.
inline std::uint64_t class_group_davenport(const AbelianGroupSpec& g)
{
    if (g.order() <= davenport_default_cap) return davenport_constant(g);
    return davenport_rank2_formula(g);
}

inline CensusTable census_from_set(const QuadraticField& f, const std::vector<IdealEntry>& set, std::uint64_t kappa,
                                   std::uint64_t davenport, std::string group)
{
    CensusTable c{f.name(), kappa, std::vector<std::uint64_t>(kappa + 1, 0), std::vector<std::uint64_t>(kappa + 1, 0),
                  davenport, std::move(group)};
    for (const auto& e : set)
        if (e.norm <= kappa) ++c.a[e.norm];
    for (std::uint64_t n = 1; n <= kappa; ++n) c.cumulative[n] = c.cumulative[n - 1] + c.a[n];
    return c;
}

/// a_n for n <= kappa over all atom ideals.  Imaginary fields and Q only,
/// since the Davenport constant needs the class group structure.
inline CensusTable atom_census(const QuadraticField& f, std::uint64_t kappa, unsigned threads = 1)
{
    if (f.is_real())
        throw Error(ErrorKind::unsupported, "the atom census is restricted to imaginary quadratic fields and Q");
    const auto group = class_group_structure(f);
    const auto set = build_ideal_set(f, ASetSpec{ASetSpec::Kind::all_atoms, {}}, kappa, threads);
    return census_from_set(f, set, kappa, class_group_davenport(group), group.describe());
}

/// sum_{n <= kappa} a_n n^{-s}, same kernel and order as zeta_partial.
inline BigFloat dirichlet_sum(const CensusTable& c, const Rational& s, std::uint64_t kappa,
                              mpfr_prec_t prec = default_precision_bits)
{
    BigFloat sum(prec);
    for (std::uint64_t n = 1; n <= std::min(kappa, c.kappa); ++n)
        if (c.a[n]) accumulate(sum, c.a[n], norm_power(n, s, prec));
    return sum;
}

struct AsymptoticRow {
    std::uint64_t x = 0;
    std::uint64_t A = 0;
    std::optional<double> ratio;
    std::string note;
};

/// Ratio A(x) log x / (x (log log x)^{D-1}) at each decade x <= kappa and at
/// kappa itself.  Trend only; the limiting constant is not estimated.
inline std::vector<AsymptoticRow> asymptotic_report(const CensusTable& c)
{
    std::vector<std::uint64_t> xs;
    for (std::uint64_t x = 10; x <= c.kappa; x *= 10) xs.push_back(x);
    if (xs.empty() || xs.back() != c.kappa) xs.push_back(c.kappa);
    std::vector<AsymptoticRow> out;
    for (auto x : xs) {
        if (x < 1) continue;
        AsymptoticRow r{x, c.cumulative[x], c.ratio(x), ""};
        if (!r.ratio) r.note = "skipped: log log x <= 0";
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace atomzeta
