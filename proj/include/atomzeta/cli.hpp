#pragma once

// Report writers behind the atomzeta command line tool.  Output depends
// only on the canonical configuration, never on the thread count.

#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "atomzeta.hpp"

namespace atomzeta::cli {

enum class Format { csv, json };

inline Format parse_format(const std::string& s)
{
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    throw Error(ErrorKind::parse, "unknown output format '" + s + "'");
}

inline const char* to_string(Format f) { return f == Format::csv ? "csv" : "json"; }

/// "100", "1e6" or "2.5e3"-free integer forms; exact.
inline std::uint64_t parse_count(const std::string& s)
{
    const auto e = s.find_first_of("eE");
    try {
        std::size_t pos = 0;
        const std::string mant = s.substr(0, e);
        if (mant.empty() || mant[0] == '-') throw std::invalid_argument(s);
        std::uint64_t v = std::stoull(mant, &pos);
        if (pos != mant.size()) throw std::invalid_argument(s);
        if (e != std::string::npos) {
            const std::string ex = s.substr(e + 1);
            const unsigned long k = std::stoul(ex, &pos);
            if (pos != ex.size() || k > 19) throw std::invalid_argument(s);
            for (unsigned long i = 0; i < k; ++i) {
                if (v > UINT64_MAX / 10) throw std::invalid_argument(s);
                v *= 10;
            }
        }
        if (v == 0) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorKind::parse, "bad kappa value '" + s + "'");
    }
}

inline std::vector<std::uint64_t> parse_kappa_grid(const std::string& s)
{
    std::vector<std::uint64_t> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto comma = s.find(',', start);
        if (comma == std::string::npos) comma = s.size();
        out.push_back(parse_count(s.substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

struct RunConfig {
    std::string command;
    std::string field = "-1";
    std::vector<std::uint64_t> kappa;
    Rational s{1, 1};
    std::string aset = "all-atoms";
    Format format = Format::csv;
    std::string output; // empty: stdout
    mpfr_prec_t precision = default_precision_bits;
    unsigned threads = 1;

    /// Stable description embedded in every output.  Thread count and
    /// output path are deliberately absent so reruns compare byte for byte.
    std::string canonical() const
    {
        std::ostringstream os;
        os << "command=" << command << ";field=" << parse_field(field).name();
        if (command == "zeta") os << ";aset=" << ASetSpec::parse(aset).canonical() << ";s=" << s.str();
        os << ";kappa=";
        for (std::size_t i = 0; i < kappa.size(); ++i) os << (i ? "," : "") << kappa[i];
        os << ";precision=" << precision << ";format=" << to_string(format);
        return os.str();
    }
};

inline constexpr int sum_digits = 25;

inline void write_zeta(const RunConfig& cfg, std::ostream& out)
{
    const auto field = parse_field(cfg.field);
    const auto spec = ASetSpec::parse(cfg.aset);
    const auto table = divergence_table(field, spec, cfg.s, cfg.kappa, cfg.threads, cfg.precision);
    const std::string truncation = spec.kind == ASetSpec::Kind::atoms_dividing
                                       ? "X truncated to 2 <= m <= kappa; sums are lower bounds"
                                       : "none";
    std::vector<std::string> incs;
    for (std::size_t i = 1; i < table.rows.size(); ++i)
        incs.push_back((table.rows[i].sum - table.rows[i - 1].sum).to_decimal(sum_digits));

    if (cfg.format == Format::csv) {
        out << "# atomzeta " << version << "\n";
        out << "# config: " << cfg.canonical() << "\n";
        out << "# truncation: " << truncation << "\n";
        out << "# heuristic: " << table.label() << " (threshold: every increment >= " << table.increment_threshold << ")\n";
        out << "kappa,count,partial_sum\n";
        for (const auto& r : table.rows) out << r.kappa << "," << r.count << "," << r.sum.to_decimal(sum_digits) << "\n";
        return;
    }
    nlohmann::ordered_json j;
    j["config"] = {{"canonical", cfg.canonical()},
                   {"command", cfg.command},
                   {"field", field.name()},
                   {"aset", spec.canonical()},
                   {"s", cfg.s.str()},
                   {"kappa", cfg.kappa},
                   {"precision_bits", cfg.precision}};
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : table.rows)
        j["rows"].push_back({{"kappa", r.kappa}, {"count", r.count}, {"partial_sum", r.sum.to_decimal(sum_digits)}});
    j["meta"] = {{"version", version},
                 {"degree", field.degree()},
                 {"truncation", truncation},
                 {"increments", incs},
                 {"increment_threshold", table.increment_threshold},
                 {"heuristic", table.label()}};
    out << j.dump(2) << "\n";
}

inline void write_census(const RunConfig& cfg, std::ostream& out)
{
    const auto field = parse_field(cfg.field);
    if (cfg.kappa.size() != 1) throw Error(ErrorKind::parse, "census takes a single kappa");
    const auto census = atom_census(field, cfg.kappa.front(), cfg.threads);
    const auto report = asymptotic_report(census);
    auto ratio_str = [](const std::optional<double>& r) {
        if (!r) return std::string();
        std::ostringstream os;
        os.precision(10);
        os << *r;
        return os.str();
    };
    if (cfg.format == Format::csv) {
        out << "# atomzeta " << version << "\n";
        out << "# config: " << cfg.canonical() << "\n";
        out << "# class group: " << census.class_group << "; davenport constant D = " << census.davenport << "\n";
        out << "# ratio = A(x) log x / (x (log log x)^(D-1)); trend only, no limit is estimated\n";
        out << "n,a_n,A,ratio\n";
        for (std::uint64_t n = 1; n <= census.kappa; ++n)
            out << n << "," << census.a[n] << "," << census.cumulative[n] << "," << ratio_str(census.ratio(n)) << "\n";
        return;
    }
    nlohmann::ordered_json j;
    j["config"] = {{"canonical", cfg.canonical()},
                   {"command", cfg.command},
                   {"field", field.name()},
                   {"kappa", cfg.kappa}};
    j["rows"] = nlohmann::ordered_json::array();
    for (std::uint64_t n = 1; n <= census.kappa; ++n) {
        nlohmann::ordered_json row = {{"n", n}, {"a_n", census.a[n]}, {"A", census.cumulative[n]}};
        if (auto r = census.ratio(n)) row["ratio"] = ratio_str(r);
        j["rows"].push_back(std::move(row));
    }
    nlohmann::ordered_json asym = nlohmann::ordered_json::array();
    for (const auto& r : report) {
        nlohmann::ordered_json row = {{"x", r.x}, {"A", r.A}};
        if (r.ratio) row["ratio"] = ratio_str(r.ratio);
        if (!r.note.empty()) row["note"] = r.note;
        asym.push_back(std::move(row));
    }
    j["meta"] = {{"version", version},
                 {"class_group", census.class_group},
                 {"davenport", census.davenport},
                 {"asymptotic", asym},
                 {"note", "ratio trend only; the limiting constant is not estimated"}};
    out << j.dump(2) << "\n";
}

inline void write_ring(const std::string& d, std::ostream& out)
{
    const auto f = parse_field(d);
    out << "field: " << (f.is_rational() ? "Q" : "Q(sqrt(" + std::to_string(f.d()) + "))") << "\n";
    out << "degree: " << f.degree() << "\n";
    out << "discriminant: " << f.discriminant() << "\n";
    switch (f.basis()) {
    case BasisKind::rational: out << "integral basis: 1\n"; break;
    case BasisKind::sqrt_d: out << "integral basis: 1, w = sqrt(" << f.d() << ")\n"; break;
    case BasisKind::half_sqrt: out << "integral basis: 1, w = (1+sqrt(" << f.d() << "))/2\n"; break;
    }
    const auto units = unit_group(f);
    out << "roots of unity: " << units.roots_of_unity.size() << "\n";
    if (units.fundamental_unit) {
        out << "fundamental unit: " << to_string(*units.fundamental_unit) << " (norm " << norm(*units.fundamental_unit).get_str()
            << ")\n";
    }
    if (f.is_real()) {
        out << "class group: not computed for real quadratic fields\n";
        return;
    }
    const auto g = class_group_structure(f);
    out << "class number: h = " << g.order() << "\n";
    out << "class group: " << g.describe() << "\n";
    if (g.order() <= davenport_default_cap)
        out << "davenport constant: D = " << davenport_constant(g) << "\n";
    else if (g.rank() <= 2)
        out << "davenport constant: D = " << davenport_rank2_formula(g) << " (rank <= 2 closed form)\n";
    else
        out << "davenport constant: unavailable (group beyond the exhaustive cap and rank > 2)\n";
}

/// Element from "m" or "x,y" (coordinates in the integral basis).
inline Element parse_element(const QuadraticField& f, const std::string& s)
{
    auto parse_int = [&](const std::string& t) {
        Int v;
        if (t.empty() || v.set_str(t, 10) != 0) throw Error(ErrorKind::parse, "bad element '" + s + "'");
        return v;
    };
    const auto comma = s.find(',');
    if (comma == std::string::npos) return Element(f, parse_int(s));
    return Element(f, parse_int(s.substr(0, comma)), parse_int(s.substr(comma + 1)));
}

inline void write_factor(const std::string& d, const std::string& input, std::ostream& out)
{
    const auto f = parse_field(d);
    const Element e = parse_element(f, input);
    if (e.is_zero()) throw Error(ErrorKind::zero_element, "zero has no atom factorization");
    if (is_unit(e)) throw Error(ErrorKind::unit_element, "unit has no atom factorization");
    const auto F = factor_into_atoms(e);
    out << "element: " << to_string(e) << " (norm " << norm(e).get_str() << ")\n";
    out << "unit: " << to_string(F.unit) << "\n";
    for (const auto& [a, k] : F.factors)
        out << "atom: " << to_string(a) << " exponent " << k << " ideal norm " << abs_norm(a).get_str() << "\n";
    out << "factorization: " << to_string(F.unit);
    for (const auto& [a, k] : F.factors) out << " * (" << to_string(a) << ")" << (k > 1 ? "^" + std::to_string(k) : "");
    out << "\n";
    if (e.is_rational_integer() && sgn(e.x()) > 0) {
        const std::uint64_t m = to_u64(e.x());
        out << "norm identity: " << m << "^" << f.degree() << " = " << ipow(e.x(), static_cast<unsigned long>(f.degree())).get_str()
            << " =";
        bool first = true;
        for (const auto& [a, k] : F.factors) {
            out << (first ? " " : " * ") << abs_norm(a).get_str() << (k > 1 ? "^" + std::to_string(k) : "");
            first = false;
        }
        const bool ok = verify_norm_identity(m, F);
        out << (ok ? " OK" : " MISMATCH") << "\n";
        if (!ok) throw Error(ErrorKind::internal, "norm identity failed for " + std::to_string(m));
    }
}

} // namespace atomzeta::cli
