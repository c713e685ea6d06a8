// atomzeta: atoms, ideal norms and restricted zeta partial sums in
// quadratic rings of integers.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <atomzeta/cli.hpp>

namespace {

using atomzeta::Error;
using atomzeta::ErrorKind;

int exit_code(const Error& e) { return e.kind() == ErrorKind::internal ? 3 : 2; }

} // namespace

int main(int argc, char** argv)
{
    using namespace atomzeta;
    CLI::App app{"atomzeta: atoms and restricted zeta partial sums in quadratic rings of integers"};
    app.set_version_flag("--version", std::string(version));
    app.require_subcommand(1);

    std::string field = "-1";
    std::string kappa = "1000";
    std::string s = "1/2";
    std::string aset = "atoms-dividing:primes";
    std::string format = "csv";
    std::string output;
    long precision = default_precision_bits;
    unsigned threads = default_threads();
    std::string element;

    auto* ring = app.add_subcommand("ring", "describe Z_K: discriminant, units, class group, Davenport constant");
    ring->add_option("-d,--field", field, "squarefree d, or Q")->required()->allow_extra_args(false);

    auto* factor = app.add_subcommand("factor", "factor an element into atoms");
    factor->add_option("-d,--field", field, "squarefree d, or Q")->required();
    factor->add_option("element", element, "rational integer m, or x,y for x + y*w")->required();

    auto* zeta = app.add_subcommand("zeta", "partial sums of N(I)^-s over an ideal set, one row per kappa");
    zeta->add_option("-d,--field", field, "squarefree d, or Q")->required();
    zeta->add_option("--aset", aset, "atoms-dividing:XSET | atoms-dividing-primes | all-atoms | prime-ideals")
        ->capture_default_str();
    zeta->add_option("--s", s, "exponent p/q")->capture_default_str();
    zeta->add_option("--kappa", kappa, "comma-separated norm cutoffs, e.g. 1e2,1e3")->capture_default_str();

    auto* census = app.add_subcommand("census", "atom counts a_n by norm and the asymptotic ratio report");
    census->add_option("-d,--field", field, "squarefree d < 0, or Q")->required();
    census->add_option("--kappa", kappa, "norm cutoff")->capture_default_str();

    for (auto* sub : {zeta, census}) {
        sub->add_option("--format", format, "csv or json")->capture_default_str();
        sub->add_option("-o,--output", output, "output file (default stdout)");
        sub->add_option("--precision", precision, "MPFR precision in bits (>= 80)")->capture_default_str();
        sub->add_option("--threads", threads, "worker threads (env ATOMZETA_THREADS)");
    }
    // negative numbers such as -d -5 are values, not flags
    app.allow_extras(false);
    for (auto* sub : {ring, factor, zeta, census}) sub->positionals_at_end(false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (ring->parsed()) {
            cli::write_ring(field, std::cout);
            return 0;
        }
        if (factor->parsed()) {
            cli::write_factor(field, element, std::cout);
            return 0;
        }
        cli::RunConfig cfg;
        cfg.command = zeta->parsed() ? "zeta" : "census";
        cfg.field = field;
        cfg.kappa = cli::parse_kappa_grid(kappa);
        cfg.s = Rational::parse(s);
        cfg.aset = aset;
        cfg.format = cli::parse_format(format);
        cfg.output = output;
        if (precision < 80) throw Error(ErrorKind::parse, "precision must be at least 80 bits");
        cfg.precision = precision;
        cfg.threads = threads == 0 ? 1 : threads;

        std::ofstream file;
        std::ostream* out = &std::cout;
        if (!output.empty()) {
            file.open(output, std::ios::binary);
            if (!file) throw Error(ErrorKind::parse, "cannot open output file '" + output + "'");
            out = &file;
        }
        if (cfg.command == "zeta")
            cli::write_zeta(cfg, *out);
        else
            cli::write_census(cfg, *out);
        return 0;
    } catch (const Error& e) {
        std::cerr << "atomzeta: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return exit_code(e);
    } catch (const std::exception& e) {
        std::cerr << "atomzeta: internal error: " << e.what() << "\n";
        return 3;
    }
}
