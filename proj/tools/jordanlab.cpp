#include "jordanlab/char_solver.hpp"
#include "jordanlab/dim_solver.hpp"
#include "jordanlab/report.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace jordanlab;

namespace {

constexpr int kEnvelopeD = 6;
constexpr int kEnvelopeN = 12;

const std::map<std::string, Format> kFormats{{"json", Format::json}, {"csv", Format::csv}, {"md", Format::md}};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Dimension and character tables for free Jordan algebras, with brute-force cross-checks"};
    app.require_subcommand(1);

    int d = 0;
    int n = 0;
    std::string form = "weak";
    std::string basis = "schur";
    Format format = Format::md;
    std::string suite = "all";
    std::string cache_dir;
    unsigned threads = 1;
    bool force = false;
    bool multilinear_only = false;
    int d_max = 4;
    int n_max = 0;

    auto add_dn = [&](CLI::App* cmd) {
        cmd->add_option("--D", d, "number of generators")->required()->check(CLI::Range(1, 16));
        cmd->add_option("--N", n, "highest degree")->check(CLI::Range(1, 1000));
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "json, csv or md")->transform(CLI::CheckedTransformer(kFormats));
    };
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--cache-dir", cache_dir, "result cache (default $JORDANLAB_CACHE_DIR)");
        cmd->add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 256u));
    };

    auto* dims = app.add_subcommand("dims", "predicted a_n(D), b_n(D)");
    add_dn(dims);
    dims->get_option("--N")->required();
    dims->add_option("--form", form, "weak or weakest")->check(CLI::IsMember({"weak", "weakest"}));
    add_format(dims);
    add_common(dims);

    auto* chars = app.add_subcommand("chars", "predicted classes A(D), B(D) by degree");
    add_dn(chars);
    chars->get_option("--N")->required();
    chars->add_option("--basis", basis, "schur or monomial")->check(CLI::IsMember({"schur", "monomial"}));
    chars->add_flag("--force-envelope", force, "allow D > 6 or N > 12");
    add_format(chars);
    add_common(chars);

    auto* closed = app.add_subcommand("closed", "closed formulas s_n, r_n, c_n, dim M_n, dim MD_n");
    add_dn(closed);
    closed->get_option("--N")->required();
    add_format(closed);

    auto* oracle = app.add_subcommand("oracle", "brute-force dimensions in the tensor algebra");
    add_dn(oracle);
    oracle->add_flag("--multilinear", multilinear_only, "only the multidegree (1,...,1) in D letters");
    add_format(oracle);
    add_common(oracle);

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", suite, "paper-tables, oracle-cross, branching, jacobi or all")
        ->check(CLI::IsMember(suite_names()));
    verify->add_option("--D-max", d_max, "largest D for table suites")->check(CLI::Range(1, 4));
    verify->add_option("--n-max", n_max, "cap on table degrees (0 = full published ranges)")->check(CLI::Range(0, 30));
    add_format(verify);
    add_common(verify);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*dims) {
            DimCache cache(cache_dir);
            std::cout << format_dims(form, cache.solve(form, d, n), format);
        } else if (*chars) {
            if (!force && (d > kEnvelopeD || n > kEnvelopeN)) {
                std::cerr << "chars: D <= " << kEnvelopeD << " and N <= " << kEnvelopeN
                          << " unless --force-envelope is given\n";
                return 2;
            }
            std::cout << format_chars(solve_characters(d, n), basis == "schur" ? CharBasis::schur : CharBasis::monomial,
                                      format);
        } else if (*closed) {
            std::cout << format_closed(d, n, format);
        } else if (*oracle) {
            if (multilinear_only)
                std::cout << format_oracle({oracle_multilinear(d)}, format);
            else if (n < 1)
                throw CLI::RequiredError("--N");
            else
                std::cout << format_oracle(oracle_table(d, n), format);
        } else if (*verify) {
            VerifyOptions opts{d_max, n_max, threads, DimCache(cache_dir)};
            const auto results = run_suite(suite, opts);
            std::cout << format_report(results, format);
            return count_failures(results) == 0 ? 0 : 1;
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
