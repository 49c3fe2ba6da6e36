#include "qfano/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qfano/bounds.hpp"
#include "qfano/channel_spec.hpp"
#include "qfano/errors.hpp"
#include "qfano/optimize.hpp"
#include "qfano/sweep.hpp"
#include "qfano/verify.hpp"

namespace qfano {

namespace {

std::string g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string join_g17(const ProbabilityVector& p) {
    std::string out;
    for (int k = 0; k < p.size(); ++k) {
        if (k) out += ",";
        out += g17(p[k]);
    }
    return out;
}

std::vector<double> parse_double_list(const std::string& s, const char* flag) {
    std::vector<double> out;
    std::istringstream in(s);
    std::string cell;
    while (std::getline(in, cell, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stod(cell, &used));
            if (used != cell.size()) throw std::invalid_argument(cell);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(flag) + ": \"" + cell + "\" is not a number");
        }
    }
    if (out.empty()) throw std::invalid_argument(std::string(flag) + ": empty list");
    return out;
}

std::vector<int> parse_int_list(const std::string& s, const char* flag) {
    std::vector<int> out;
    std::istringstream in(s);
    std::string cell;
    while (std::getline(in, cell, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoi(cell, &used));
            if (used != cell.size()) throw std::invalid_argument(cell);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(flag) + ": \"" + cell + "\" is not an integer");
        }
    }
    if (out.empty()) throw std::invalid_argument(std::string(flag) + ": empty list");
    return out;
}

ProbabilityVector vector_or_uniform(const std::string& csv, int d, const char* flag) {
    if (csv.empty()) return ProbabilityVector::uniform(d);
    const std::vector<double> v = parse_double_list(csv, flag);
    if (static_cast<int>(v.size()) != d) {
        throw std::invalid_argument(std::string(flag) + ": expected " + std::to_string(d) +
                                    " entries, got " + std::to_string(v.size()));
    }
    return ProbabilityVector(v);
}

void print_row(std::ostream& out, const char* label, const std::string& value) {
    out << std::left << std::setw(18) << label << value << "\n";
}

struct BoundsOptions {
    std::string spec_path;
    std::string lambda_csv;
    std::string gamma_csv;
    std::string xi_csv;
    std::string out_path;
    bool optimize = false;
};

int cmd_bounds(const BoundsOptions& opt, std::ostream& out) {
    const KrausChannel ch = to_channel(load_channel_spec(opt.spec_path));
    const int d = ch.dim();
    const std::vector<double> lambda_raw = parse_double_list(opt.lambda_csv, "--lambda");
    if (static_cast<int>(lambda_raw.size()) != d) {
        throw std::invalid_argument("--lambda: expected " + std::to_string(d) +
                                    " entries for this channel, got " +
                                    std::to_string(lambda_raw.size()));
    }
    const ProbabilityVector lambda(lambda_raw);
    const ProbabilityVector xi = vector_or_uniform(opt.xi_csv, d, "--xi");
    const DensityMatrix rho_q2(ComplexMatrix::diagonal(xi.weights()));

    ProbabilityVector gamma = vector_or_uniform(opt.gamma_csv, d, "--gamma");
    bool optimized = false;
    if (opt.optimize) {
        const PureState psi = purify(lambda);
        const double f = entanglement_fidelity(psi, extend_to_joint(ch, psi));
        gamma = optimize_gamma(lambda, f, d).gamma_star;
        optimized = true;
    }

    const BoundReport report = full_report(lambda, ch, gamma, xi, rho_q2);

    print_row(out, "d", std::to_string(d));
    print_row(out, "fidelity", g17(report.fidelity));
    print_row(out, "entropy_exchange", g17(report.entropy_exchange));
    print_row(out, "qfi", g17(report.qfi));
    print_row(out, "ineq1", g17(report.ineq1));
    print_row(out, "ineq2", g17(report.ineq2));
    print_row(out, "ineq3", g17(report.ineq3));
    print_row(out, "ineq4", g17(report.ineq4));
    print_row(out, "beta_max_bound", g17(report.beta_max_bound));
    print_row(out, "beta_min_bound", g17(report.beta_min_bound));
    print_row(out, "gamma", join_g17(report.parameters.gamma));
    print_row(out, "xi", join_g17(report.parameters.xi));
    print_row(out, "gamma_optimized", optimized ? "yes" : "no");

    if (!opt.out_path.empty()) {
        std::ofstream file(opt.out_path);
        if (!file) throw std::invalid_argument("--out: cannot write " + opt.out_path);
        file << "fidelity,entropy_exchange,qfi,ineq1,ineq2,ineq3,ineq4,beta_max_bound,"
                "beta_min_bound\n";
        file << g17(report.fidelity) << "," << g17(report.entropy_exchange) << ","
             << g17(report.qfi) << "," << g17(report.ineq1) << "," << g17(report.ineq2) << ","
             << g17(report.ineq3) << "," << g17(report.ineq4) << ","
             << g17(report.beta_max_bound) << "," << g17(report.beta_min_bound) << "\n";
    }
    return 0;
}

struct SweepOptions {
    double lambda = 0.1;
    int p_steps = 101;
    uint64_t seed = 42;
    std::string out_path;
};

int cmd_sweep(const SweepOptions& opt, std::ostream& out) {
    const std::vector<SweepRow> rows = run_sweep(opt.lambda, opt.p_steps, opt.seed);
    if (opt.out_path.empty()) {
        write_sweep_csv(rows, out);
    } else {
        std::ofstream file(opt.out_path);
        if (!file) throw std::invalid_argument("--out: cannot write " + opt.out_path);
        write_sweep_csv(rows, file);
    }
    return 0;
}

struct OptimizeOptions {
    std::string spec_path;
    std::string lambda_csv;
    double tol = 1e-10;
    bool joint = false;
};

int cmd_optimize(const OptimizeOptions& opt, std::ostream& out) {
    const KrausChannel ch = to_channel(load_channel_spec(opt.spec_path));
    const int d = ch.dim();
    const std::vector<double> lambda_raw = parse_double_list(opt.lambda_csv, "--lambda");
    if (static_cast<int>(lambda_raw.size()) != d) {
        throw std::invalid_argument("--lambda: expected " + std::to_string(d) +
                                    " entries for this channel, got " +
                                    std::to_string(lambda_raw.size()));
    }
    const ProbabilityVector lambda(lambda_raw);

    const PureState psi = purify(lambda);
    const DensityMatrix joint_state = extend_to_joint(ch, psi);
    const double f = entanglement_fidelity(psi, joint_state);
    const double s = entropy_exchange(joint_state);

    const OptimizationResult res = optimize_gamma(lambda, f, d, opt.tol);

    print_row(out, "d", std::to_string(d));
    print_row(out, "fidelity", g17(f));
    print_row(out, "entropy_exchange", g17(s));
    print_row(out, "qfi", g17(qfi_bound(f, d)));
    print_row(out, "ineq4_opt", g17(res.bound_star));
    print_row(out, "gamma_star", join_g17(res.gamma_star));
    print_row(out, "iterations", std::to_string(res.iterations));
    print_row(out, "converged", res.converged ? "yes" : "no");
    if (d == 2) {
        const OptimizationResult gold = golden_section_gamma1(lambda, f, opt.tol);
        print_row(out, "golden_gamma1", g17(gold.gamma_star[0]));
        print_row(out, "golden_bound", g17(gold.bound_star));
    }
    if (opt.joint) {
        const JointOptimizationResult jr = optimize_gamma_xi(lambda, f, opt.tol);
        print_row(out, "joint_bound", g17(jr.bound_star));
        print_row(out, "joint_gamma", join_g17(jr.gamma_star));
        print_row(out, "joint_xi", join_g17(jr.xi_star));
        print_row(out, "joint_rounds", std::to_string(jr.rounds));
        print_row(out, "joint_converged", jr.converged ? "yes" : "no");
    }
    return 0;
}

struct VerifyOptions {
    uint64_t seed = 42;
    int trials = 500;
    std::string dims_csv = "2,3";
};

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
    const std::vector<int> dims = parse_int_list(opt.dims_csv, "--dims");
    const std::vector<PropertyResult> results = run_verification(opt.seed, opt.trials, dims);

    int passed = 0;
    for (const PropertyResult& r : results) {
        out << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(32) << r.name
            << " trials=" << std::setw(4) << r.trials << " worst_slack=" << g17(r.worst_slack);
        if (!r.passed) out << " seed=" << r.worst_seed;
        out << "\n";
        if (r.passed) ++passed;
    }
    out << "verification: " << passed << "/" << results.size() << " properties passed\n";
    return passed == static_cast<int>(results.size()) ? 0 : 3;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Entropy-exchange bounds: quantum Fano inequality and its extensions"};
    app.require_subcommand(1);

    BoundsOptions bounds_opt;
    CLI::App* bounds = app.add_subcommand(
        "bounds", "Report fidelity, entropy exchange and every bound for a channel spec");
    bounds->add_option("--spec", bounds_opt.spec_path, "Channel spec JSON path")->required();
    bounds->add_option("--lambda", bounds_opt.lambda_csv,
                       "Input spectrum, comma-separated, length d")
        ->required();
    CLI::Option* gamma_flag =
        bounds->add_option("--gamma", bounds_opt.gamma_csv, "Bound weights (default uniform)");
    bounds->add_option("--xi", bounds_opt.xi_csv,
                       "Comparison-state spectrum (default uniform); also fixes rhoQ2 = diag(xi)");
    bounds->add_option("--out", bounds_opt.out_path, "Also write the report as CSV to this path");
    bounds->add_flag("--optimize", bounds_opt.optimize, "Optimize gamma before reporting")
        ->excludes(gamma_flag);

    SweepOptions sweep_opt;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "Depolarizing-channel sweep over p, written as CSV");
    sweep->add_option("--lambda", sweep_opt.lambda, "Spectrum weight of the first basis state")
        ->check(CLI::Range(0.0, 1.0));
    sweep->add_option("--p-steps", sweep_opt.p_steps, "Grid points over p in [0,1]")
        ->check(CLI::Range(2, 1000000));
    sweep->add_option("--seed", sweep_opt.seed, "Seed for the per-row random unitaries");
    sweep->add_option("--out", sweep_opt.out_path, "Output CSV path (default stdout)");

    OptimizeOptions optimize_opt;
    CLI::App* optimize = app.add_subcommand(
        "optimize", "Tightest extension bound over gamma for a channel spec");
    optimize->add_option("--spec", optimize_opt.spec_path, "Channel spec JSON path")->required();
    optimize->add_option("--lambda", optimize_opt.lambda_csv,
                         "Input spectrum, comma-separated, length d")
        ->required();
    optimize->add_option("--tol", optimize_opt.tol, "Optimizer convergence tolerance")
        ->check(CLI::PositiveNumber);
    optimize->add_flag("--joint", optimize_opt.joint,
                       "Also optimize (gamma, xi) jointly by coordinate descent");

    VerifyOptions verify_opt;
    CLI::App* verify = app.add_subcommand(
        "verify", "Randomized property suite across every module");
    verify->add_option("--seed", verify_opt.seed, "Base seed; per-trial sub-seeds split from it");
    verify->add_option("--trials", verify_opt.trials, "Trial cap per property")
        ->check(CLI::PositiveNumber);
    verify->add_option("--dims", verify_opt.dims_csv, "System dimensions, comma-separated");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 1;
    }

    try {
        if (bounds->parsed()) return cmd_bounds(bounds_opt, out);
        if (sweep->parsed()) return cmd_sweep(sweep_opt, out);
        if (optimize->parsed()) return cmd_optimize(optimize_opt, out);
        return cmd_verify(verify_opt, out);
    } catch (const consistency_error& e) {
        err << "consistency violation: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace qfano
