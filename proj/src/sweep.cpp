#include "qfano/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qfano/bounds.hpp"
#include "qfano/errors.hpp"
#include "qfano/optimize.hpp"
#include "qfano/quantum.hpp"
#include "qfano/rng.hpp"

namespace qfano {

namespace {

constexpr char kCsvHeader[] = "p,fidelity,entropy_exchange,qfi,ineq4_opt,gamma1_star";

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void append_g17(std::string& line, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    line += buf;
}

}  // namespace

double depol_fidelity_closed(double p, double lambda) {
    require(p >= 0.0 && p <= 1.0, "depol_fidelity_closed: p outside [0,1]");
    require(lambda >= 0.0 && lambda <= 1.0, "depol_fidelity_closed: lambda outside [0,1]");
    return 1.0 + p * (lambda * lambda - lambda - 0.5);
}

double depol_entropy_closed(double p, double lambda) {
    require(p >= 0.0 && p <= 1.0, "depol_entropy_closed: p outside [0,1]");
    require(lambda >= 0.0 && lambda <= 1.0, "depol_entropy_closed: lambda outside [0,1]");

    const double mix = lambda * (1.0 - lambda);
    double radicand = p * p + 12.0 * p * p * mix + 4.0 * (1.0 - p) - 16.0 * p * mix;
    if (radicand < 0.0) {
        if (radicand < -1e-12) {
            throw consistency_error("depol_entropy_closed: negative radicand, formula broken");
        }
        radicand = 0.0;
    }
    const double theta = std::sqrt(radicand);

    double spectrum[4] = {p * lambda / 2.0, (1.0 - lambda) * p / 2.0,
                          -p / 4.0 + 0.5 + theta / 4.0, -p / 4.0 + 0.5 - theta / 4.0};
    double sum = 0.0;
    for (double& s : spectrum) {
        if (s < -1e-9) {
            throw consistency_error("depol_entropy_closed: negative spectrum entry, formula broken");
        }
        if (s < 0.0) s = 0.0;
        sum += s;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw consistency_error("depol_entropy_closed: spectrum does not sum to 1, formula broken");
    }
    return shannon_entropy(ProbabilityVector({spectrum[0], spectrum[1], spectrum[2], spectrum[3]}));
}

std::vector<SweepRow> run_sweep(double lambda, int p_steps, uint64_t seed) {
    require(lambda >= 0.0 && lambda <= 1.0, "run_sweep: lambda outside [0,1]");
    require(p_steps >= 2, "run_sweep: pSteps must be >= 2");

    const ProbabilityVector weights({lambda, 1.0 - lambda});
    const PureState psi0 = purify(weights);
    const Rng base(seed);

    std::vector<SweepRow> rows;
    rows.reserve(static_cast<size_t>(p_steps));
    for (int i = 0; i < p_steps; ++i) {
        const double p = static_cast<double>(i) / (p_steps - 1);
        const ComplexMatrix u = random_unitary(base.stream(static_cast<uint64_t>(i)).seed(), 2);
        const PureState psi = rotate_system(psi0, u);
        const KrausChannel ch = depolarizing_channel(p);
        const DensityMatrix joint = extend_to_joint(ch, psi);

        const double f = entanglement_fidelity(psi, joint);
        const double s = entropy_exchange(joint);
        const double f_closed = depol_fidelity_closed(p, lambda);
        const double s_closed = depol_entropy_closed(p, lambda);
        if (std::abs(f - f_closed) > 1e-8 || std::abs(s - s_closed) > 1e-8) {
            std::ostringstream msg;
            msg << "run_sweep: closed form disagrees with simulation at p=" << p
                << " (fidelity diff " << std::abs(f - f_closed) << ", entropy diff "
                << std::abs(s - s_closed) << ")";
            throw consistency_error(msg.str());
        }

        const OptimizationResult opt = golden_section_gamma1(weights, f);
        const SweepRow row{p, f, s, qfi_bound(f, 2), opt.bound_star, opt.gamma_star[0]};
        if (row.entropy_exchange > row.ineq4_opt + 1e-9 || row.ineq4_opt > row.qfi + 1e-9) {
            std::ostringstream msg;
            msg << "run_sweep: bound ordering violated at p=" << p;
            throw consistency_error(msg.str());
        }
        rows.push_back(row);
    }
    return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
    out << kCsvHeader << "\n";
    for (const SweepRow& r : rows) {
        std::string line;
        append_g17(line, r.p);
        line += ',';
        append_g17(line, r.fidelity);
        line += ',';
        append_g17(line, r.entropy_exchange);
        line += ',';
        append_g17(line, r.qfi);
        line += ',';
        append_g17(line, r.ineq4_opt);
        line += ',';
        append_g17(line, r.gamma1_star);
        out << line << "\n";
    }
}

std::vector<SweepRow> read_sweep_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("sweep csv: empty input");
    if (line != kCsvHeader) throw std::invalid_argument("sweep csv: unexpected header: " + line);

    std::vector<SweepRow> rows;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream fields(line);
        double v[6];
        std::string cell;
        for (int k = 0; k < 6; ++k) {
            if (!std::getline(fields, cell, ',')) {
                throw std::invalid_argument("sweep csv: line " + std::to_string(line_no) +
                                            " has fewer than 6 fields");
            }
            size_t used = 0;
            v[k] = std::stod(cell, &used);
            if (used != cell.size()) {
                throw std::invalid_argument("sweep csv: line " + std::to_string(line_no) +
                                            " field " + std::to_string(k + 1) + " is not a number");
            }
        }
        if (std::getline(fields, cell, ',')) {
            throw std::invalid_argument("sweep csv: line " + std::to_string(line_no) +
                                        " has more than 6 fields");
        }
        rows.push_back(SweepRow{v[0], v[1], v[2], v[3], v[4], v[5]});
    }
    return rows;
}

}  // namespace qfano
