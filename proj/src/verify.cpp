#include "qfano/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "qfano/bounds.hpp"
#include "qfano/errors.hpp"
#include "qfano/optimize.hpp"
#include "qfano/rng.hpp"
#include "qfano/sweep.hpp"

namespace qfano {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

ProbabilityVector random_prob(Rng& rng, int n) {
    std::vector<double> v(static_cast<size_t>(n));
    for (double& e : v) {
        double u = rng.uniform();
        if (u <= 0.0) u = 0x1.0p-53;
        e = -std::log(u);
    }
    double sum = 0.0;
    for (double e : v) sum += e;
    for (double& e : v) e /= sum;
    return ProbabilityVector(std::move(v));
}

// Interior probability vector: a Dirichlet draw pulled toward uniform so no
// entry gets small enough to make downstream logs or products singular.
ProbabilityVector interior_prob(Rng& rng, int n, double mix) {
    const ProbabilityVector raw = random_prob(rng, n);
    std::vector<double> v(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) v[static_cast<size_t>(k)] = (1.0 - mix) * raw[k] + mix / n;
    return ProbabilityVector(std::move(v));
}

ComplexMatrix random_hermitian(Rng& rng, int n) {
    ComplexMatrix g(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) g(r, c) = rng.cgaussian();
    return Complex(0.5) * (g + g.adjoint());
}

ComplexMatrix random_square(Rng& rng, int n) {
    ComplexMatrix g(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) g(r, c) = rng.cgaussian();
    return g;
}

// Full-rank density: a Ginibre density pulled toward the maximally mixed
// state, so the minimum eigenvalue stays well above the 1e-10 support cutoff.
DensityMatrix mixed_density(Rng& rng, int n, double eps) {
    const DensityMatrix raw = random_density(rng.next_u64(), n);
    const ComplexMatrix m =
        Complex(1.0 - eps) * raw.mat() + Complex(eps / n) * ComplexMatrix::identity(n);
    return DensityMatrix(m);
}

DensityMatrix mixed_diagonal_density(Rng& rng, int n, double eps) {
    const ProbabilityVector w = random_prob(rng, n);
    std::vector<double> diag(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) diag[static_cast<size_t>(k)] = (1.0 - eps) * w[k] + eps / n;
    return DensityMatrix(ComplexMatrix::diagonal(diag));
}

PureState random_unit_state(Rng& rng, int n) {
    CVector v(static_cast<size_t>(n));
    for (Complex& e : v) e = rng.cgaussian();
    double nn = norm(v);
    if (nn < 1e-12) {
        v[0] = 1.0;
        nn = 1.0;
    }
    for (Complex& e : v) e /= nn;
    return PureState(std::move(v));
}

std::vector<PureState> random_basis(Rng& rng, int n) {
    const std::vector<CVector> vecs = complete_orthonormal_basis(random_unit_state(rng, n).amplitudes(), n);
    std::vector<PureState> basis;
    basis.reserve(vecs.size());
    for (const CVector& v : vecs) basis.emplace_back(v);
    return basis;
}

struct ChannelInstance {
    ProbabilityVector lambda;
    KrausChannel ch;
    PureState psi;
    DensityMatrix joint;
    DensityMatrix rho;
    double f;
    double s;
    int d;
};

ChannelInstance make_instance(Rng& rng, int d, bool rotate) {
    ProbabilityVector lambda = random_prob(rng, d);
    PureState psi = purify(lambda);
    if (rotate) psi = rotate_system(psi, random_unitary(rng.next_u64(), d));
    const int num_kraus = 1 + static_cast<int>(rng.next_u64() % static_cast<uint64_t>(d * d));
    KrausChannel ch = random_channel(rng.next_u64(), d, num_kraus);
    DensityMatrix joint = extend_to_joint(ch, psi);
    DensityMatrix rho(partial_trace_R(psi.projector(), d, d));
    const double f = entanglement_fidelity(psi, joint);
    const double s = entropy_exchange(joint);
    return ChannelInstance{std::move(lambda), std::move(ch), std::move(psi),
                           std::move(joint),  std::move(rho), f,
                           s,                 d};
}

// The gamma_bound display evaluated directly on raw positive entries; the
// finite-difference reference for the gradient check, deliberately separate
// from the library implementation.
double raw_gamma_objective(const ProbabilityVector& lambda, const std::vector<double>& g, double f,
                           int d) {
    double s = 0.0;
    double lg = 0.0;
    for (int k = 0; k < d; ++k) {
        s += lambda[k] * g[static_cast<size_t>(k)];
        if (lambda[k] > 0.0) lg += lambda[k] * std::log(g[static_cast<size_t>(k)]);
    }
    return binary_entropy(f) + std::log(s) +
           (1.0 - f) * std::log(static_cast<double>(d) / s - 1.0) - lg;
}

using TrialFn = std::function<double(Rng&, int)>;

PropertyResult run_property(const std::string& name, const Rng& prop_rng, int trials,
                            const TrialFn& fn) {
    PropertyResult r{name, 0, kInf, 0, false};
    for (int t = 0; t < trials; ++t) {
        const uint64_t trial_seed = prop_rng.stream(static_cast<uint64_t>(t)).seed();
        double slack;
        try {
            Rng trial(trial_seed);
            slack = fn(trial, t);
        } catch (const std::exception&) {
            slack = -kInf;
        }
        ++r.trials;
        if (slack < r.worst_slack) {
            r.worst_slack = slack;
            r.worst_seed = trial_seed;
        }
        if (std::isinf(r.worst_slack) && r.worst_slack < 0.0) break;
    }
    r.passed = r.trials > 0 && r.worst_slack >= 0.0;
    return r;
}

}  // namespace

std::vector<PropertyResult> run_verification(uint64_t seed, int trials,
                                             const std::vector<int>& dims) {
    if (trials < 1) throw std::invalid_argument("run_verification: trials must be >= 1");
    if (dims.empty()) throw std::invalid_argument("run_verification: dims must be non-empty");
    for (int d : dims) {
        if (d < 2) throw std::invalid_argument("run_verification: every dim must be >= 2");
    }

    const Rng base(seed);
    uint64_t stream_index = 0;
    std::vector<PropertyResult> results;

    const auto dim_at = [&dims](int t) {
        return dims[static_cast<size_t>(t) % dims.size()];
    };
    const auto add = [&](const std::string& name, int cap, const TrialFn& fn) {
        results.push_back(run_property(name, base.stream(stream_index++), std::min(trials, cap), fn));
    };

    // linalg
    add("eig_trace_sum", 100, [&](Rng& rng, int t) {
        double worst = kInf;
        const int d = dim_at(t);
        for (int n : {d, d * d}) {
            const ComplexMatrix h = random_hermitian(rng, n);
            const EigenDecomposition eig = hermitian_eig(h);
            double sum = 0.0;
            for (double v : eig.eigenvalues) sum += v;
            worst = std::min(worst, 1e-10 - std::abs(sum - real_checked(h.trace())));
        }
        return worst;
    });
    add("tensor_trace_multiplicative", 100, [&](Rng& rng, int t) {
        const int d = dim_at(t);
        const ComplexMatrix a = random_square(rng, d);
        const ComplexMatrix b = random_square(rng, d);
        return 1e-12 - std::abs(tensor_product(a, b).trace() - a.trace() * b.trace());
    });
    add("partial_trace_product", 100, [&](Rng& rng, int t) {
        const int d = dim_at(t);
        const ComplexMatrix a = random_square(rng, d);
        const ComplexMatrix b = random_square(rng, d);
        const ComplexMatrix recovered = partial_trace_R(tensor_product(a, b), d, d);
        return 1e-12 - recovered.max_abs_diff(a.trace() * b);
    });
    add("eig_reconstruction", 100, [&](Rng& rng, int t) {
        double worst = kInf;
        const int d = dim_at(t);
        for (int n : {d, d * d}) {
            const ComplexMatrix h = random_hermitian(rng, n);
            const EigenDecomposition eig = hermitian_eig(h);
            ComplexMatrix recon(n);
            for (int k = 0; k < n; ++k) {
                const CVector v = eig.eigenvector(k);
                recon = recon + Complex(eig.eigenvalues[static_cast<size_t>(k)]) * outer(v, v);
            }
            worst = std::min(worst, 1e-10 - recon.max_abs_diff(h));
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    const double gram =
                        std::abs(inner(eig.eigenvector(i), eig.eigenvector(j)) -
                                 Complex(i == j ? 1.0 : 0.0));
                    worst = std::min(worst, 1e-10 - gram);
                }
            }
        }
        return worst;
    });

    // quantum
    add("pinch_trace", 100, [&](Rng& rng, int t) {
        const int d = dim_at(t);
        const DensityMatrix rho = random_density(rng.next_u64(), d);
        const ProbabilityVector p = pinch(rho, random_basis(rng, d));
        double sum = 0.0;
        for (int k = 0; k < p.size(); ++k) sum += p[k];
        return 1e-10 - std::abs(sum - 1.0);
    });
    add("joint_partial_trace", 100, [&](Rng& rng, int t) {
        const ChannelInstance inst = make_instance(rng, dim_at(t), true);
        const ComplexMatrix reduced = partial_trace_R(inst.joint.mat(), inst.d, inst.d);
        return 1e-10 - reduced.max_abs_diff(apply_channel(inst.ch, inst.rho).mat());
    });
    add("depol_formula", 50, [&](Rng& rng, int) {
        const double p = rng.uniform();
        const DensityMatrix rho = random_density(rng.next_u64(), 2);
        const ComplexMatrix direct =
            Complex(1.0 - 0.75 * p) * rho.mat() +
            Complex(0.25 * p) * (pauli_x() * rho.mat() * pauli_x() +
                                 pauli_y() * rho.mat() * pauli_y() +
                                 pauli_z() * rho.mat() * pauli_z());
        return 1e-12 - apply_channel(depolarizing_channel(p), rho).mat().max_abs_diff(direct);
    });
    add("purify_rank_one", 100, [&](Rng& rng, int t) {
        const PureState psi = purify(random_prob(rng, dim_at(t)));
        const EigenDecomposition eig = hermitian_eig(psi.projector());
        return 1e-10 - std::abs(eig.eigenvalues[1]);
    });

    // entropy
    add("relative_entropy_vs_g", 500, [&](Rng& rng, int t) {
        double worst = kInf;
        const int d = dim_at(t);
        for (int n : {d * d, 4}) {
            const ProbabilityVector p = random_prob(rng, n);
            const ProbabilityVector q = random_prob(rng, n);
            const double div = classical_relative_entropy(p, q);
            if (std::isinf(div)) continue;
            worst = std::min(worst, div - binary_relative_entropy(p[0], q[0]) + 1e-12);
        }
        return worst;
    });
    add("g_equality_condition", 200, [&](Rng& rng, int t) {
        const int n = dim_at(t) * dim_at(t);
        const double p1 = 0.1 + 0.8 * rng.uniform();
        const double q1 = 0.1 + 0.8 * rng.uniform();
        const ProbabilityVector tail = random_prob(rng, n - 1);
        std::vector<double> p(static_cast<size_t>(n));
        std::vector<double> q(static_cast<size_t>(n));
        p[0] = p1;
        q[0] = q1;
        for (int k = 1; k < n; ++k) {
            p[static_cast<size_t>(k)] = (1.0 - p1) * tail[k - 1];
            q[static_cast<size_t>(k)] = p[static_cast<size_t>(k)] * (1.0 - q1) / (1.0 - p1);
        }
        const double div =
            classical_relative_entropy(ProbabilityVector(p), ProbabilityVector(q));
        return 1e-10 - std::abs(div - binary_relative_entropy(p1, q1));
    });
    add("pinching_monotonicity", 200, [&](Rng& rng, int t) {
        const int d = dim_at(t);
        const DensityMatrix rho = random_density(rng.next_u64(), d);
        const DensityMatrix sigma = mixed_density(rng, d, 1e-3);
        const std::vector<PureState> basis = random_basis(rng, d);
        const double pinched =
            classical_relative_entropy(pinch(rho, basis), pinch(sigma, basis));
        return quantum_relative_entropy(rho, sigma) + 1e-10 - pinched;
    });
    add("entropy_unitary_invariance", 100, [&](Rng& rng, int t) {
        const int d = dim_at(t);
        const DensityMatrix rho = random_density(rng.next_u64(), d);
        const ComplexMatrix u = random_unitary(rng.next_u64(), d);
        const DensityMatrix rotated(u * rho.mat() * u.adjoint());
        return 1e-9 - std::abs(von_neumann_entropy(rotated) - von_neumann_entropy(rho));
    });
    add("relative_entropy_nonneg", 100, [&](Rng& rng, int t) {
        const int d = dim_at(t);
        const DensityMatrix rho = random_density(rng.next_u64(), d);
        const DensityMatrix sigma = mixed_density(rng, d, 1e-3);
        const double self = quantum_relative_entropy(rho, rho);
        return std::min(quantum_relative_entropy(rho, sigma) + 1e-10, 1e-9 - std::abs(self));
    });

    // bounds
    add("qfi_validity", 500, [&](Rng& rng, int t) {
        const ChannelInstance inst = make_instance(rng, dim_at(t), true);
        return qfi_bound(inst.f, inst.d) + 1e-9 - inst.s;
    });
    add("general_bound_validity", 200, [&](Rng& rng, int t) {
        const ChannelInstance inst = make_instance(rng, dim_at(t), true);
        const DensityMatrix sigma = mixed_density(rng, inst.d * inst.d, 1e-3);
        return general_bound(inst.psi, inst.joint, sigma) + 1e-9 - inst.s;
    });
    add("ineq1_matches_ineq2", 200, [&](Rng& rng, int t) {
        const ChannelInstance inst = make_instance(rng, dim_at(t), false);
        const ProbabilityVector gamma = interior_prob(rng, inst.d, 0.01);
        const DensityMatrix rho_q2 = mixed_density(rng, inst.d, 1e-3);
        const DensityMatrix e_of_rho = apply_channel(inst.ch, inst.rho);
        const double i1 = general_bound(inst.psi, inst.joint, product_ancilla(gamma, rho_q2));
        const double i2 = ineq2_bound(inst.lambda, gamma, rho_q2, inst.f, e_of_rho);
        return 1e-10 - std::abs(i1 - i2);
    });
    add("ineq2_validity", 200, [&](Rng& rng, int t) {
        const ChannelInstance inst = make_instance(rng, dim_at(t), false);
        const ProbabilityVector gamma = random_prob(rng, inst.d);
        const DensityMatrix rho_q2 = mixed_diagonal_density(rng, inst.d, 1e-3);
        const DensityMatrix e_of_rho = apply_channel(inst.ch, inst.rho);
        const double bound = ineq2_bound(inst.lambda, gamma, rho_q2, inst.f, e_of_rho);
        if (std::isinf(bound)) return kInf;
        return bound + 1e-9 - inst.s;
    });
    add("ineq3_validity", 200, [&](Rng& rng, int t) {
        const ChannelInstance inst = make_instance(rng, dim_at(t), false);
        const ProbabilityVector gamma = random_prob(rng, inst.d);
        const ProbabilityVector xi = random_prob(rng, inst.d);
        const double bound = ineq3_bound(inst.lambda, gamma, xi, inst.f);
        if (std::isinf(bound)) return kInf;
        return bound + 1e-9 - inst.s;
    });
    add("ineq4_validity", 500, [&](Rng& rng, int t) {
        const ChannelInstance inst = make_instance(rng, dim_at(t), false);
        const ProbabilityVector gamma = random_prob(rng, inst.d);
        const double bound = gamma_bound(inst.lambda, gamma, inst.f, inst.d);
        if (std::isinf(bound)) return kInf;
        return bound + 1e-9 - inst.s;
    });
    add("reduction_identities", 100, [&](Rng& rng, int t) {
        const int d = dim_at(t);
        const ProbabilityVector lambda = random_prob(rng, d);
        const ProbabilityVector uniform = ProbabilityVector::uniform(d);
        const double f = rng.uniform();
        const double beta = 1.0 / (static_cast<double>(d) * d);
        const double qfi = qfi_bound(f, d);
        double diff = std::abs(gamma_bound(lambda, uniform, f, d) - qfi);
        diff = std::max(diff, std::abs(ineq3_bound(lambda, uniform, uniform, f) - qfi));
        diff = std::max(diff, std::abs(beta_bound_max(f, beta, d) - qfi));
        diff = std::max(diff, std::abs(beta_bound_min(f, beta) - qfi));
        return 1e-12 - diff;
    });
    add("beta_bounds_validity", 200, [&](Rng& rng, int t) {
        const ChannelInstance inst = make_instance(rng, dim_at(t), true);
        const double beta = 1.0 / (static_cast<double>(inst.d) * inst.d);
        const double beta_max = beta + rng.uniform() * (1.0 - beta) * 0.999999;
        const double beta_min = beta * (1e-6 + (1.0 - 1e-6) * rng.uniform());
        return std::min(beta_bound_max(inst.f, beta_max, inst.d) + 1e-9 - inst.s,
                        beta_bound_min(inst.f, beta_min) + 1e-9 - inst.s);
    });
    add("fidelity_rotation_invariance", 100, [&](Rng& rng, int) {
        const double p = rng.uniform();
        const ProbabilityVector lambda = random_prob(rng, 2);
        const KrausChannel ch = depolarizing_channel(p);
        const PureState base_psi = purify(lambda);
        double f[2];
        for (int i = 0; i < 2; ++i) {
            const PureState psi = rotate_system(base_psi, random_unitary(rng.next_u64(), 2));
            f[i] = entanglement_fidelity(psi, extend_to_joint(ch, psi));
        }
        return 1e-10 - std::abs(f[0] - f[1]);
    });
    add("entropy_exchange_w_matrix", 200, [&](Rng& rng, int t) {
        const ChannelInstance inst = make_instance(rng, dim_at(t), true);
        const ComplexMatrix w = kraus_overlap_matrix(inst.ch, inst.rho);
        return 1e-9 - std::abs(inst.s - von_neumann_entropy(DensityMatrix(w)));
    });
    add("depol_closed_forms", 100, [&](Rng& rng, int) {
        const double p = rng.uniform();
        const double lam = rng.uniform();
        const PureState psi = rotate_system(purify(ProbabilityVector({lam, 1.0 - lam})),
                                            random_unitary(rng.next_u64(), 2));
        const DensityMatrix joint = extend_to_joint(depolarizing_channel(p), psi);
        const double fdiff =
            std::abs(entanglement_fidelity(psi, joint) - depol_fidelity_closed(p, lam));
        const double sdiff = std::abs(entropy_exchange(joint) - depol_entropy_closed(p, lam));
        return std::min(1e-10 - fdiff, 1e-8 - sdiff);
    });
    add("full_report_invariant", 200, [&](Rng& rng, int t) {
        const int d = dim_at(t);
        const ProbabilityVector lambda = random_prob(rng, d);
        const int num_kraus = 1 + static_cast<int>(rng.next_u64() % static_cast<uint64_t>(d * d));
        const KrausChannel ch = random_channel(rng.next_u64(), d, num_kraus);
        const ProbabilityVector gamma = interior_prob(rng, d, 0.01);
        const ProbabilityVector xi = interior_prob(rng, d, 0.01);
        const DensityMatrix rho_q2 = mixed_density(rng, d, 1e-3);
        const BoundReport report = full_report(lambda, ch, gamma, xi, rho_q2);
        double worst = kInf;
        for (double b : {report.qfi, report.ineq1, report.ineq2, report.ineq3, report.ineq4,
                         report.beta_max_bound, report.beta_min_bound}) {
            if (std::isinf(b)) continue;
            worst = std::min(worst, b + 1e-9 - report.entropy_exchange);
        }
        return worst;
    });

    // optimize
    add("optimizer_gradient_check", 100, [&](Rng& rng, int t) {
        const int d = dim_at(t);
        const ProbabilityVector lambda = random_prob(rng, d);
        const ProbabilityVector gamma = interior_prob(rng, d, 0.01);
        const double f = rng.uniform();
        const std::vector<double> analytic = gamma_bound_gradient(lambda, gamma, f, d);
        const double h = 1e-6;
        double max_diff = 0.0;
        double max_grad = 0.0;
        for (int j = 0; j < d; ++j) {
            std::vector<double> up = gamma.weights();
            std::vector<double> down = gamma.weights();
            up[static_cast<size_t>(j)] += h;
            down[static_cast<size_t>(j)] -= h;
            const double fd = (raw_gamma_objective(lambda, up, f, d) -
                               raw_gamma_objective(lambda, down, f, d)) /
                              (2.0 * h);
            max_diff = std::max(max_diff, std::abs(fd - analytic[static_cast<size_t>(j)]));
            max_grad = std::max(max_grad, std::abs(analytic[static_cast<size_t>(j)]));
        }
        return 1e-5 - max_diff / std::max(1.0, max_grad);
    });
    add("optimizer_monotone_decrease", 100, [&](Rng& rng, int t) {
        const int d = dim_at(t);
        const ProbabilityVector lambda = random_prob(rng, d);
        const double f = rng.uniform();
        std::vector<double> trace;
        optimize_gamma(lambda, f, d, 1e-10, 10000, &trace);
        double worst = kInf;
        for (size_t i = 1; i < trace.size(); ++i) {
            worst = std::min(worst, trace[i - 1] - trace[i] + 1e-15);
        }
        return worst;
    });
    add("optimizer_vs_golden", 100, [&](Rng& rng, int) {
        const ProbabilityVector lambda = random_prob(rng, 2);
        const double f = rng.uniform();
        const OptimizationResult pgd = optimize_gamma(lambda, f, 2);
        const OptimizationResult gold = golden_section_gamma1(lambda, f);
        return 1e-7 - std::abs(pgd.bound_star - gold.bound_star);
    });
    add("optimizer_bounded_by_qfi", 100, [&](Rng& rng, int t) {
        const int d = dim_at(t);
        const ProbabilityVector lambda = random_prob(rng, d);
        const double f = rng.uniform();
        const OptimizationResult res = optimize_gamma(lambda, f, d);
        double min_entry = kInf;
        for (int k = 0; k < d; ++k) min_entry = std::min(min_entry, res.gamma_star[k]);
        return std::min(qfi_bound(f, d) + 1e-9 - res.bound_star, min_entry - 1e-9 + 1e-15);
    });
    add("optimizer_preserves_validity", 100, [&](Rng& rng, int t) {
        const ChannelInstance inst = make_instance(rng, dim_at(t), false);
        const OptimizationResult res = optimize_gamma(inst.lambda, inst.f, inst.d);
        return res.bound_star + 1e-9 - inst.s;
    });
    add("joint_optimizer_validity", 50, [&](Rng& rng, int t) {
        const ChannelInstance inst = make_instance(rng, dim_at(t), false);
        const JointOptimizationResult res = optimize_gamma_xi(inst.lambda, inst.f);
        return std::min(res.bound_star + 1e-9 - inst.s,
                        qfi_bound(inst.f, inst.d) + 1e-9 - res.bound_star);
    });

    // cli
    add("sweep_determinism", 1, [&](Rng& rng, int) {
        const uint64_t sweep_seed = rng.next_u64();
        std::ostringstream a;
        std::ostringstream b;
        write_sweep_csv(run_sweep(0.1, 11, sweep_seed), a);
        write_sweep_csv(run_sweep(0.1, 11, sweep_seed), b);
        return a.str() == b.str() ? 0.0 : -kInf;
    });
    add("sweep_csv_roundtrip", 1, [&](Rng& rng, int) {
        const std::vector<SweepRow> rows = run_sweep(0.3, 11, rng.next_u64());
        std::ostringstream out;
        write_sweep_csv(rows, out);
        std::istringstream in(out.str());
        const std::vector<SweepRow> back = read_sweep_csv(in);
        if (back.size() != rows.size()) return -kInf;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (back[i].p != rows[i].p || back[i].fidelity != rows[i].fidelity ||
                back[i].entropy_exchange != rows[i].entropy_exchange ||
                back[i].qfi != rows[i].qfi || back[i].ineq4_opt != rows[i].ineq4_opt ||
                back[i].gamma1_star != rows[i].gamma1_star) {
                return -kInf;
            }
        }
        return 0.0;
    });

    return results;
}

}  // namespace qfano
