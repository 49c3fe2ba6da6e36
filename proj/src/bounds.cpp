#include "qfano/bounds.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "qfano/errors.hpp"

namespace qfano {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSigmaRankTol = 1e-10;

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

double clamp01(double x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); }

// sum_j ln(e_j) |v_j><v_j| from an eigendecomposition with all e_j > 0.
ComplexMatrix log_from_eig(const EigenDecomposition& eig) {
    const int n = eig.eigenvectors.dim();
    ComplexMatrix out(n);
    for (int j = 0; j < n; ++j) {
        const double lj = std::log(eig.eigenvalues[static_cast<size_t>(j)]);
        const CVector v = eig.eigenvector(j);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                out(r, c) += lj * v[static_cast<size_t>(r)] * std::conj(v[static_cast<size_t>(c)]);
    }
    return out;
}

// -sum_k lambda_k ln(gamma_k), +inf when a zero gamma sits under positive
// lambda.
double neg_lambda_log_gamma(const ProbabilityVector& lambda, const ProbabilityVector& gamma) {
    double t = 0.0;
    for (int k = 0; k < lambda.size(); ++k) {
        if (lambda[k] <= 0.0) continue;
        if (gamma[k] <= 0.0) return kInf;
        t -= lambda[k] * std::log(gamma[k]);
    }
    return t;
}

}  // namespace

double entanglement_fidelity(const PureState& psi, const DensityMatrix& rho_joint) {
    require(psi.dim() == rho_joint.dim(), "entanglement_fidelity: dimension mismatch");
    const CVector image = rho_joint.mat() * psi.amplitudes();
    return clamp01(real_checked(inner(psi.amplitudes(), image)));
}

double entropy_exchange(const DensityMatrix& rho_joint) {
    return von_neumann_entropy(rho_joint);
}

ComplexMatrix kraus_overlap_matrix(const KrausChannel& ch, const DensityMatrix& rho) {
    require(ch.dim() == rho.dim(), "kraus_overlap_matrix: dimension mismatch");
    const int n = static_cast<int>(ch.operators().size());
    ComplexMatrix w(n);
    for (int i = 0; i < n; ++i) {
        const ComplexMatrix ei_rho = ch.operators()[static_cast<size_t>(i)] * rho.mat();
        for (int j = 0; j < n; ++j) {
            w(i, j) = (ei_rho * ch.operators()[static_cast<size_t>(j)].adjoint()).trace();
        }
    }
    return w;
}

double qfi_bound(double f, int d) {
    require(d >= 2, "qfi_bound: d must be >= 2");
    return binary_entropy(f) + (1.0 - f) * std::log(static_cast<double>(d) * d - 1.0);
}

DensityMatrix product_ancilla(const ProbabilityVector& gamma, const DensityMatrix& rho_q2) {
    return DensityMatrix(
        tensor_product(ComplexMatrix::diagonal(gamma.weights()), rho_q2.mat()));
}

double general_bound(const PureState& psi, const DensityMatrix& rho_joint,
                     const DensityMatrix& sigma) {
    require(sigma.dim() == rho_joint.dim(), "general_bound: dimension mismatch");
    require(psi.dim() == rho_joint.dim(), "general_bound: dimension mismatch");

    const EigenDecomposition sig_eig = hermitian_eig(sigma.mat());
    if (sig_eig.eigenvalues.back() <= kSigmaRankTol) {
        throw std::invalid_argument(
            "general_bound: sigma is singular (min eigenvalue <= 1e-10), ln(sigma) undefined");
    }

    const double f = entanglement_fidelity(psi, rho_joint);
    const CVector sig_psi = sigma.mat() * psi.amplitudes();
    const double q1 = clamp01(real_checked(inner(psi.amplitudes(), sig_psi)));

    const ComplexMatrix log_sigma = log_from_eig(sig_eig);
    const double cross = real_checked_trace(rho_joint.mat(), log_sigma);
    return -binary_relative_entropy(f, q1) - cross;
}

double ineq2_bound(const ProbabilityVector& lambda, const ProbabilityVector& gamma,
                   const DensityMatrix& rho_q2, double f, const DensityMatrix& e_of_rho) {
    const int d = lambda.size();
    require(gamma.size() == d && rho_q2.dim() == d && e_of_rho.dim() == d,
            "ineq2_bound: dimension mismatch");

    const EigenDecomposition q2_eig = hermitian_eig(rho_q2.mat());
    if (q2_eig.eigenvalues.back() <= kSigmaRankTol) {
        throw std::invalid_argument("ineq2_bound: rhoQ2 is singular, ln(rhoQ2) undefined");
    }

    const double log_gamma_term = neg_lambda_log_gamma(lambda, gamma);
    if (std::isinf(log_gamma_term)) return kInf;

    double q1 = 0.0;
    for (int k = 0; k < d; ++k) {
        q1 += gamma[k] * lambda[k] * real_checked(rho_q2.mat()(k, k));
    }
    q1 = std::min(std::max(q1, 0.0), 1.0);

    const ComplexMatrix log_q2 = log_from_eig(q2_eig);
    const double cross = real_checked_trace(e_of_rho.mat(), log_q2);
    return -binary_relative_entropy(f, q1) + log_gamma_term - cross;
}

double ineq3_bound(const ProbabilityVector& lambda, const ProbabilityVector& gamma,
                   const ProbabilityVector& xi, double f) {
    const int d = lambda.size();
    require(gamma.size() == d && xi.size() == d, "ineq3_bound: dimension mismatch");

    double xi_min = xi[0];
    for (int k = 1; k < d; ++k) xi_min = std::min(xi_min, xi[k]);
    require(xi_min > 0.0, "ineq3_bound: xi must be strictly positive entrywise");

    double t = 0.0;
    for (int k = 0; k < d; ++k) t += lambda[k] * gamma[k] * xi[k];
    require(t > 0.0 && t < 1.0, "ineq3_bound: sum(lambda*gamma*xi) must lie in (0,1)");

    const double log_gamma_term = neg_lambda_log_gamma(lambda, gamma);
    if (std::isinf(log_gamma_term)) return kInf;

    return binary_entropy(f) + std::log(t / xi_min) + (1.0 - f) * std::log(1.0 / t - 1.0) +
           log_gamma_term;
}

double gamma_bound(const ProbabilityVector& lambda, const ProbabilityVector& gamma,
                   double f, int d) {
    require(lambda.size() == d && gamma.size() == d, "gamma_bound: dimension mismatch");

    double s = 0.0;
    for (int k = 0; k < d; ++k) s += lambda[k] * gamma[k];
    require(s > 0.0 && s < static_cast<double>(d),
            "gamma_bound: sum(lambda*gamma) must lie in (0,d)");

    const double log_gamma_term = neg_lambda_log_gamma(lambda, gamma);
    if (std::isinf(log_gamma_term)) return kInf;

    return binary_entropy(f) + std::log(s) +
           (1.0 - f) * std::log(static_cast<double>(d) / s - 1.0) + log_gamma_term;
}

double beta_bound_max(double f, double beta_max, int d) {
    require(d >= 2, "beta_bound_max: d must be >= 2");
    const double floor = 1.0 / (static_cast<double>(d) * d);
    require(beta_max >= floor && beta_max < 1.0, "beta_bound_max: betaMax outside [1/d^2, 1)");
    return binary_entropy(f) - f * std::log(1.0 / beta_max - 1.0) +
           std::log(static_cast<double>(d) * d - 1.0);
}

double beta_bound_min(double f, double beta_min) {
    require(beta_min > 0.0 && beta_min < 1.0, "beta_bound_min: betaMin outside (0, 1)");
    return binary_entropy(f) + (1.0 - f) * std::log(1.0 / beta_min - 1.0);
}

BoundReport full_report(const ProbabilityVector& lambda, const KrausChannel& channel,
                        const ProbabilityVector& gamma, const ProbabilityVector& xi,
                        const DensityMatrix& rho_q2) {
    const int d = channel.dim();
    require(lambda.size() == d && gamma.size() == d && xi.size() == d && rho_q2.dim() == d,
            "full_report: dimension mismatch");

    const PureState psi = purify(lambda);
    const DensityMatrix rho_joint = extend_to_joint(channel, psi);
    const DensityMatrix sigma = product_ancilla(gamma, rho_q2);
    const DensityMatrix e_of_rho =
        apply_channel(channel, DensityMatrix(ComplexMatrix::diagonal(lambda.weights())));

    const double f = entanglement_fidelity(psi, rho_joint);
    const double s = entropy_exchange(rho_joint);
    const double beta = 1.0 / (static_cast<double>(d) * d);

    BoundReport report{
        f,
        s,
        qfi_bound(f, d),
        general_bound(psi, rho_joint, sigma),
        ineq2_bound(lambda, gamma, rho_q2, f, e_of_rho),
        ineq3_bound(lambda, gamma, xi, f),
        gamma_bound(lambda, gamma, f, d),
        beta_bound_max(f, beta, d),
        beta_bound_min(f, beta),
        BoundParameters{gamma, xi, rho_q2, sigma, beta, beta},
    };

    const double bounds[] = {report.qfi,   report.ineq1,          report.ineq2,
                             report.ineq3, report.ineq4,          report.beta_max_bound,
                             report.beta_min_bound};
    for (double b : bounds) {
        if (std::isinf(b)) continue;
        if (s > b + 1e-9) {
            std::ostringstream msg;
            msg << "full_report: a bound (" << b << ") fell below the entropy exchange (" << s
                << ")";
            throw consistency_error(msg.str());
        }
    }
    return report;
}

}  // namespace qfano
