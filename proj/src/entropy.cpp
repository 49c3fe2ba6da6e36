#include "qfano/entropy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qfano {

namespace {

constexpr double kSupportTol = 1e-10;  // eigenvalue below this counts as null space
constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

double xlnx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

}  // namespace

double binary_entropy(double x) {
    require(x >= 0.0 && x <= 1.0, "binary_entropy argument outside [0,1]");
    return -xlnx(x) - xlnx(1.0 - x);
}

double shannon_entropy(const ProbabilityVector& p) {
    double h = 0.0;
    for (double w : p.weights()) h -= xlnx(w);
    return h;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    EigenDecomposition eig = hermitian_eig(rho.mat());
    double sum = 0.0;
    for (double& v : eig.eigenvalues) {
        if (v < 0.0) v = 0.0;
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-8) {
        throw std::runtime_error("eigenvalue sum strayed from 1; eigensolver failure");
    }
    double h = 0.0;
    for (double v : eig.eigenvalues) h -= xlnx(v / sum);
    return h;
}

double quantum_relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
    require(rho.dim() == sigma.dim(), "relative entropy needs equal dims");
    const EigenDecomposition er = hermitian_eig(rho.mat());
    const EigenDecomposition es = hermitian_eig(sigma.mat());
    const int n = rho.dim();

    // overlap[i][j] = |<u_i|v_j>|^2
    std::vector<std::vector<double>> overlap(static_cast<size_t>(n),
                                             std::vector<double>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i) {
        const CVector ui = er.eigenvector(i);
        for (int j = 0; j < n; ++j) {
            overlap[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                std::norm(inner(ui, es.eigenvector(j)));
        }
    }

    for (int i = 0; i < n; ++i) {
        if (er.eigenvalues[static_cast<size_t>(i)] <= kSupportTol) continue;
        double null_mass = 0.0;
        for (int j = 0; j < n; ++j) {
            if (es.eigenvalues[static_cast<size_t>(j)] <= kSupportTol)
                null_mass += overlap[static_cast<size_t>(i)][static_cast<size_t>(j)];
        }
        if (null_mass > kSupportTol) return kInf;
    }

    double result = 0.0;
    for (int i = 0; i < n; ++i) {
        const double r = std::max(0.0, er.eigenvalues[static_cast<size_t>(i)]);
        result += xlnx(r);
        if (r <= 0.0) continue;
        for (int j = 0; j < n; ++j) {
            const double s = es.eigenvalues[static_cast<size_t>(j)];
            if (s <= kSupportTol) continue;
            result -= r * overlap[static_cast<size_t>(i)][static_cast<size_t>(j)] * std::log(s);
        }
    }
    return result;
}

double classical_relative_entropy(const ProbabilityVector& p, const ProbabilityVector& q) {
    require(p.size() == q.size(), "relative entropy needs equal lengths");
    double d = 0.0;
    for (int k = 0; k < p.size(); ++k) {
        const double pk = p[k];
        if (pk <= 0.0) continue;
        const double qk = q[k];
        if (qk <= 1e-15) {
            if (pk > 1e-12) return kInf;
            continue;
        }
        d += pk * std::log(pk / qk);
    }
    return d;
}

double binary_relative_entropy(double p, double q) {
    require(p >= 0.0 && p <= 1.0 && q >= 0.0 && q <= 1.0,
            "binary_relative_entropy arguments outside [0,1]");
    return classical_relative_entropy(ProbabilityVector({p, 1.0 - p}),
                                      ProbabilityVector({q, 1.0 - q}));
}

double classical_fano_bound(double ps, int n) {
    require(n >= 2, "classical_fano_bound needs n >= 2");
    return binary_entropy(ps) + (1.0 - ps) * std::log(static_cast<double>(n - 1));
}

}  // namespace qfano
