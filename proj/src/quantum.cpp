#include "qfano/quantum.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qfano/errors.hpp"
#include "qfano/rng.hpp"

namespace qfano {

namespace {

constexpr double kWeightSlack = 1e-12;
constexpr double kSumTol = 1e-10;
constexpr double kHermitianTol = 1e-10;
constexpr double kEigFloor = -1e-10;

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

ComplexMatrix ginibre(Rng& rng, int rows, int cols) {
    // stored in a square matrix of size max(rows, cols); callers index
    // only the leading rows x cols block
    ComplexMatrix g(std::max(rows, cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) g(i, j) = rng.cgaussian();
    return g;
}

// Modified Gram-Schmidt on the leading `cols` columns over `rows` rows,
// multiplying each column by R_kk/|R_kk| afterwards (the Haar phase fix).
void orthonormalize_columns(ComplexMatrix& g, int rows, int cols) {
    for (int j = 0; j < cols; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (int k = 0; k < j; ++k) {
                Complex proj = 0.0;
                for (int i = 0; i < rows; ++i) proj += std::conj(g(i, k)) * g(i, j);
                for (int i = 0; i < rows; ++i) g(i, j) -= proj * g(i, k);
            }
        }
        double r = 0.0;
        for (int i = 0; i < rows; ++i) r += std::norm(g(i, j));
        r = std::sqrt(r);
        if (r < 1e-12) throw std::runtime_error("rank-deficient Ginibre draw");
        // diagonal R entry before normalization fixes the column phase
        Complex pivot = g(j, j);
        Complex phase = (std::abs(pivot) > 0.0) ? pivot / std::abs(pivot) : Complex{1.0};
        for (int i = 0; i < rows; ++i) g(i, j) = g(i, j) / r * phase;
    }
}

}  // namespace

ProbabilityVector::ProbabilityVector(std::vector<double> weights) : w_(std::move(weights)) {
    require(!w_.empty(), "probability vector must be non-empty");
    double sum = 0.0;
    for (double& x : w_) {
        require(std::isfinite(x), "probability weights must be finite");
        require(x >= -kWeightSlack, "negative probability weight");
        if (x < 0.0) x = 0.0;
        sum += x;
    }
    require(std::abs(sum - 1.0) <= kSumTol, "probability weights must sum to 1");
}

ProbabilityVector ProbabilityVector::uniform(int n) {
    require(n >= 1, "uniform distribution needs n >= 1");
    return ProbabilityVector(std::vector<double>(static_cast<size_t>(n), 1.0 / n));
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
    require(m_.is_hermitian(kHermitianTol), "density matrix not Hermitian within 1e-10");
    require(std::abs(m_.trace() - Complex{1.0}) <= kSumTol, "density matrix trace must be 1");
    const EigenDecomposition eig = hermitian_eig(m_);
    for (double v : eig.eigenvalues) {
        require(v >= kEigFloor, "density matrix has eigenvalue below -1e-10");
    }
}

KrausChannel::KrausChannel(int dim, std::vector<ComplexMatrix> operators, double completeness_tol)
    : dim_(dim), ops_(std::move(operators)) {
    require(dim_ >= 1, "channel dim must be positive");
    require(!ops_.empty(), "channel needs at least one Kraus operator");
    ComplexMatrix sum(dim_);
    for (const ComplexMatrix& e : ops_) {
        require(e.dim() == dim_, "Kraus operator dim mismatch");
        sum = sum + e.adjoint() * e;
    }
    if (sum.max_abs_diff(ComplexMatrix::identity(dim_)) > completeness_tol) {
        throw std::invalid_argument("Kraus completeness relation violated");
    }
}

KrausChannel KrausChannel::identity(int dim) {
    return KrausChannel(dim, {ComplexMatrix::identity(dim)});
}

PureState::PureState(CVector amplitudes) : amp_(std::move(amplitudes)) {
    require(!amp_.empty(), "pure state must be non-empty");
    require(std::abs(norm(amp_) - 1.0) <= 1e-10, "pure state must have unit norm");
}

ComplexMatrix PureState::projector() const { return outer(amp_, amp_); }

ComplexMatrix pauli_x() { return ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0}); }
ComplexMatrix pauli_y() {
    return ComplexMatrix(2, {0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0});
}
ComplexMatrix pauli_z() { return ComplexMatrix(2, {1.0, 0.0, 0.0, -1.0}); }

PureState purify(const ProbabilityVector& lambda) {
    const int d = lambda.size();
    require(d >= 2, "purification needs at least 2 weights");
    CVector amp(static_cast<size_t>(d) * d, Complex{});
    for (int k = 0; k < d; ++k) amp[static_cast<size_t>(k) * d + k] = std::sqrt(lambda[k]);
    return PureState(std::move(amp));
}

DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho) {
    require(ch.dim() == rho.dim(), "channel/state dimension mismatch");
    ComplexMatrix out(rho.dim());
    for (const ComplexMatrix& e : ch.operators()) {
        out = out + e * rho.mat() * e.adjoint();
    }
    return DensityMatrix(out);
}

DensityMatrix extend_to_joint(const KrausChannel& ch, const PureState& psi) {
    const int d = ch.dim();
    require(psi.dim() == d * d, "purification dim must be d^2");
    const ComplexMatrix eye = ComplexMatrix::identity(d);
    const ComplexMatrix proj = psi.projector();
    ComplexMatrix out(d * d);
    for (const ComplexMatrix& e : ch.operators()) {
        const ComplexMatrix lifted = tensor_product(eye, e);
        out = out + lifted * proj * lifted.adjoint();
    }
    return DensityMatrix(out);
}

PureState rotate_system(const PureState& psi, const ComplexMatrix& u) {
    const int d = u.dim();
    require(psi.dim() == d * d, "purification dim must be d^2");
    return PureState(tensor_product(ComplexMatrix::identity(d), u) * psi.amplitudes());
}

ProbabilityVector pinch(const DensityMatrix& rho, const std::vector<PureState>& basis) {
    const int n = rho.dim();
    require(static_cast<int>(basis.size()) == n, "pinching basis incomplete");
    for (int i = 0; i < n; ++i) {
        require(basis[static_cast<size_t>(i)].dim() == n, "basis vector dim mismatch");
        for (int j = i; j < n; ++j) {
            const Complex g = inner(basis[static_cast<size_t>(i)].amplitudes(),
                                    basis[static_cast<size_t>(j)].amplitudes());
            const double target = (i == j) ? 1.0 : 0.0;
            require(std::abs(g - Complex{target}) <= 1e-8, "pinching basis not orthonormal");
        }
    }
    std::vector<double> p(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        const CVector& b = basis[static_cast<size_t>(k)].amplitudes();
        const double v = real_checked(inner(b, rho.mat() * b));
        p[static_cast<size_t>(k)] = std::max(0.0, v);
    }
    return ProbabilityVector(std::move(p));
}

KrausChannel depolarizing_channel(double p) {
    require(p >= 0.0 && p <= 1.0, "depolarizing strength must be in [0,1]");
    const double a = std::sqrt(1.0 - 0.75 * p);
    const double b = std::sqrt(0.25 * p);
    std::vector<ComplexMatrix> ops;
    ops.push_back(Complex{a} * ComplexMatrix::identity(2));
    ops.push_back(Complex{b} * pauli_x());
    ops.push_back(Complex{b} * pauli_y());
    ops.push_back(Complex{b} * pauli_z());
    return KrausChannel(2, std::move(ops));
}

ComplexMatrix random_unitary(uint64_t seed, int d) {
    require(d >= 2, "random_unitary needs d >= 2");
    Rng rng(seed);
    ComplexMatrix g = ginibre(rng, d, d);
    orthonormalize_columns(g, d, d);
    return g;
}

KrausChannel random_channel(uint64_t seed, int d, int num_kraus) {
    require(d >= 2, "random_channel needs d >= 2");
    require(num_kraus >= 1, "random_channel needs num_kraus >= 1");
    Rng rng(seed);
    const int rows = num_kraus * d;
    ComplexMatrix g = ginibre(rng, rows, d);
    orthonormalize_columns(g, rows, d);
    std::vector<ComplexMatrix> ops;
    ops.reserve(static_cast<size_t>(num_kraus));
    for (int b = 0; b < num_kraus; ++b) {
        ComplexMatrix e(d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) e(i, j) = g(b * d + i, j);
        ops.push_back(std::move(e));
    }
    return KrausChannel(d, std::move(ops));
}

DensityMatrix random_density(uint64_t seed, int d) {
    require(d >= 2, "random_density needs d >= 2");
    Rng rng(seed);
    ComplexMatrix g = ginibre(rng, d, d);
    ComplexMatrix w = g * g.adjoint();
    const double tr = w.trace().real();
    ComplexMatrix out = Complex{1.0 / tr} * w;
    // symmetrize away the last-ulp asymmetry from the multiply
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            const Complex avg = 0.5 * (out(i, j) + std::conj(out(j, i)));
            out(i, j) = avg;
            out(j, i) = std::conj(avg);
        }
    return DensityMatrix(out);
}

}  // namespace qfano
