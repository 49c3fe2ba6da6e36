#pragma once

#include <cstdint>
#include <vector>

#include "qfano/linalg.hpp"

namespace qfano {

// Nonnegative reals summing to 1. Entries within -1e-12 of zero are clamped
// to 0; anything more negative, or a sum off 1 by more than 1e-10, is
// rejected. Zero entries are legal.
class ProbabilityVector {
public:
    explicit ProbabilityVector(std::vector<double> weights);
    static ProbabilityVector uniform(int n);

    int size() const { return static_cast<int>(w_.size()); }
    double operator[](int k) const { return w_[static_cast<size_t>(k)]; }
    const std::vector<double>& weights() const { return w_; }

private:
    std::vector<double> w_;
};

// Hermitian, positive semidefinite, unit-trace matrix. Validated on
// construction (eigenvalues >= -1e-10, trace 1 within 1e-10).
class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix m);

    int dim() const { return m_.dim(); }
    const ComplexMatrix& mat() const { return m_; }

private:
    ComplexMatrix m_;
};

// Trace-preserving Kraus channel: sum_i E_i^dag E_i = I within tol.
class KrausChannel {
public:
    KrausChannel(int dim, std::vector<ComplexMatrix> operators, double completeness_tol = 1e-10);
    static KrausChannel identity(int dim);

    int dim() const { return dim_; }
    const std::vector<ComplexMatrix>& operators() const { return ops_; }

private:
    int dim_;
    std::vector<ComplexMatrix> ops_;
};

class PureState {
public:
    explicit PureState(CVector amplitudes);

    int dim() const { return static_cast<int>(amp_.size()); }
    const CVector& amplitudes() const { return amp_; }
    ComplexMatrix projector() const;

private:
    CVector amp_;
};

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

// |psi> = sum_k sqrt(lambda_k) |k>|k> on the doubled system, joint index
// k*d+k. Requires d >= 2; zero weights are allowed.
PureState purify(const ProbabilityVector& lambda);

DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho);

// State of reference+system after the channel acts on the system half:
// sum_i (I (x) E_i) |psi><psi| (I (x) E_i)^dag.
DensityMatrix extend_to_joint(const KrausChannel& ch, const PureState& psi);

// (I (x) u) |psi>; rotates the system-side basis of a purification.
PureState rotate_system(const PureState& psi, const ComplexMatrix& u);

// Diagonal of rho in the given complete orthonormal basis, clamped at 0.
ProbabilityVector pinch(const DensityMatrix& rho, const std::vector<PureState>& basis);

// Qubit channel mixing toward I/2: four Kraus operators
// sqrt(1-3p/4) I, sqrt(p/4) X, sqrt(p/4) Y, sqrt(p/4) Z.
KrausChannel depolarizing_channel(double p);

// Seeded random instances. Unitary: QR of a Ginibre matrix with the
// R-diagonal phase fix (Haar). Channel: QR-orthonormalized random
// (num_kraus*d) x d isometry sliced into d x d blocks. Density: normalized
// G G^dag for Ginibre G. All deterministic in the seed.
ComplexMatrix random_unitary(uint64_t seed, int d);
KrausChannel random_channel(uint64_t seed, int d, int num_kraus);
DensityMatrix random_density(uint64_t seed, int d);

}  // namespace qfano
