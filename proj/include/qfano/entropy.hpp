#pragma once

#include "qfano/quantum.hpp"

namespace qfano {

// All entropic functionals are in nats; 0*ln(0) is taken as 0 throughout.
// Relative entropies return +infinity on support violations.

double binary_entropy(double x);
double shannon_entropy(const ProbabilityVector& p);
double von_neumann_entropy(const DensityMatrix& rho);
double quantum_relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);
double classical_relative_entropy(const ProbabilityVector& p, const ProbabilityVector& q);

// D([p,1-p] || [q,1-q]); the two-outcome specialization used by the bounds.
double binary_relative_entropy(double p, double q);

// H(Ps) + (1-Ps) ln(n-1): ceiling on the conditional entropy of an
// n-valued variable given an estimate correct with probability Ps.
double classical_fano_bound(double ps, int n);

}  // namespace qfano
