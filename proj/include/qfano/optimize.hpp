#pragma once

#include <vector>

#include "qfano/quantum.hpp"

namespace qfano {

struct OptimizationResult {
    ProbabilityVector gamma_star;
    double bound_star;  // nats
    int iterations;
    bool converged;
};

// Euclidean projection onto the simplex (sort-and-threshold), then entries
// floored at 1e-9 and renormalized so iterates stay strictly interior.
ProbabilityVector project_to_simplex(const std::vector<double>& v);

// Gradient of the gamma_bound objective at interior gamma, treating the
// entries as free positive variables:
//   d/dgamma_j = lambda_j/s + (1-f) lambda_j (-d/s^2)/(d/s - 1) - lambda_j/gamma_j,
//   s = sum_i lambda_i gamma_i.
std::vector<double> gamma_bound_gradient(const ProbabilityVector& lambda,
                                         const ProbabilityVector& gamma, double f, int d);

// Projected-gradient descent on gamma -> gamma_bound(lambda, gamma, f, d)
// with backtracking line search (initial step 0.1, halved until the
// objective decreases), started from uniform gamma; converged once the
// per-iteration decrease drops below tol. For d >= 3, five extra seeded
// random interior starts guard against local minima; the best run wins.
// objective_trace, when given, records the accepted objective values of the
// uniform-start run.
OptimizationResult optimize_gamma(const ProbabilityVector& lambda, double f, int d,
                                  double tol = 1e-10, int max_iter = 10000,
                                  std::vector<double>* objective_trace = nullptr);

// Golden-section search on gamma1 in [1e-9, 1-1e-9] for d = 2, minimizing
// gamma_bound(lambda, [gamma1, 1-gamma1], f, 2). The one-dimensional route,
// independent of the gradient machinery, so the two can vouch for each
// other.
OptimizationResult golden_section_gamma1(const ProbabilityVector& lambda, double f,
                                         double tol = 1e-10);

struct JointOptimizationResult {
    ProbabilityVector gamma_star;
    ProbabilityVector xi_star;
    double bound_star;  // nats
    int rounds;
    bool converged;
};

// Coordinate descent on ineq3_bound alternating the gamma and xi simplex
// blocks, at most max_rounds outer rounds. Varying xi as well as gamma can
// only tighten the bound further; with xi held uniform this reduces to
// optimize_gamma.
JointOptimizationResult optimize_gamma_xi(const ProbabilityVector& lambda, double f,
                                          double tol = 1e-10, int max_rounds = 50);

}  // namespace qfano
