#pragma once

#include "qfano/entropy.hpp"
#include "qfano/quantum.hpp"

namespace qfano {

// Everything the report was evaluated with, kept alongside the numbers so a
// report is self-describing.
struct BoundParameters {
    ProbabilityVector gamma;
    ProbabilityVector xi;
    DensityMatrix rho_q2;
    DensityMatrix sigma_r2q2;
    double beta_max;
    double beta_min;
};

struct BoundReport {
    double fidelity;
    double entropy_exchange;  // nats, as are all bound fields
    double qfi;
    double ineq1;
    double ineq2;
    double ineq3;
    double ineq4;
    double beta_max_bound;
    double beta_min_bound;
    BoundParameters parameters;
};

// <psi| rhoJoint |psi>, clamped into [0,1]. Imaginary residue above 1e-10
// is an upstream Hermiticity bug and throws.
double entanglement_fidelity(const PureState& psi, const DensityMatrix& rho_joint);

// Von Neumann entropy of the post-channel joint state.
double entropy_exchange(const DensityMatrix& rho_joint);

// W_ij = Tr(E_i rho E_j^dag). Density-matrix-shaped in the Kraus index; its
// spectrum reproduces the entropy exchange, which makes it the independent
// route the test suites check entropy_exchange against.
ComplexMatrix kraus_overlap_matrix(const KrausChannel& ch, const DensityMatrix& rho);

// H(F) + (1-F) ln(d^2 - 1).
double qfi_bound(double f, int d);

// sum_k gamma_k |k><k| (x) rhoQ2, the separable comparison state the
// parametrized bounds implicitly evaluate against.
DensityMatrix product_ancilla(const ProbabilityVector& gamma, const DensityMatrix& rho_q2);

// -g(F, q1) - Tr(rhoJoint ln(sigma)) with q1 = <psi|sigma|psi>. Requires
// sigma strictly positive definite (min eigenvalue > 1e-10): a singular
// sigma makes the bound undefined, not infinite, so it is rejected.
double general_bound(const PureState& psi, const DensityMatrix& rho_joint,
                     const DensityMatrix& sigma);

// Specialization of general_bound to sigma = product_ancilla(gamma, rhoQ2):
// -g(F, q1) - sum_k lambda_k ln(gamma_k) - Tr(eOfRho ln(rhoQ2)) with
// q1 = sum_k gamma_k lambda_k <k|rhoQ2|k>. +inf when gamma_k = 0 against
// lambda_k > 0.
double ineq2_bound(const ProbabilityVector& lambda, const ProbabilityVector& gamma,
                   const DensityMatrix& rho_q2, double f, const DensityMatrix& e_of_rho);

// H(F) + ln(t / min_i xi_i) + (1-F) ln(1/t - 1) - sum_k lambda_k ln(gamma_k)
// with t = sum_i lambda_i gamma_i xi_i. Requires xi strictly positive and
// t in (0,1).
double ineq3_bound(const ProbabilityVector& lambda, const ProbabilityVector& gamma,
                   const ProbabilityVector& xi, double f);

// H(F) + ln(s) + (1-F) ln(d/s - 1) - sum_k lambda_k ln(gamma_k) with
// s = sum_i lambda_i gamma_i. Uniform gamma collapses this to qfi_bound.
double gamma_bound(const ProbabilityVector& lambda, const ProbabilityVector& gamma,
                   double f, int d);

// H(F) - F ln(1/betaMax - 1) + ln(d^2 - 1), betaMax in [1/d^2, 1).
double beta_bound_max(double f, double beta_max, int d);

// H(F) + (1-F) ln(1/betaMin - 1), betaMin in (0, 1).
double beta_bound_min(double f, double beta_min);

// Builds the purification of diag(lambda), pushes it through the channel and
// evaluates every bound at the given parameters (beta fixed at 1/d^2, where
// both beta bounds coincide with the QFI). Throws consistency_error if any
// finite bound lands below the entropy exchange by more than 1e-9.
BoundReport full_report(const ProbabilityVector& lambda, const KrausChannel& channel,
                        const ProbabilityVector& gamma, const ProbabilityVector& xi,
                        const DensityMatrix& rho_q2);

}  // namespace qfano
