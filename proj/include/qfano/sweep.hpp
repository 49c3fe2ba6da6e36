#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace qfano {

// One grid point of a depolarizing sweep: the numerically computed fidelity
// and entropy exchange, the QFI, and the gamma-optimized extension bound
// with its optimizer. Column order of the CSV matches field order.
struct SweepRow {
    double p;
    double fidelity;
    double entropy_exchange;  // nats
    double qfi;               // nats
    double ineq4_opt;         // nats
    double gamma1_star;
};

// F = 1 + p(lambda^2 - lambda - 1/2) for the depolarizing channel acting on
// the system half of a purification of diag(lambda, 1-lambda); holds for any
// unitary rotation of the system-side basis.
double depol_fidelity_closed(double p, double lambda);

// Shannon entropy of the closed-form joint spectrum
//   [p*lambda/2, p*(1-lambda)/2, 1/2 - p/4 + theta/4, 1/2 - p/4 - theta/4],
//   theta = sqrt(p^2 + 12 p^2 lambda(1-lambda) + 4(1-p) - 16 p lambda(1-lambda)).
double depol_entropy_closed(double p, double lambda);

// Uniform p grid over [0,1]. Each row draws a seeded random system-side
// unitary, computes fidelity and entropy exchange numerically, checks both
// against the closed forms (disagreement beyond 1e-8 is a hard failure),
// then optimizes the extension bound by golden-section search.
std::vector<SweepRow> run_sweep(double lambda, int p_steps, uint64_t seed);

// CSV with 17 significant digits, enough for doubles to round-trip exactly.
void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);
std::vector<SweepRow> read_sweep_csv(std::istream& in);

}  // namespace qfano
