#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qfano/bounds.hpp"
#include "qfano/optimize.hpp"
#include "qfano/rng.hpp"
#include "qfano/sweep.hpp"

using namespace qfano;

namespace {

double raw_objective(const ProbabilityVector& lambda, const std::vector<double>& g, double f,
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

}  // namespace

TEST_CASE("simplex projection fixed points") {
    const ProbabilityVector half = project_to_simplex({0.6, 0.6});
    CHECK(half[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(half[1] == doctest::Approx(0.5).epsilon(1e-14));

    const ProbabilityVector spike = project_to_simplex({2.0, 0.0, 0.0});
    CHECK(spike[0] == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(spike[1] >= 1e-9);
    CHECK(spike[2] >= 1e-9);

    const ProbabilityVector interior = project_to_simplex({0.3, 0.3, 0.4});
    CHECK(interior[0] == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(interior[2] == doctest::Approx(0.4).epsilon(1e-12));

    CHECK_THROWS_AS(project_to_simplex({}), std::invalid_argument);
    CHECK_THROWS_AS(project_to_simplex({1.0, std::nan("")}), std::invalid_argument);
}

TEST_CASE("simplex projection is idempotent and order-preserving") {
    Rng rng(61);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> v(4);
        for (double& x : v) x = 4.0 * rng.gaussian();
        const ProbabilityVector p = project_to_simplex(v);

        double sum = 0.0;
        for (int k = 0; k < 4; ++k) {
            CHECK(p[k] >= 1e-9);
            sum += p[k];
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));

        const ProbabilityVector again = project_to_simplex(p.weights());
        for (int k = 0; k < 4; ++k) CHECK(again[k] == doctest::Approx(p[k]).epsilon(1e-12));

        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                if (v[static_cast<size_t>(i)] > v[static_cast<size_t>(j)]) {
                    CHECK(p[i] >= p[j] - 1e-15);
                }
            }
        }
    }
}

TEST_CASE("analytic gradient matches finite differences") {
    Rng rng(62);
    const double h = 1e-6;
    for (int trial = 0; trial < 20; ++trial) {
        const int d = 2 + static_cast<int>(rng.next_u64() % 2);
        std::vector<double> lw(static_cast<size_t>(d)), gw(static_cast<size_t>(d));
        double ls = 0.0, gs = 0.0;
        for (int k = 0; k < d; ++k) {
            lw[static_cast<size_t>(k)] = 0.1 + rng.uniform();
            gw[static_cast<size_t>(k)] = 0.1 + rng.uniform();
            ls += lw[static_cast<size_t>(k)];
            gs += gw[static_cast<size_t>(k)];
        }
        for (int k = 0; k < d; ++k) {
            lw[static_cast<size_t>(k)] /= ls;
            gw[static_cast<size_t>(k)] /= gs;
        }
        const ProbabilityVector lambda(lw);
        const ProbabilityVector gamma(gw);
        const double f = 0.05 + 0.9 * rng.uniform();

        const std::vector<double> grad = gamma_bound_gradient(lambda, gamma, f, d);
        for (int j = 0; j < d; ++j) {
            std::vector<double> up = gw, down = gw;
            up[static_cast<size_t>(j)] += h;
            down[static_cast<size_t>(j)] -= h;
            const double fd =
                (raw_objective(lambda, up, f, d) - raw_objective(lambda, down, f, d)) / (2.0 * h);
            CHECK(grad[static_cast<size_t>(j)] == doctest::Approx(fd).epsilon(1e-5));
        }
    }
}

TEST_CASE("symmetric spectrum optimizes to uniform gamma") {
    const ProbabilityVector lambda({0.5, 0.5});
    const OptimizationResult res = optimize_gamma(lambda, 0.8, 2);
    CHECK(res.converged);
    CHECK(res.gamma_star[0] == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(res.bound_star == doctest::Approx(qfi_bound(0.8, 2)).epsilon(1e-10));
}

TEST_CASE("perfect fidelity drives the optimized bound to zero") {
    const OptimizationResult res = optimize_gamma(ProbabilityVector({0.2, 0.8}), 1.0, 2);
    CHECK(res.bound_star >= -1e-12);
    CHECK(res.bound_star <= 1e-8);
    CHECK(res.gamma_star[0] == doctest::Approx(0.5).epsilon(1e-4));
}

TEST_CASE("optimizer never beats the entropy exchange or loses to the qfi bound") {
    for (double p : {0.2, 0.5, 0.9}) {
        const double lambda1 = 0.1;
        const double f = depol_fidelity_closed(p, lambda1);
        const double s = depol_entropy_closed(p, lambda1);
        const ProbabilityVector lambda({lambda1, 1.0 - lambda1});
        const OptimizationResult res = optimize_gamma(lambda, f, 2);
        CHECK(res.bound_star >= s - 1e-9);
        CHECK(res.bound_star <= qfi_bound(f, 2) + 1e-12);
        CHECK(gamma_bound(lambda, res.gamma_star, f, 2) ==
              doctest::Approx(res.bound_star).epsilon(1e-12));
    }
}

TEST_CASE("gradient descent agrees with golden section on d=2") {
    Rng rng(63);
    for (int trial = 0; trial < 25; ++trial) {
        const double l1 = 0.02 + 0.96 * rng.uniform();
        const double f = rng.uniform();
        const ProbabilityVector lambda({l1, 1.0 - l1});
        const OptimizationResult pgd = optimize_gamma(lambda, f, 2);
        const OptimizationResult gold = golden_section_gamma1(lambda, f);
        CHECK(std::abs(pgd.bound_star - gold.bound_star) < 1e-7);
        CHECK(gold.gamma_star[0] >= 1e-9);
        CHECK(gold.gamma_star[0] <= 1.0 - 1e-9);
    }
}

TEST_CASE("objective trace decreases monotonically") {
    std::vector<double> trace;
    optimize_gamma(ProbabilityVector({0.15, 0.85}), 0.6, 2, 1e-10, 10000, &trace);
    REQUIRE(trace.size() >= 2);
    for (size_t k = 1; k < trace.size(); ++k) {
        CHECK(trace[k] <= trace[k - 1] + 1e-15);
    }
}

TEST_CASE("three-level optimization stays feasible and below the qfi bound") {
    const ProbabilityVector lambda({0.2, 0.3, 0.5});
    const OptimizationResult res = optimize_gamma(lambda, 0.6, 3);
    CHECK(res.converged);
    CHECK(res.iterations <= 10000);
    double sum = 0.0;
    for (int k = 0; k < 3; ++k) {
        CHECK(res.gamma_star[k] >= 1e-9);
        sum += res.gamma_star[k];
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(res.bound_star <= qfi_bound(0.6, 3) + 1e-12);
    CHECK(gamma_bound(lambda, res.gamma_star, 0.6, 3) ==
          doctest::Approx(res.bound_star).epsilon(1e-12));
}

TEST_CASE("optimizer input validation") {
    CHECK_THROWS_AS(optimize_gamma(ProbabilityVector({0.5, 0.5}), 1.5, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(optimize_gamma(ProbabilityVector({0.5, 0.5}), 0.5, 3),
                    std::invalid_argument);
}

TEST_CASE("joint gamma-xi descent can only tighten the gamma-only bound") {
    for (double f : {0.3, 0.7}) {
        const ProbabilityVector lambda({0.25, 0.75});
        const OptimizationResult gamma_only = optimize_gamma(lambda, f, 2);
        const JointOptimizationResult joint = optimize_gamma_xi(lambda, f);
        CHECK(joint.bound_star <= gamma_only.bound_star + 1e-7);
        CHECK(joint.rounds <= 50);
        for (int k = 0; k < 2; ++k) {
            CHECK(joint.gamma_star[k] >= 1e-9);
            CHECK(joint.xi_star[k] >= 1e-9);
        }
        CHECK(ineq3_bound(lambda, joint.gamma_star, joint.xi_star, f) ==
              doctest::Approx(joint.bound_star).epsilon(1e-10));
    }
}
