#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qfano/bounds.hpp"
#include "qfano/errors.hpp"
#include "qfano/rng.hpp"

using namespace qfano;

namespace {

const double kLn4 = std::log(4.0);

struct Instance {
    ProbabilityVector lambda;
    KrausChannel ch;
    PureState psi;
    DensityMatrix joint;
    double f;
    double s;
};

Instance make_instance(const ProbabilityVector& lambda, const KrausChannel& ch) {
    const PureState psi = purify(lambda);
    DensityMatrix joint = extend_to_joint(ch, psi);
    const double f = entanglement_fidelity(psi, joint);
    const double s = entropy_exchange(joint);
    return Instance{lambda, ch, psi, std::move(joint), f, s};
}

// F = sum_i |Tr(rho E_i)|^2 for a purification of rho; the closed route the
// projector-overlap computation is checked against.
double fidelity_from_kraus(const KrausChannel& ch, const ComplexMatrix& rho) {
    double f = 0.0;
    for (const ComplexMatrix& e : ch.operators()) {
        f += std::norm((rho * e).trace());
    }
    return f;
}

}  // namespace

TEST_CASE("entanglement fidelity fixed channels") {
    const Instance ident = make_instance(ProbabilityVector({0.3, 0.7}), KrausChannel::identity(2));
    CHECK(ident.f == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ident.s == doctest::Approx(0.0).epsilon(1e-9));

    const Instance worst =
        make_instance(ProbabilityVector({0.5, 0.5}), depolarizing_channel(1.0));
    CHECK(worst.f == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(worst.s == doctest::Approx(kLn4).epsilon(1e-9));
}

TEST_CASE("entanglement fidelity matches the Kraus trace formula") {
    Rng rng(51);
    for (int trial = 0; trial < 20; ++trial) {
        const int d = 2 + static_cast<int>(rng.next_u64() % 2);
        std::vector<double> w(static_cast<size_t>(d));
        double sum = 0.0;
        for (double& x : w) {
            x = 0.05 + rng.uniform();
            sum += x;
        }
        for (double& x : w) x /= sum;
        const ProbabilityVector lambda(w);
        const KrausChannel ch =
            random_channel(rng.next_u64(), d, 1 + static_cast<int>(rng.next_u64() % (d * d)));
        const ComplexMatrix u = random_unitary(rng.next_u64(), d);

        const PureState psi = rotate_system(purify(lambda), u);
        const DensityMatrix joint = extend_to_joint(ch, psi);
        const double f = entanglement_fidelity(psi, joint);
        CHECK(f >= 0.0);
        CHECK(f <= 1.0);

        const ComplexMatrix rho_q =
            u * ComplexMatrix::diagonal(lambda.weights()) * u.adjoint();
        CHECK(f == doctest::Approx(fidelity_from_kraus(ch, rho_q)).epsilon(1e-11));
    }
}

TEST_CASE("kraus overlap matrix carries the entropy exchange") {
    Rng rng(52);
    for (int trial = 0; trial < 10; ++trial) {
        const Instance inst = make_instance(
            ProbabilityVector({0.2, 0.8}),
            random_channel(rng.next_u64(), 2, 1 + static_cast<int>(rng.next_u64() % 4)));
        const ComplexMatrix w = kraus_overlap_matrix(
            inst.ch, DensityMatrix(ComplexMatrix::diagonal(inst.lambda.weights())));
        CHECK(w.is_hermitian(1e-10));
        CHECK(std::abs(w.trace() - Complex(1, 0)) < 1e-10);
        CHECK(von_neumann_entropy(DensityMatrix(w)) == doctest::Approx(inst.s).epsilon(1e-9));
    }
}

TEST_CASE("qfi bound fixed values") {
    CHECK(qfi_bound(1.0, 2) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(qfi_bound(0.25, 2) == doctest::Approx(kLn4).epsilon(1e-14));
    CHECK(qfi_bound(0.0, 2) == doctest::Approx(std::log(3.0)).epsilon(1e-14));
    CHECK_THROWS_AS(qfi_bound(1.2, 2), std::invalid_argument);
    CHECK_THROWS_AS(qfi_bound(0.5, 1), std::invalid_argument);
}

TEST_CASE("parametrized bounds at hand-checked points") {
    const ProbabilityVector lambda({0.3, 0.7});
    const ProbabilityVector gamma({0.4, 0.6});
    const ProbabilityVector xi({0.2, 0.8});

    CHECK(gamma_bound(lambda, gamma, 0.9, 2) ==
          doctest::Approx(0.44082424768047745).epsilon(1e-13));
    CHECK(ineq3_bound(lambda, gamma, xi, 0.9) ==
          doctest::Approx(1.6028712089823633).epsilon(1e-13));
    CHECK(beta_bound_max(0.9, 0.4, 2) == doctest::Approx(1.0587766647622101).epsilon(1e-13));
    CHECK(beta_bound_min(0.9, 0.4) == doctest::Approx(0.36562948420226465).epsilon(1e-13));

    CHECK(gamma_bound(ProbabilityVector({1.0, 0.0}), ProbabilityVector({0.9, 0.1}), 1.0, 2) ==
          doctest::Approx(0.0).epsilon(1e-13));
}

TEST_CASE("zero gamma against positive lambda pushes the bounds to infinity") {
    const ProbabilityVector lambda({0.5, 0.5});
    const ProbabilityVector gamma({1.0, 0.0});
    CHECK(std::isinf(gamma_bound(lambda, gamma, 0.8, 2)));
    CHECK(std::isinf(ineq2_bound(lambda, gamma, DensityMatrix(ComplexMatrix::diagonal({0.5, 0.5})),
                                 0.8,
                                 DensityMatrix(ComplexMatrix::diagonal({0.5, 0.5})))));
}

TEST_CASE("domain validation on the parametrized bounds") {
    const ProbabilityVector lambda({0.3, 0.7});
    const ProbabilityVector gamma({0.4, 0.6});
    CHECK_THROWS_AS(ineq3_bound(lambda, gamma, ProbabilityVector({1.0, 0.0}), 0.9),
                    std::invalid_argument);
    CHECK_THROWS_AS(beta_bound_max(0.9, 0.1, 2), std::invalid_argument);
    CHECK_THROWS_AS(beta_bound_max(0.9, 1.0, 2), std::invalid_argument);
    CHECK_THROWS_AS(beta_bound_min(0.9, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(beta_bound_min(0.9, 1.0), std::invalid_argument);
}

TEST_CASE("uniform parameters collapse every extension to the qfi bound") {
    for (int d : {2, 3}) {
        const ProbabilityVector u = ProbabilityVector::uniform(d);
        std::vector<double> w(static_cast<size_t>(d), 0.0);
        w[0] = 0.6;
        w[static_cast<size_t>(d) - 1] = 0.4;
        const ProbabilityVector lambda(w);
        for (double f : {0.0, 0.3, 0.65, 1.0}) {
            const double qfi = qfi_bound(f, d);
            CHECK(gamma_bound(lambda, u, f, d) == doctest::Approx(qfi).epsilon(1e-12));
            CHECK(ineq3_bound(lambda, u, u, f) == doctest::Approx(qfi).epsilon(1e-12));
            CHECK(beta_bound_max(f, 1.0 / (d * d), d) == doctest::Approx(qfi).epsilon(1e-12));
            CHECK(beta_bound_min(f, 1.0 / (d * d)) == doctest::Approx(qfi).epsilon(1e-12));
        }
    }
}

TEST_CASE("general bound at the maximally mixed comparison state is the qfi bound") {
    Rng rng(53);
    const Instance inst = make_instance(ProbabilityVector({0.2, 0.8}),
                                        random_channel(rng.next_u64(), 2, 3));
    const DensityMatrix mixed(Complex(0.25, 0) * ComplexMatrix::identity(4));
    CHECK(general_bound(inst.psi, inst.joint, mixed) ==
          doctest::Approx(qfi_bound(inst.f, 2)).epsilon(1e-10));
    CHECK(general_bound(inst.psi, inst.joint, mixed) >= inst.s - 1e-9);
}

TEST_CASE("general bound rejects a singular comparison state") {
    const Instance inst =
        make_instance(ProbabilityVector({0.3, 0.7}), depolarizing_channel(0.2));
    const DensityMatrix singular(purify(ProbabilityVector({0.3, 0.7})).projector());
    CHECK_THROWS_AS(general_bound(inst.psi, inst.joint, singular), std::invalid_argument);
}

TEST_CASE("general bound at a product comparison state reduces to ineq2") {
    Rng rng(54);
    for (int trial = 0; trial < 10; ++trial) {
        const ProbabilityVector lambda({0.3, 0.7});
        const KrausChannel ch =
            random_channel(rng.next_u64(), 2, 1 + static_cast<int>(rng.next_u64() % 4));
        const Instance inst = make_instance(lambda, ch);
        const ProbabilityVector gamma({0.4, 0.6});
        const DensityMatrix rho_q2 = random_density(rng.next_u64(), 2);
        const DensityMatrix e_of_rho =
            apply_channel(ch, DensityMatrix(ComplexMatrix::diagonal(lambda.weights())));

        const double i1 = general_bound(inst.psi, inst.joint, product_ancilla(gamma, rho_q2));
        const double i2 = ineq2_bound(lambda, gamma, rho_q2, inst.f, e_of_rho);
        CHECK(i1 == doctest::Approx(i2).epsilon(1e-10));
    }
}

TEST_CASE("product ancilla is diag(gamma) tensor rhoQ2") {
    const DensityMatrix rho_q2(ComplexMatrix::diagonal({0.25, 0.75}));
    const DensityMatrix prod = product_ancilla(ProbabilityVector({0.4, 0.6}), rho_q2);
    const ComplexMatrix expect =
        tensor_product(ComplexMatrix::diagonal({0.4, 0.6}), rho_q2.mat());
    CHECK(prod.mat().max_abs_diff(expect) < 1e-14);
}

TEST_CASE("full report on the depolarizing example") {
    const BoundReport r =
        full_report(ProbabilityVector({0.1, 0.9}), depolarizing_channel(0.5),
                    ProbabilityVector::uniform(2), ProbabilityVector::uniform(2),
                    DensityMatrix(ComplexMatrix::diagonal({0.5, 0.5})));

    CHECK(r.fidelity == doctest::Approx(0.705).epsilon(1e-12));
    CHECK(r.entropy_exchange == doctest::Approx(0.7985853733804078).epsilon(1e-10));
    CHECK(r.qfi == doctest::Approx(0.93065872303633346).epsilon(1e-12));
    CHECK(r.ineq1 == doctest::Approx(r.qfi).epsilon(1e-9));
    CHECK(r.ineq2 == doctest::Approx(r.qfi).epsilon(1e-9));
    CHECK(r.ineq3 == doctest::Approx(r.qfi).epsilon(1e-10));
    CHECK(r.ineq4 == doctest::Approx(r.qfi).epsilon(1e-10));
    CHECK(r.beta_max_bound == doctest::Approx(r.qfi).epsilon(1e-10));
    CHECK(r.beta_min_bound == doctest::Approx(r.qfi).epsilon(1e-10));
    CHECK(r.parameters.beta_max == doctest::Approx(0.25));
    CHECK(r.parameters.gamma[0] == 0.5);
}

TEST_CASE("full report honors explicit parameters") {
    const ProbabilityVector lambda({0.3, 0.7});
    const ProbabilityVector gamma({0.4, 0.6});
    const ProbabilityVector xi({0.2, 0.8});
    const DensityMatrix rho_q2(ComplexMatrix::diagonal({0.2, 0.8}));
    const BoundReport r = full_report(lambda, depolarizing_channel(0.3), gamma, xi, rho_q2);

    CHECK(r.ineq4 == doctest::Approx(gamma_bound(lambda, gamma, r.fidelity, 2)).epsilon(1e-13));
    CHECK(r.ineq3 == doctest::Approx(ineq3_bound(lambda, gamma, xi, r.fidelity)).epsilon(1e-13));
    CHECK(r.entropy_exchange <= r.ineq1 + 1e-9);
    CHECK(r.entropy_exchange <= r.ineq2 + 1e-9);
    CHECK(r.entropy_exchange <= r.ineq3 + 1e-9);
    CHECK(r.entropy_exchange <= r.ineq4 + 1e-9);
    CHECK(r.entropy_exchange <= r.qfi + 1e-9);
}
