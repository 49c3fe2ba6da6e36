#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qfano/bounds.hpp"
#include "qfano/quantum.hpp"
#include "qfano/sweep.hpp"

using namespace qfano;

TEST_CASE("closed-form fidelity fixed values") {
    CHECK(depol_fidelity_closed(0.0, 0.3) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(depol_fidelity_closed(1.0, 0.5) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(depol_fidelity_closed(0.5, 0.1) == doctest::Approx(0.705).epsilon(1e-14));
    CHECK(depol_fidelity_closed(0.7, 0.2) ==
          doctest::Approx(depol_fidelity_closed(0.7, 0.8)).epsilon(1e-14));
    CHECK_THROWS_AS(depol_fidelity_closed(1.2, 0.3), std::invalid_argument);
}

TEST_CASE("closed-form entropy fixed values") {
    CHECK(depol_entropy_closed(0.0, 0.3) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(depol_entropy_closed(1.0, 0.5) == doctest::Approx(std::log(4.0)).epsilon(1e-12));
    CHECK(depol_entropy_closed(0.5, 0.1) ==
          doctest::Approx(0.7985853733804078).epsilon(1e-13));
    CHECK(depol_entropy_closed(0.3, 0.25) ==
          doctest::Approx(depol_entropy_closed(0.3, 0.75)).epsilon(1e-13));
    CHECK_THROWS_AS(depol_entropy_closed(0.5, -0.1), std::invalid_argument);
}

TEST_CASE("closed forms track the simulated channel") {
    for (double p : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        for (double lam : {0.1, 0.5, 0.9}) {
            const PureState psi = purify(ProbabilityVector({lam, 1.0 - lam}));
            const DensityMatrix joint = extend_to_joint(depolarizing_channel(p), psi);
            CHECK(entanglement_fidelity(psi, joint) ==
                  doctest::Approx(depol_fidelity_closed(p, lam)).epsilon(1e-10));
            CHECK(entropy_exchange(joint) ==
                  doctest::Approx(depol_entropy_closed(p, lam)).epsilon(1e-9));
        }
    }
}

TEST_CASE("run_sweep grid, ordering and frozen middle row") {
    const std::vector<SweepRow> rows = run_sweep(0.1, 3, 42);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].p == 0.0);
    CHECK(rows[1].p == 0.5);
    CHECK(rows[2].p == 1.0);

    CHECK(rows[1].fidelity == doctest::Approx(0.705).epsilon(1e-10));
    CHECK(rows[1].entropy_exchange == doctest::Approx(0.7985853733804078).epsilon(1e-10));
    CHECK(rows[1].qfi == doctest::Approx(0.93065872303633346).epsilon(1e-12));
    CHECK(rows[1].ineq4_opt == doctest::Approx(0.8238338867714808).epsilon(1e-9));

    for (const SweepRow& r : rows) {
        CHECK(r.entropy_exchange <= r.ineq4_opt + 1e-9);
        CHECK(r.ineq4_opt <= r.qfi + 1e-9);
        CHECK(r.gamma1_star >= 1e-9);
        CHECK(r.gamma1_star <= 1.0 - 1e-9);
    }
}

TEST_CASE("run_sweep is deterministic in the seed") {
    const std::vector<SweepRow> a = run_sweep(0.3, 5, 7);
    const std::vector<SweepRow> b = run_sweep(0.3, 5, 7);
    REQUIRE(a.size() == b.size());
    for (size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].fidelity == b[k].fidelity);
        CHECK(a[k].entropy_exchange == b[k].entropy_exchange);
        CHECK(a[k].ineq4_opt == b[k].ineq4_opt);
        CHECK(a[k].gamma1_star == b[k].gamma1_star);
    }

    const std::vector<SweepRow> c = run_sweep(0.3, 5, 8);
    for (size_t k = 0; k < c.size(); ++k) {
        CHECK(c[k].fidelity ==
              doctest::Approx(depol_fidelity_closed(c[k].p, 0.3)).epsilon(1e-8));
    }
}

TEST_CASE("run_sweep input validation") {
    CHECK_THROWS_AS(run_sweep(1.2, 5, 42), std::invalid_argument);
    CHECK_THROWS_AS(run_sweep(0.3, 1, 42), std::invalid_argument);
}

TEST_CASE("sweep csv round-trips bit-exactly") {
    const std::vector<SweepRow> rows = run_sweep(0.2, 4, 11);
    std::ostringstream out;
    write_sweep_csv(rows, out);

    std::istringstream in(out.str());
    const std::vector<SweepRow> back = read_sweep_csv(in);
    REQUIRE(back.size() == rows.size());
    for (size_t k = 0; k < rows.size(); ++k) {
        CHECK(back[k].p == rows[k].p);
        CHECK(back[k].fidelity == rows[k].fidelity);
        CHECK(back[k].entropy_exchange == rows[k].entropy_exchange);
        CHECK(back[k].qfi == rows[k].qfi);
        CHECK(back[k].ineq4_opt == rows[k].ineq4_opt);
        CHECK(back[k].gamma1_star == rows[k].gamma1_star);
    }

    std::ostringstream again;
    write_sweep_csv(back, again);
    CHECK(again.str() == out.str());
}

TEST_CASE("sweep csv rejects malformed input") {
    std::istringstream empty("");
    CHECK_THROWS_AS(read_sweep_csv(empty), std::invalid_argument);

    std::istringstream bad_header("a,b,c\n1,2,3\n");
    CHECK_THROWS_AS(read_sweep_csv(bad_header), std::invalid_argument);

    std::istringstream short_row(
        "p,fidelity,entropy_exchange,qfi,ineq4_opt,gamma1_star\n0.5,0.7\n");
    CHECK_THROWS_AS(read_sweep_csv(short_row), std::invalid_argument);

    std::istringstream bad_cell(
        "p,fidelity,entropy_exchange,qfi,ineq4_opt,gamma1_star\n0.5,x,0.8,0.9,0.8,0.2\n");
    CHECK_THROWS_AS(read_sweep_csv(bad_cell), std::invalid_argument);
}
