#include "qfano/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "qfano/bounds.hpp"
#include "qfano/rng.hpp"

namespace qfano {

namespace {

constexpr double kInteriorFloor = 1e-9;
constexpr uint64_t kMultistartSeed = 271828;
constexpr int kMultistarts = 5;

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

struct PgdRun {
    ProbabilityVector x;
    double value;
    int iterations;
    bool converged;
};

using Objective = std::function<double(const ProbabilityVector&)>;
using Gradient = std::function<std::vector<double>(const ProbabilityVector&)>;

PgdRun projected_gradient(const Objective& obj, const Gradient& grad, ProbabilityVector start,
                          double tol, int max_iter, std::vector<double>* trace) {
    ProbabilityVector x = std::move(start);
    double fx = obj(x);
    if (!std::isfinite(fx)) {
        throw std::invalid_argument("optimizer: objective not finite at the starting point");
    }
    if (trace) trace->push_back(fx);

    int it = 0;
    bool converged = false;
    while (it < max_iter) {
        const std::vector<double> g = grad(x);
        double step = 0.1;
        bool improved = false;
        ProbabilityVector cand = x;
        double fc = fx;
        while (step > 1e-18) {
            std::vector<double> moved = x.weights();
            for (size_t j = 0; j < moved.size(); ++j) moved[j] -= step * g[j];
            ProbabilityVector c = project_to_simplex(moved);
            const double v = obj(c);
            if (v < fx) {
                cand = c;
                fc = v;
                improved = true;
                break;
            }
            step *= 0.5;
        }
        ++it;
        if (!improved) {
            converged = true;
            break;
        }
        const double decrease = fx - fc;
        x = cand;
        fx = fc;
        if (trace) trace->push_back(fx);
        if (decrease < tol) {
            converged = true;
            break;
        }
    }
    return {x, fx, it, converged};
}

ProbabilityVector random_interior_point(Rng rng, int d) {
    std::vector<double> v(static_cast<size_t>(d));
    for (double& e : v) {
        double u = rng.uniform();
        if (u <= 0.0) u = 0x1.0p-53;
        e = -std::log(u);
    }
    double sum = 0.0;
    for (double e : v) sum += e;
    for (double& e : v) e /= sum;
    return project_to_simplex(v);
}

}  // namespace

ProbabilityVector project_to_simplex(const std::vector<double>& v) {
    require(!v.empty(), "project_to_simplex: empty vector");
    for (double e : v) require(std::isfinite(e), "project_to_simplex: non-finite entry");

    std::vector<double> u = v;
    std::sort(u.begin(), u.end(), std::greater<double>());
    double cum = 0.0;
    double theta = 0.0;
    for (size_t k = 0; k < u.size(); ++k) {
        cum += u[k];
        const double t = (cum - 1.0) / static_cast<double>(k + 1);
        if (u[k] - t > 0.0) theta = t;
    }

    std::vector<double> w(v.size());
    double sum = 0.0;
    for (size_t j = 0; j < v.size(); ++j) {
        w[j] = std::max(v[j] - theta, kInteriorFloor);
        sum += w[j];
    }
    for (double& e : w) e = std::max(e / sum, kInteriorFloor);
    return ProbabilityVector(std::move(w));
}

std::vector<double> gamma_bound_gradient(const ProbabilityVector& lambda,
                                         const ProbabilityVector& gamma, double f, int d) {
    require(lambda.size() == d && gamma.size() == d, "gamma_bound_gradient: dimension mismatch");
    const double dd = static_cast<double>(d);
    double s = 0.0;
    for (int k = 0; k < d; ++k) s += lambda[k] * gamma[k];
    std::vector<double> out(static_cast<size_t>(d));
    for (int j = 0; j < d; ++j) {
        const double lj = lambda[j];
        out[static_cast<size_t>(j)] =
            lj / s + (1.0 - f) * lj * (-dd / (s * s)) / (dd / s - 1.0) - lj / gamma[j];
    }
    return out;
}

OptimizationResult optimize_gamma(const ProbabilityVector& lambda, double f, int d, double tol,
                                  int max_iter, std::vector<double>* objective_trace) {
    require(lambda.size() == d, "optimize_gamma: lambda length must equal d");
    require(d >= 2, "optimize_gamma: d must be >= 2");
    require(f >= 0.0 && f <= 1.0, "optimize_gamma: f outside [0,1]");
    require(tol > 0.0 && max_iter >= 1, "optimize_gamma: bad tol or maxIter");

    const Objective obj = [&](const ProbabilityVector& g) {
        return gamma_bound(lambda, g, f, d);
    };
    const Gradient grad = [&](const ProbabilityVector& g) {
        return gamma_bound_gradient(lambda, g, f, d);
    };

    PgdRun best =
        projected_gradient(obj, grad, ProbabilityVector::uniform(d), tol, max_iter, objective_trace);
    if (d >= 3) {
        Rng rng(kMultistartSeed);
        for (int i = 0; i < kMultistarts; ++i) {
            PgdRun run = projected_gradient(
                obj, grad, random_interior_point(rng.stream(static_cast<uint64_t>(i)), d), tol,
                max_iter, nullptr);
            if (run.value < best.value) best = run;
        }
    }
    return {best.x, best.value, best.iterations, best.converged};
}

OptimizationResult golden_section_gamma1(const ProbabilityVector& lambda, double f, double tol) {
    require(lambda.size() == 2, "golden_section_gamma1: lambda must have length 2");
    require(f >= 0.0 && f <= 1.0, "golden_section_gamma1: f outside [0,1]");
    require(tol > 0.0, "golden_section_gamma1: tol must be positive");

    const auto phi = [&](double g1) {
        return gamma_bound(lambda, ProbabilityVector({g1, 1.0 - g1}), f, 2);
    };

    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = kInteriorFloor;
    double b = 1.0 - kInteriorFloor;
    double c = b - invphi * (b - a);
    double e = a + invphi * (b - a);
    double fc = phi(c);
    double fe = phi(e);

    int it = 0;
    while (b - a > tol && it < 200) {
        ++it;
        if (fc < fe) {
            b = e;
            e = c;
            fe = fc;
            c = b - invphi * (b - a);
            fc = phi(c);
        } else {
            a = c;
            c = e;
            fc = fe;
            e = a + invphi * (b - a);
            fe = phi(e);
        }
    }
    const double g1 = 0.5 * (a + b);
    return {ProbabilityVector({g1, 1.0 - g1}), phi(g1), it, b - a <= tol};
}

JointOptimizationResult optimize_gamma_xi(const ProbabilityVector& lambda, double f, double tol,
                                          int max_rounds) {
    const int d = lambda.size();
    require(d >= 2, "optimize_gamma_xi: need d >= 2");
    require(f >= 0.0 && f <= 1.0, "optimize_gamma_xi: f outside [0,1]");
    require(tol > 0.0 && max_rounds >= 1, "optimize_gamma_xi: bad tol or maxRounds");

    ProbabilityVector gamma = ProbabilityVector::uniform(d);
    ProbabilityVector xi = ProbabilityVector::uniform(d);
    double value = ineq3_bound(lambda, gamma, xi, f);

    int rounds = 0;
    bool converged = false;
    while (rounds < max_rounds) {
        const Objective obj_gamma = [&](const ProbabilityVector& g) {
            return ineq3_bound(lambda, g, xi, f);
        };
        const Gradient grad_gamma = [&](const ProbabilityVector& g) {
            double t = 0.0;
            for (int k = 0; k < d; ++k) t += lambda[k] * g[k] * xi[k];
            std::vector<double> out(static_cast<size_t>(d));
            for (int j = 0; j < d; ++j) {
                const double lx = lambda[j] * xi[j];
                out[static_cast<size_t>(j)] =
                    lx / t - (1.0 - f) * lx / (t * (1.0 - t)) - lambda[j] / g[j];
            }
            return out;
        };
        gamma = projected_gradient(obj_gamma, grad_gamma, gamma, tol, 10000, nullptr).x;

        const Objective obj_xi = [&](const ProbabilityVector& x) {
            return ineq3_bound(lambda, gamma, x, f);
        };
        const Gradient grad_xi = [&](const ProbabilityVector& x) {
            double t = 0.0;
            int min_idx = 0;
            for (int k = 0; k < d; ++k) {
                t += lambda[k] * gamma[k] * x[k];
                if (x[k] < x[min_idx]) min_idx = k;
            }
            std::vector<double> out(static_cast<size_t>(d));
            for (int j = 0; j < d; ++j) {
                const double lg = lambda[j] * gamma[j];
                double e = lg / t - (1.0 - f) * lg / (t * (1.0 - t));
                if (j == min_idx) e -= 1.0 / x[min_idx];
                out[static_cast<size_t>(j)] = e;
            }
            return out;
        };
        const PgdRun xi_run = projected_gradient(obj_xi, grad_xi, xi, tol, 10000, nullptr);
        xi = xi_run.x;

        ++rounds;
        if (value - xi_run.value < tol) {
            value = std::min(value, xi_run.value);
            converged = true;
            break;
        }
        value = xi_run.value;
    }
    return {gamma, xi, value, rounds, converged};
}

}  // namespace qfano
