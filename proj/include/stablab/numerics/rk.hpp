#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace stablab::num {

/// Right-hand side of y' = rhs(tau, y); writes into dy.
using OdeRhs = std::function<void(double, std::span<const double>, std::span<double>)>;

/// Predicate evaluated after each accepted step; returning true stops the integration.
using OdeStop = std::function<bool(double, std::span<const double>)>;

struct OdeTrajectory {
    std::vector<double> tau;                  ///< accepted step times, including the start
    std::vector<std::vector<double>> states;  ///< state at each accepted step
    bool completed = false;                   ///< reached the end of the span
    bool stopped = false;                     ///< stop predicate fired
    std::string failure;                      ///< nonempty on step underflow

    const std::vector<double>& back_state() const { return states.back(); }
};

struct RkOptions {
    double tol = 0.0;        ///< 0 selects fixed-step mode
    double h0 = 0.0;         ///< initial (or fixed) step; 0 picks span/256
    double h_min = 1e-14;    ///< adaptive mode fails below this step
    double h_max = 0.0;      ///< cap on the step size; 0 means no cap
    OdeStop stop;            ///< optional termination predicate
};

/// Classical RK4. Fixed steps when opts.tol == 0, otherwise step-doubling
/// adaptive control keeping the per-step error estimate below opts.tol.
/// All accepted steps are recorded.
OdeTrajectory rk_integrate(const OdeRhs& rhs, std::span<const double> y0,
                           double tau0, double tau1, const RkOptions& opts = {});

}  // namespace stablab::num
