#include "stablab/numerics/rk.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stablab::num {

namespace {

void rk4_step(const OdeRhs& rhs, double t, std::span<const double> y, double h,
              std::vector<double>& out, std::vector<double>& k1, std::vector<double>& k2,
              std::vector<double>& k3, std::vector<double>& k4, std::vector<double>& tmp) {
    const std::size_t n = y.size();
    rhs(t, y, k1);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
    rhs(t + 0.5 * h, tmp, k2);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
    rhs(t + 0.5 * h, tmp, k3);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * k3[i];
    rhs(t + h, tmp, k4);
    out.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = y[i] + (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

bool all_finite(std::span<const double> v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

}  // namespace

OdeTrajectory rk_integrate(const OdeRhs& rhs, std::span<const double> y0,
                           double tau0, double tau1, const RkOptions& opts) {
    if (!(tau1 > tau0)) throw std::invalid_argument("rk_integrate: need tau1 > tau0");
    const std::size_t n = y0.size();
    OdeTrajectory traj;
    traj.tau.push_back(tau0);
    traj.states.emplace_back(y0.begin(), y0.end());

    std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);
    std::vector<double> y(y0.begin(), y0.end());
    std::vector<double> y_full(n), y_half(n), y_two(n);

    double h = opts.h0 > 0.0 ? opts.h0 : (tau1 - tau0) / 256.0;
    if (opts.h_max > 0.0) h = std::min(h, opts.h_max);
    double t = tau0;

    const bool adaptive = opts.tol > 0.0;
    while (t < tau1) {
        h = std::min(h, tau1 - t);
        if (!adaptive) {
            rk4_step(rhs, t, y, h, y_full, k1, k2, k3, k4, tmp);
            if (!all_finite(y_full)) {
                traj.failure = "non-finite state during fixed-step integration";
                return traj;
            }
            y.swap(y_full);
            t += h;
        } else {
            // Step doubling: one full step vs two half steps; RK4 local error
            // is recovered from the difference with factor 1/15.
            rk4_step(rhs, t, y, h, y_full, k1, k2, k3, k4, tmp);
            rk4_step(rhs, t, y, 0.5 * h, y_half, k1, k2, k3, k4, tmp);
            rk4_step(rhs, t + 0.5 * h, y_half, 0.5 * h, y_two, k1, k2, k3, k4, tmp);

            double err = 0.0;
            bool finite = all_finite(y_full) && all_finite(y_two);
            if (finite) {
                for (std::size_t i = 0; i < n; ++i) {
                    const double scale = 1.0 + std::abs(y[i]);
                    err = std::max(err, std::abs(y_two[i] - y_full[i]) / (15.0 * scale));
                }
            }
            if (finite && err <= opts.tol) {
                y.swap(y_two);
                t += h;
            } else {
                if (h <= opts.h_min) {
                    traj.failure = "step underflow at tau=" + std::to_string(t);
                    return traj;
                }
                double shrink = finite ? 0.9 * std::pow(opts.tol / err, 0.2) : 0.25;
                h = std::max(opts.h_min, h * std::clamp(shrink, 0.1, 0.9));
                continue;
            }
            // Grow the step for the next attempt.
            if (err > 0.0) {
                double grow = 0.9 * std::pow(opts.tol / err, 0.2);
                h *= std::clamp(grow, 0.2, 5.0);
            } else {
                h *= 5.0;
            }
            if (opts.h_max > 0.0) h = std::min(h, opts.h_max);
            h = std::max(h, opts.h_min);
        }

        traj.tau.push_back(t);
        traj.states.push_back(y);
        if (opts.stop && opts.stop(t, y)) {
            traj.stopped = true;
            return traj;
        }
    }
    traj.completed = true;
    return traj;
}

}  // namespace stablab::num
