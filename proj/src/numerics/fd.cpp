#include "stablab/numerics/fd.hpp"

#include <cmath>
#include <stdexcept>

namespace stablab::num {

namespace {

double checked_eval(const ScalarField& f, std::span<const double> x) {
    const double v = f(x);
    if (!std::isfinite(v))
        throw EvaluationError("fd: non-finite field value in stencil",
                              std::vector<double>(x.begin(), x.end()));
    return v;
}

}  // namespace

double fd_derivative(const ScalarField& f, double x, int order, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("fd_derivative: need h > 0");
    const double xm[1] = {x - h}, x0[1] = {x}, xp[1] = {x + h};
    switch (order) {
        case 1:
            return (checked_eval(f, xp) - checked_eval(f, xm)) / (2.0 * h);
        case 2:
            return (checked_eval(f, xp) - 2.0 * checked_eval(f, x0) + checked_eval(f, xm)) /
                   (h * h);
        default:
            throw std::invalid_argument("fd_derivative: order must be 1 or 2");
    }
}

std::vector<double> fd_gradient(const ScalarField& f, std::span<const double> x, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("fd_gradient: need h > 0");
    const std::size_t n = x.size();
    std::vector<double> g(n), p(x.begin(), x.end());
    for (std::size_t i = 0; i < n; ++i) {
        const double xi = p[i];
        p[i] = xi + h;
        const double fp = checked_eval(f, p);
        p[i] = xi - h;
        const double fm = checked_eval(f, p);
        p[i] = xi;
        g[i] = (fp - fm) / (2.0 * h);
    }
    return g;
}

std::vector<double> fd_hessian(const ScalarField& f, std::span<const double> x, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("fd_hessian: need h > 0");
    const std::size_t n = x.size();
    std::vector<double> hess(n * n, 0.0), p(x.begin(), x.end());
    const double f0 = checked_eval(f, p);
    for (std::size_t i = 0; i < n; ++i) {
        const double xi = p[i];
        p[i] = xi + h;
        const double fp = checked_eval(f, p);
        p[i] = xi - h;
        const double fm = checked_eval(f, p);
        p[i] = xi;
        hess[i * n + i] = (fp - 2.0 * f0 + fm) / (h * h);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double xi = p[i], xj = p[j];
            p[i] = xi + h; p[j] = xj + h;
            const double fpp = checked_eval(f, p);
            p[j] = xj - h;
            const double fpm = checked_eval(f, p);
            p[i] = xi - h; p[j] = xj + h;
            const double fmp = checked_eval(f, p);
            p[j] = xj - h;
            const double fmm = checked_eval(f, p);
            p[i] = xi; p[j] = xj;
            // Mixed stencil is already symmetric in (i, j); store both halves.
            const double v = (fpp - fpm - fmp + fmm) / (4.0 * h * h);
            hess[i * n + j] = v;
            hess[j * n + i] = v;
        }
    }
    return hess;
}

}  // namespace stablab::num
