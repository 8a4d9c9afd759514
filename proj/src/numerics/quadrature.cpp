#include "stablab/numerics/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace stablab::num {

double trapezoid(const Mesh1D& mesh, std::span<const double> values) {
    const auto& x = mesh.nodes();
    if (values.size() != x.size())
        throw std::invalid_argument("trapezoid: values/mesh size mismatch");
    double sum = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) {
        if (!std::isfinite(values[i]) || !std::isfinite(values[i - 1]))
            throw std::domain_error("trapezoid: non-finite integrand value");
        sum += 0.5 * (values[i] + values[i - 1]) * (x[i] - x[i - 1]);
    }
    return sum;
}

double trapezoid(const Mesh1D& mesh, const std::function<double(double)>& f,
                 const std::function<double(double)>& weight) {
    const auto& x = mesh.nodes();
    std::vector<double> v(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        v[i] = f(x[i]);
        if (weight) v[i] *= weight(x[i]);
    }
    return trapezoid(mesh, v);
}

double cell_integral(const Grid2D& grid, std::span<const double> values) {
    if (values.size() != grid.ns() * grid.nt())
        throw std::invalid_argument("cell_integral: values/grid size mismatch");
    if (grid.active_count() == 0) throw std::domain_error("cell_integral: empty mask");
    const double cell = grid.hs() * grid.ht();
    double sum = 0.0;
    for (std::size_t j = 0; j + 1 < grid.nt(); ++j) {
        for (std::size_t i = 0; i + 1 < grid.ns(); ++i) {
            if (!grid.active(i, j) || !grid.active(i + 1, j) || !grid.active(i, j + 1) ||
                !grid.active(i + 1, j + 1))
                continue;
            const double mean = 0.25 * (values[grid.index(i, j)] + values[grid.index(i + 1, j)] +
                                        values[grid.index(i, j + 1)] +
                                        values[grid.index(i + 1, j + 1)]);
            sum += cell * mean;
        }
    }
    return sum;
}

void gauss_legendre(double a, double b, int npts, std::span<double> x, std::span<double> w) {
    // Nodes/weights on [-1, 1], mapped affinely to [a, b].
    static const double n4x[] = {-0.8611363115940526, -0.3399810435848563,
                                 0.3399810435848563, 0.8611363115940526};
    static const double n4w[] = {0.3478548451374538, 0.6521451548625461,
                                 0.6521451548625461, 0.3478548451374538};
    static const double n6x[] = {-0.9324695142031521, -0.6612093864662645, -0.2386191860831969,
                                 0.2386191860831969, 0.6612093864662645, 0.9324695142031521};
    static const double n6w[] = {0.1713244923791704, 0.3607615730481386, 0.4679139345726910,
                                 0.4679139345726910, 0.3607615730481386, 0.1713244923791704};
    static const double n8x[] = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                                 -0.1834346424956498, 0.1834346424956498, 0.5255324099163290,
                                 0.7966664774136267, 0.9602898564975363};
    static const double n8w[] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                                 0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                                 0.2223810344533745, 0.1012285362903763};
    const double* nx = nullptr;
    const double* nw = nullptr;
    switch (npts) {
        case 4: nx = n4x; nw = n4w; break;
        case 6: nx = n6x; nw = n6w; break;
        case 8: nx = n8x; nw = n8w; break;
        default: throw std::invalid_argument("gauss_legendre: npts must be 4, 6 or 8");
    }
    if (x.size() < static_cast<std::size_t>(npts) || w.size() < static_cast<std::size_t>(npts))
        throw std::invalid_argument("gauss_legendre: output spans too small");
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < npts; ++i) {
        x[i] = mid + half * nx[i];
        w[i] = half * nw[i];
    }
}

}  // namespace stablab::num
