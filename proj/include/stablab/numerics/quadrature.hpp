#pragma once

#include <functional>
#include <span>

#include "stablab/numerics/mesh.hpp"

namespace stablab::num {

/// Composite trapezoid of nodal values over the mesh.
double trapezoid(const Mesh1D& mesh, std::span<const double> values);

/// Composite trapezoid of f, with an optional pointwise node weight.
double trapezoid(const Mesh1D& mesh, const std::function<double(double)>& f,
                 const std::function<double(double)>& weight = nullptr);

/// Bilinear cell rule over all cells whose four corners are active:
/// each cell contributes hs*ht times the mean of its corner values.
double cell_integral(const Grid2D& grid, std::span<const double> values);

/// Gauss-Legendre nodes/weights on [a, b] (npts in {2..8}).
void gauss_legendre(double a, double b, int npts, std::span<double> x, std::span<double> w);

}  // namespace stablab::num
