#pragma once

#include <functional>
#include <span>
#include <vector>

namespace stablab::num {

using ScalarField = std::function<double(std::span<const double>)>;

/// Thrown when a stencil evaluation hits a non-finite field value.
struct EvaluationError : std::runtime_error {
    explicit EvaluationError(const std::string& what, std::vector<double> where)
        : std::runtime_error(what), point(std::move(where)) {}
    std::vector<double> point;
};

/// Central difference df/dx, O(h^2).
double fd_derivative(const ScalarField& f, double x, int order, double h);

/// Central-difference gradient, O(h^2) per component.
std::vector<double> fd_gradient(const ScalarField& f, std::span<const double> x, double h);

/// Central-difference Hessian, symmetrized, O(h^2); row-major dim x dim.
std::vector<double> fd_hessian(const ScalarField& f, std::span<const double> x, double h);

}  // namespace stablab::num
