#include "stablab/numerics/mesh.hpp"

#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>

namespace stablab::num {

Mesh1D::Mesh1D(std::vector<double> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.size() < 3) throw std::invalid_argument("Mesh1D: need at least 3 nodes");
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (!std::isfinite(nodes_[i]))
            throw std::invalid_argument("Mesh1D: non-finite node at index " + std::to_string(i));
        if (i > 0 && nodes_[i] <= nodes_[i - 1])
            throw std::invalid_argument("Mesh1D: nodes must be strictly increasing");
    }
}

Mesh1D Mesh1D::uniform(double a, double b, std::size_t n) {
    if (n < 3) throw std::invalid_argument("Mesh1D::uniform: need n >= 3");
    if (!(b > a)) throw std::invalid_argument("Mesh1D::uniform: need b > a");
    std::vector<double> x(n);
    const double h = (b - a) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) x[i] = a + h * static_cast<double>(i);
    x.back() = b;
    return Mesh1D(std::move(x));
}

Mesh1D Mesh1D::geometric(double a, double b, std::size_t n) {
    if (n < 3) throw std::invalid_argument("Mesh1D::geometric: need n >= 3");
    if (!(a > 0.0 && b > a)) throw std::invalid_argument("Mesh1D::geometric: need 0 < a < b");
    std::vector<double> x(n);
    const double la = std::log(a), lb = std::log(b);
    const double h = (lb - la) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) x[i] = std::exp(la + h * static_cast<double>(i));
    x.front() = a;
    x.back() = b;
    return Mesh1D(std::move(x));
}

Grid2D::Grid2D(double origin_s, double origin_t, double hs, double ht,
               std::size_t ns, std::size_t nt, std::vector<std::uint8_t> mask)
    : origin_s_(origin_s), origin_t_(origin_t), hs_(hs), ht_(ht),
      ns_(ns), nt_(nt), mask_(std::move(mask)) {
    validate();
}

void Grid2D::validate() const {
    if (!(hs_ > 0.0 && ht_ > 0.0)) throw std::invalid_argument("Grid2D: spacing must be positive");
    if (mask_.size() != ns_ * nt_) throw std::invalid_argument("Grid2D: mask size mismatch");
    std::size_t first = mask_.size();
    for (std::size_t k = 0; k < mask_.size(); ++k)
        if (mask_[k]) { first = k; break; }
    if (first == mask_.size()) throw std::invalid_argument("Grid2D: mask is empty");

    // Every active node must be reachable from the first one through active 4-neighbors.
    std::vector<std::uint8_t> seen(mask_.size(), 0);
    std::queue<std::size_t> frontier;
    frontier.push(first);
    seen[first] = 1;
    std::size_t reached = 0;
    while (!frontier.empty()) {
        const std::size_t k = frontier.front();
        frontier.pop();
        ++reached;
        const std::size_t i = k % ns_, j = k / ns_;
        const auto visit = [&](std::size_t ii, std::size_t jj) {
            const std::size_t kk = jj * ns_ + ii;
            if (mask_[kk] && !seen[kk]) { seen[kk] = 1; frontier.push(kk); }
        };
        if (i > 0) visit(i - 1, j);
        if (i + 1 < ns_) visit(i + 1, j);
        if (j > 0) visit(i, j - 1);
        if (j + 1 < nt_) visit(i, j + 1);
    }
    if (reached != active_count())
        throw std::invalid_argument("Grid2D: active mask is not 4-connected");
}

std::size_t Grid2D::active_count() const {
    std::size_t c = 0;
    for (auto v : mask_) c += (v != 0);
    return c;
}

Grid2D Grid2D::lower_triangle(double L, double h) {
    if (!(L > 0.0 && h > 0.0)) throw std::invalid_argument("Grid2D::lower_triangle: need L, h > 0");
    const auto n = static_cast<std::size_t>(std::llround(L / h)) + 1;
    std::vector<std::uint8_t> mask(n * n, 0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = j; i < n; ++i) mask[j * n + i] = 1;
    return Grid2D(0.0, 0.0, h, h, n, n, std::move(mask));
}

Grid2D Grid2D::rectangle(double Ls, double Lt, double h) {
    if (!(Ls > 0.0 && Lt > 0.0 && h > 0.0))
        throw std::invalid_argument("Grid2D::rectangle: need Ls, Lt, h > 0");
    const auto ns = static_cast<std::size_t>(std::llround(Ls / h)) + 1;
    const auto nt = static_cast<std::size_t>(std::llround(Lt / h)) + 1;
    return Grid2D(0.0, 0.0, h, h, ns, nt, std::vector<std::uint8_t>(ns * nt, 1));
}

}  // namespace stablab::num
