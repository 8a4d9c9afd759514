#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace stablab::num {

/// One-dimensional mesh with strictly increasing (possibly graded) nodes.
class Mesh1D {
public:
    explicit Mesh1D(std::vector<double> nodes);

    static Mesh1D uniform(double a, double b, std::size_t n);
    /// Geometrically graded mesh on [a, b] with a, b > 0 (log-uniform nodes).
    static Mesh1D geometric(double a, double b, std::size_t n);

    const std::vector<double>& nodes() const { return nodes_; }
    std::size_t size() const { return nodes_.size(); }
    double front() const { return nodes_.front(); }
    double back() const { return nodes_.back(); }
    double operator[](std::size_t i) const { return nodes_[i]; }

private:
    std::vector<double> nodes_;
};

/// Uniform 2-d grid with an active-node mask (e.g. the triangle {t <= s}).
/// Node (i, j) sits at (origin_s + i*hs, origin_t + j*ht).
class Grid2D {
public:
    Grid2D(double origin_s, double origin_t, double hs, double ht,
           std::size_t ns, std::size_t nt, std::vector<std::uint8_t> mask);

    /// Grid on the triangle {0 <= t <= s <= L} with spacing h on both axes.
    static Grid2D lower_triangle(double L, double h);
    /// Fully active rectangle [0, Ls] x [0, Lt].
    static Grid2D rectangle(double Ls, double Lt, double h);

    std::size_t ns() const { return ns_; }
    std::size_t nt() const { return nt_; }
    double hs() const { return hs_; }
    double ht() const { return ht_; }
    double s(std::size_t i) const { return origin_s_ + static_cast<double>(i) * hs_; }
    double t(std::size_t j) const { return origin_t_ + static_cast<double>(j) * ht_; }
    std::size_t index(std::size_t i, std::size_t j) const { return j * ns_ + i; }
    bool active(std::size_t i, std::size_t j) const { return mask_[index(i, j)] != 0; }
    const std::vector<std::uint8_t>& mask() const { return mask_; }
    std::size_t active_count() const;

private:
    double origin_s_, origin_t_, hs_, ht_;
    std::size_t ns_, nt_;
    std::vector<std::uint8_t> mask_;

    void validate() const;
};

}  // namespace stablab::num
