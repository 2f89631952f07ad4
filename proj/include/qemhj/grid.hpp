#ifndef QEMHJ_GRID_HPP
#define QEMHJ_GRID_HPP

#include <Eigen/Core>
#include <complex>
#include <vector>

#include "qemhj/errors.hpp"

namespace qemhj {

using Complex = std::complex<double>;
using Eigen::ArrayXd;
using Eigen::ArrayXcd;

// Uniform 1-D grid, strictly increasing nodes.
struct Grid {
    double x_lo = 0.0;
    double x_hi = 1.0;
    int n_points = 3;

    Grid() = default;
    Grid(double lo, double hi, int n) : x_lo(lo), x_hi(hi), n_points(n) {
        if (n_points < 3) throw DomainError("grid needs at least 3 points");
        if (!(x_hi > x_lo)) throw DomainError("grid bounds must satisfy x_lo < x_hi");
    }

    double spacing() const { return (x_hi - x_lo) / (n_points - 1); }
    double node(int i) const { return x_lo + spacing() * i; }

    ArrayXd nodes() const {
        ArrayXd x(n_points);
        const double h = spacing();
        for (int i = 0; i < n_points; ++i) x[i] = x_lo + h * i;
        return x;
    }

    bool same_as(const Grid& o) const {
        return n_points == o.n_points && x_lo == o.x_lo && x_hi == o.x_hi;
    }
};

// Complex samples of a function on a grid.  Nodes where the underlying
// function is singular (e.g. poles of a momentum function at wavefunction
// nodes) are flagged rather than stored as infinities.
struct SampledComplexFunction {
    Grid grid;
    ArrayXcd values;
    std::vector<int> singular_nodes;  // sorted indices

    SampledComplexFunction() = default;
    SampledComplexFunction(const Grid& g, ArrayXcd v) : grid(g), values(std::move(v)) {
        if (values.size() != grid.n_points)
            throw GridMismatchError("sample length does not match grid");
    }

    bool is_singular(int i) const {
        for (int s : singular_nodes)
            if (s == i) return true;
        return false;
    }
};

// Positive weight eta(x) > 0 sampled on a grid; eta = rho^2 with rho the
// similarity map of a pseudo-Hermitian pair.
struct MetricWeight {
    Grid grid;
    ArrayXd eta;

    MetricWeight() = default;
    MetricWeight(const Grid& g, ArrayXd e) : grid(g), eta(std::move(e)) {
        if (eta.size() != grid.n_points)
            throw GridMismatchError("metric length does not match grid");
        for (int i = 0; i < grid.n_points; ++i)
            if (!(eta[i] > 0.0)) throw DomainError("metric weight must be positive");
    }
};

// Second-order first derivative of a sampled sequence: centered in the
// interior, one-sided 3-point stencils at the ends.
inline ArrayXcd derivative_samples(const ArrayXcd& f, double h) {
    const Eigen::Index n = f.size();
    ArrayXcd d(n);
    if (n < 3) throw DomainError("derivative needs at least 3 samples");
    d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
    for (Eigen::Index i = 1; i + 1 < n; ++i) d[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
    d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
    return d;
}

inline ArrayXd derivative_samples(const ArrayXd& f, double h) {
    const Eigen::Index n = f.size();
    ArrayXd d(n);
    if (n < 3) throw DomainError("derivative needs at least 3 samples");
    d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
    for (Eigen::Index i = 1; i + 1 < n; ++i) d[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
    d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
    return d;
}

// Cumulative trapezoid integral, anchored so that the entry at `anchor`
// vanishes.
inline ArrayXcd cumulative_trapezoid(const ArrayXcd& f, double h, Eigen::Index anchor = 0) {
    const Eigen::Index n = f.size();
    ArrayXcd F(n);
    F[0] = Complex(0.0, 0.0);
    for (Eigen::Index i = 1; i < n; ++i) F[i] = F[i - 1] + 0.5 * h * (f[i - 1] + f[i]);
    const Complex off = F[anchor];
    for (Eigen::Index i = 0; i < n; ++i) F[i] -= off;
    return F;
}

inline ArrayXd cumulative_trapezoid(const ArrayXd& f, double h, Eigen::Index anchor = 0) {
    const Eigen::Index n = f.size();
    ArrayXd F(n);
    F[0] = 0.0;
    for (Eigen::Index i = 1; i < n; ++i) F[i] = F[i - 1] + 0.5 * h * (f[i - 1] + f[i]);
    const double off = F[anchor];
    for (Eigen::Index i = 0; i < n; ++i) F[i] -= off;
    return F;
}

inline Complex trapezoid(const ArrayXcd& f, double h) {
    const Eigen::Index n = f.size();
    Complex acc(0.0, 0.0);
    for (Eigen::Index i = 1; i < n; ++i) acc += 0.5 * h * (f[i - 1] + f[i]);
    return acc;
}

// Numeric derivatives of scalar callables, 4th-order central stencil.
template <typename F>
double deriv_central(const F& f, double x, double h = 1e-3) {
    return (-f(x + 2 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2 * h)) / (12.0 * h);
}

template <typename F>
Complex deriv_central_c(const F& f, double x, double h = 1e-3) {
    return (-f(x + 2 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2 * h)) / (12.0 * h);
}

}  // namespace qemhj

#endif  // QEMHJ_GRID_HPP
