#ifndef QEMHJ_QHJ_HPP
#define QEMHJ_QHJ_HPP

#include <cmath>
#include <functional>

#include "qemhj/errors.hpp"
#include "qemhj/grid.hpp"
#include "qemhj/profiles.hpp"

// The quantum momentum-function layer: transformations between wavefunctions
// and momentum functions, the mass-dependent Hamilton-Jacobi residual, and
// the reduction to the canonical Riccati form v' - v^2 = G(x).

namespace qemhj::qhj {

using profiles::MassProfile;
using qemhj::Complex;
using qemhj::Grid;
using qemhj::SampledComplexFunction;

struct EnergyValue {
    double epsilon = 0.0;
};

// General first-order form p' = a(x) + b(x) p + c p^2.  Every construction
// in this library has c == -i.
struct RiccatiCoefficients {
    std::function<Complex(double)> a;
    std::function<Complex(double)> b;
    Complex c{0.0, -1.0};
};

// Relative tolerance below which a wavefunction sample counts as a node
// (momentum function has a genuine pole there).
inline constexpr double kZeroTolFactor = 1e-12;

// p(x) = -i phi'/phi by centered differences; nodes of phi are flagged as
// singular rather than differenced across.
inline SampledComplexFunction momentum_from_wavefunction(const SampledComplexFunction& phi) {
    const double max_abs = phi.values.abs().maxCoeff();
    if (!(max_abs > 0.0)) throw AllZeroError("wavefunction vanishes identically");
    const double tol = kZeroTolFactor * max_abs;

    SampledComplexFunction p;
    p.grid = phi.grid;
    const ArrayXcd d = derivative_samples(phi.values, phi.grid.spacing());
    p.values = ArrayXcd::Zero(phi.grid.n_points);
    const Complex minus_i(0.0, -1.0);
    for (int i = 0; i < phi.grid.n_points; ++i) {
        if (std::abs(phi.values[i]) < tol) {
            p.singular_nodes.push_back(i);
            p.values[i] = Complex(0.0, 0.0);
        } else {
            p.values[i] = minus_i * d[i] / phi.values[i];
        }
    }
    return p;
}

// Residual of  -i p' + p^2 + i (M'/M) p + M (V_eff - eps)  nodewise,
// derivative by centered differences.
inline SampledComplexFunction qemhj_residual(const SampledComplexFunction& p,
                                             const MassProfile& profile,
                                             const std::function<double(double)>& veff,
                                             EnergyValue eps) {
    const Grid& g = p.grid;
    if (!profile.contains(g.x_lo) || !profile.contains(g.x_hi))
        throw DomainError("sampling grid exits the mass-profile domain");
    const ArrayXcd dp = derivative_samples(p.values, g.spacing());
    SampledComplexFunction r;
    r.grid = g;
    r.singular_nodes = p.singular_nodes;
    r.values = ArrayXcd::Zero(g.n_points);
    const Complex i_unit(0.0, 1.0);
    for (int i = 0; i < g.n_points; ++i) {
        const double x = g.node(i);
        const auto m = profiles::eval_mass(profile, x);
        r.values[i] = -i_unit * dp[i] + p.values[i] * p.values[i] +
                      i_unit * (m.M1 / m.M) * p.values[i] + m.M * (veff(x) - eps.epsilon);
    }
    return r;
}

// p = p_tilde + i M'/(2M): undoes the mass shift between the two momentum
// functions.
inline SampledComplexFunction momentum_shift(const SampledComplexFunction& p_tilde,
                                             const MassProfile& profile) {
    SampledComplexFunction p = p_tilde;
    const Complex i_unit(0.0, 1.0);
    for (int i = 0; i < p.grid.n_points; ++i) {
        const double x = p.grid.node(i);
        const auto m = profiles::eval_mass(profile, x);
        p.values[i] = p_tilde.values[i] + i_unit * m.M1 / (2.0 * m.M);
    }
    return p;
}

// psi = (1/sqrt(M)) exp(i \int p dx) by trapezoid from the grid start;
// phi = sqrt(M) psi.  Both normalized so max |phi| = 1.
inline std::pair<SampledComplexFunction, SampledComplexFunction> wavefunction_from_momentum(
    const SampledComplexFunction& p_tilde, const MassProfile& profile) {
    if (!p_tilde.singular_nodes.empty())
        throw SingularNodeError("momentum function has singular nodes; cannot integrate");
    const Grid& g = p_tilde.grid;
    const Complex i_unit(0.0, 1.0);
    const ArrayXcd phase = cumulative_trapezoid(p_tilde.values, g.spacing());

    SampledComplexFunction psi, phi;
    psi.grid = g;
    phi.grid = g;
    psi.values = ArrayXcd::Zero(g.n_points);
    phi.values = ArrayXcd::Zero(g.n_points);
    for (int i = 0; i < g.n_points; ++i) {
        const double M = profiles::eval_mass(profile, g.node(i)).M;
        const Complex e = std::exp(i_unit * phase[i]);
        psi.values[i] = e / std::sqrt(M);
        phi.values[i] = std::sqrt(M) * psi.values[i];
    }
    const double top = phi.values.abs().maxCoeff();
    psi.values /= top;
    phi.values /= top;
    return {psi, phi};
}

// a = -i M (V_eff - eps), b = M'/M, c = -i.
inline RiccatiCoefficients riccati_coefficients(const MassProfile& profile,
                                                std::function<double(double)> veff,
                                                EnergyValue eps) {
    RiccatiCoefficients rc;
    const Complex minus_i(0.0, -1.0);
    rc.a = [profile, veff, eps, minus_i](double x) {
        const auto m = profiles::eval_mass(profile, x);
        return minus_i * m.M * (veff(x) - eps.epsilon);
    };
    rc.b = [profile](double x) {
        const auto m = profiles::eval_mass(profile, x);
        return Complex(m.M1 / m.M, 0.0);
    };
    rc.c = minus_i;
    return rc;
}

// G = a c - b^2/4 + b'/2 - b c'/(2c) - (3/4)(c'/c)^2 + c''/(2c); c is a
// constant here so every c-derivative term vanishes.  b' is taken by a
// central difference of the callable.
inline Complex G_from_coefficients(const RiccatiCoefficients& rc, double x, double h = 1e-3) {
    const Complex b = rc.b(x);
    const Complex bp = deriv_central_c(rc.b, x, h);
    return rc.a(x) * rc.c - b * b / 4.0 + bp / 2.0;
}

// G = -[4 M^3 (V_eff - eps) + 3 M'^2 - 2 M M''] / (4 M^2)
inline double G_direct(const MassProfile& profile, const std::function<double(double)>& veff,
                       EnergyValue eps, double x) {
    const auto m = profiles::eval_mass(profile, x);
    return -(4.0 * m.M * m.M * m.M * (veff(x) - eps.epsilon) + 3.0 * m.M1 * m.M1 -
             2.0 * m.M * m.M2) /
           (4.0 * m.M * m.M);
}

}  // namespace qemhj::qhj

#endif  // QEMHJ_QHJ_HPP
