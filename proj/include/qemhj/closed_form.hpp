#ifndef QEMHJ_CLOSED_FORM_HPP
#define QEMHJ_CLOSED_FORM_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "qemhj/errors.hpp"
#include "qemhj/grid.hpp"
#include "qemhj/polynomials.hpp"
#include "qemhj/profiles.hpp"

// Symbolic recipe for a closed-form eigenfunction
//
//     state(x) = prod_i (y - shift_i)^{e_i} * exp(c*y) * P_n(scale*y),  y = y(x)
//
// with P_n a Jacobi or Laguerre polynomial.  The recipe carries exact
// log-derivatives (usable at complex argument, which the contour residues
// need) so residual checks never pay finite-difference error.

namespace qemhj::closed_form {

using qemhj::Complex;
using qemhj::Grid;

enum class ArgMap { CoshX, ExpNegX };

enum class PolyFamily { None, Jacobi, Laguerre };

struct PowerTerm {
    double shift;     // (y - shift)^exponent
    double exponent;
};

struct ClosedFormState {
    ArgMap arg = ArgMap::CoshX;
    double x_lo = 0.0;
    double x_hi = std::numeric_limits<double>::infinity();

    std::vector<PowerTerm> powers;
    double exp_coeff = 0.0;  // exp(exp_coeff * y)

    PolyFamily family = PolyFamily::None;
    int n = 0;
    double l1 = 0.0, l2 = 0.0;  // Jacobi parameters
    double k = 0.0;             // Laguerre parameter
    double scale = 1.0;         // polynomial argument is scale*y

    template <typename Scalar>
    Scalar map_y(Scalar x) const {
        using std::cosh;
        using std::exp;
        return arg == ArgMap::CoshX ? cosh(x) : exp(-x);
    }
    template <typename Scalar>
    Scalar map_dy(Scalar x) const {
        using std::exp;
        using std::sinh;
        return arg == ArgMap::CoshX ? sinh(x) : -exp(-x);
    }
    template <typename Scalar>
    Scalar map_d2y(Scalar x) const {
        using std::cosh;
        using std::exp;
        return arg == ArgMap::CoshX ? cosh(x) : exp(-x);
    }

    template <typename Scalar>
    Scalar poly_value(Scalar z) const {
        switch (family) {
            case PolyFamily::None: return Scalar(1);
            case PolyFamily::Jacobi: return poly::eval_jacobi<Scalar>(n, l1, l2, z);
            case PolyFamily::Laguerre: return poly::eval_laguerre<Scalar>(n, k, z);
        }
        return Scalar(1);
    }
    template <typename Scalar>
    Scalar poly_derivative(Scalar z) const {
        switch (family) {
            case PolyFamily::None: return Scalar(0);
            case PolyFamily::Jacobi: return poly::eval_jacobi_derivative<Scalar>(n, l1, l2, z);
            case PolyFamily::Laguerre: return poly::eval_laguerre_derivative<Scalar>(n, k, z);
        }
        return Scalar(0);
    }
    template <typename Scalar>
    Scalar poly_second_derivative(Scalar z) const {
        switch (family) {
            case PolyFamily::None: return Scalar(0);
            case PolyFamily::Jacobi:
                return poly::eval_jacobi_second_derivative<Scalar>(n, l1, l2, z);
            case PolyFamily::Laguerre:
                return poly::eval_laguerre_second_derivative<Scalar>(n, k, z);
        }
        return Scalar(0);
    }

    // d/dx log state(x); valid wherever the state is nonzero.
    template <typename Scalar>
    Scalar log_derivative(Scalar x) const {
        const Scalar y = map_y(x), dy = map_dy(x);
        Scalar acc = Scalar(exp_coeff);
        for (const auto& t : powers) acc += Scalar(t.exponent) / (y - Scalar(t.shift));
        if (family != PolyFamily::None) {
            const Scalar z = Scalar(scale) * y;
            acc += Scalar(scale) * poly_derivative(z) / poly_value(z);
        }
        return acc * dy;
    }

    // d^2/dx^2 log state(x)
    template <typename Scalar>
    Scalar log_second_derivative(Scalar x) const {
        const Scalar y = map_y(x), dy = map_dy(x), d2y = map_d2y(x);
        Scalar g = Scalar(exp_coeff);   // d/dy log state
        Scalar gp = Scalar(0);          // d^2/dy^2 log state
        for (const auto& t : powers) {
            const Scalar u = y - Scalar(t.shift);
            g += Scalar(t.exponent) / u;
            gp -= Scalar(t.exponent) / (u * u);
        }
        if (family != PolyFamily::None) {
            const Scalar z = Scalar(scale) * y;
            const Scalar p = poly_value(z), p1 = poly_derivative(z), p2 = poly_second_derivative(z);
            g += Scalar(scale) * p1 / p;
            gp += Scalar(scale * scale) * (p2 / p - (p1 / p) * (p1 / p));
        }
        return gp * dy * dy + g * d2y;
    }

    // log |power-and-exponential prefactor|; the polynomial is applied
    // separately so zeros and signs survive.
    double log_magnitude_prefactor(double x) const {
        const double y = map_y(x);
        double acc = exp_coeff * y;
        for (const auto& t : powers) {
            const double u = y - t.shift;
            if (!(u > 0.0)) throw DomainError("closed-form prefactor base non-positive");
            acc += t.exponent * std::log(u);
        }
        return acc;
    }

    // Raw value; may over/underflow far outside the state's support.
    double value(double x) const {
        const double y = map_y(x);
        return std::exp(log_magnitude_prefactor(x)) * poly_value(scale * y);
    }
};

// Samples with max |state| == 1 on the grid, computed through logarithms so
// growing prefactors cannot overflow first.
inline Eigen::ArrayXd sample_normalized(const ClosedFormState& s, const Grid& g) {
    const Eigen::ArrayXd x = g.nodes();
    Eigen::ArrayXd logmag(g.n_points), pval(g.n_points);
    double top = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < g.n_points; ++i) {
        logmag[i] = s.log_magnitude_prefactor(x[i]);
        pval[i] = s.poly_value(s.scale * s.map_y(x[i]));
        if (pval[i] != 0.0) top = std::max(top, logmag[i] + std::log(std::abs(pval[i])));
    }
    Eigen::ArrayXd out(g.n_points);
    for (int i = 0; i < g.n_points; ++i) out[i] = pval[i] * std::exp(logmag[i] - top);
    return out;
}

// Residual of the position-dependent-mass eigenvalue equation in the form
//   phi''/phi - (M'/M) phi'/phi - M (V_eff - eps),
// evaluated with exact derivatives of the closed form.  Independent of the
// state's normalization.
inline Eigen::ArrayXd pdm_residual_analytic(const ClosedFormState& s,
                                            const profiles::MassProfile& profile,
                                            const std::function<double(double)>& veff,
                                            double eps, const Grid& g) {
    const Eigen::ArrayXd x = g.nodes();
    Eigen::ArrayXd r(g.n_points);
    for (int i = 0; i < g.n_points; ++i) {
        const double w = s.log_derivative<double>(x[i]);
        const double wp = s.log_second_derivative<double>(x[i]);
        const auto m = profiles::eval_mass(profile, x[i]);
        r[i] = wp + w * w - (m.M1 / m.M) * w - m.M * (veff(x[i]) - eps);
    }
    return r;
}

}  // namespace qemhj::closed_form

#endif  // QEMHJ_CLOSED_FORM_HPP
