#ifndef QEMHJ_RESIDUE_SPECTRA_HPP
#define QEMHJ_RESIDUE_SPECTRA_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "qemhj/closed_form.hpp"
#include "qemhj/errors.hpp"
#include "qemhj/grid.hpp"
#include "qemhj/profiles.hpp"

// Laurent/residue quantization and closed-form spectra for the two solved
// mass profiles: M = 1/sinh x with the coth/sinh potential family, and
// M = e^{-2x} with the exponential (Morse-type) family.
//
// The hyperbolic case ships in two parameterizations:
//   PtScheme::Classic      -- the conventional residue/quantization formulas,
//                             kept verbatim as reference output;
//   PtScheme::Consistent   -- parameters re-derived from the pole structure of
//                             the eigenvalue equation itself, so the returned
//                             states are exact solutions (the self-test suite
//                             measures the residual of both and reports which
//                             passes).
// The Consistent scheme is solvable only where both indicial radicands
// V1 - w and -(V1 + w), w = alpha(alpha+beta+1), are non-negative.

namespace qemhj::spectra {

using closed_form::ArgMap;
using closed_form::ClosedFormState;
using closed_form::PolyFamily;
using profiles::AmbiguityParams;
using qemhj::Complex;

enum class Branch { Plus, Minus };
enum class PtScheme { Classic, Consistent };
enum class StateTarget { Psi, Phi };

struct ResidueData {
    Complex location;
    double value = 0.0;
    Branch branch = Branch::Minus;
};

enum class SpectralCase { PT, Morse };

struct SpectralCondition {
    SpectralCase which = SpectralCase::PT;
    int n = 0;
    double output_parameter = 0.0;  // V3 for PT, V0 for Morse
    double energy = 0.0;            // V2 for PT, -B^2 for Morse
};

// ---------------------------------------------------------------------------
// Hyperbolic (Poschl-Teller type) case, mass M = 1/sinh x
// ---------------------------------------------------------------------------

namespace detail {
inline double pt_radicand_plus(double V1, const AmbiguityParams& amb, PtScheme scheme) {
    const double w = profiles::ordering_weight(amb);
    return scheme == PtScheme::Classic ? V1 - w + 1.0 : V1 - w;
}
inline double pt_radicand_minus(double V1, const AmbiguityParams& amb, PtScheme scheme) {
    const double w = profiles::ordering_weight(amb);
    return scheme == PtScheme::Classic ? -V1 - w + 1.0 : -V1 - w;
}
inline void pt_require_solvable(double V1, const AmbiguityParams& amb, PtScheme scheme) {
    if (pt_radicand_plus(V1, amb, scheme) < 0.0 || pt_radicand_minus(V1, amb, scheme) < 0.0)
        throw BranchError("negative radicand: parameters outside the solvable regime");
}
inline double branch_sign(Branch b) { return b == Branch::Plus ? 1.0 : -1.0; }
}  // namespace detail

// Residues of the Laurent expansion of the mapped Riccati solution at
// y = cosh x = +1 and y = -1.
inline std::pair<ResidueData, ResidueData> pt_residues(double V1, const AmbiguityParams& amb,
                                                       Branch branch = Branch::Minus,
                                                       PtScheme scheme = PtScheme::Classic) {
    detail::pt_require_solvable(V1, amb, scheme);
    const double rp = detail::pt_radicand_plus(V1, amb, scheme);
    const double rm = detail::pt_radicand_minus(V1, amb, scheme);
    const double s = detail::branch_sign(branch);
    ResidueData at_plus{Complex(1.0, 0.0), 0.5 * (1.0 + s * std::sqrt(rp)), branch};
    ResidueData at_minus{Complex(-1.0, 0.0), 0.5 * (1.0 + s * std::sqrt(rm)), branch};
    return {at_plus, at_minus};
}

// Constants of the comparison with the standard hyperbolic potential.
inline std::pair<double, double> pt_AB_params(double V1, const AmbiguityParams& amb,
                                              PtScheme scheme = PtScheme::Classic) {
    detail::pt_require_solvable(V1, amb, scheme);
    const double sp = std::sqrt(detail::pt_radicand_plus(V1, amb, scheme));
    const double sm = std::sqrt(detail::pt_radicand_minus(V1, amb, scheme));
    return {0.5 * (-1.0 + sm + sp), 0.5 * (sp - sm)};
}

// Prefactor exponents of the bound states.  Classic keeps the conventional
// a1/a2 constants; Consistent takes the indicial exponents directly, with the
// branch pair fixed by normalizability (regular at x=0, decaying at infinity).
struct PtExponents {
    double p;  // (y-1) exponent of phi
    double q;  // (y+1) exponent of phi
};

inline PtExponents pt_phi_exponents(double V1, const AmbiguityParams& amb, PtScheme scheme,
                                    Branch branch = Branch::Minus) {
    detail::pt_require_solvable(V1, amb, scheme);
    const double sp = std::sqrt(detail::pt_radicand_plus(V1, amb, scheme));
    const double sm = std::sqrt(detail::pt_radicand_minus(V1, amb, scheme));
    if (scheme == PtScheme::Classic) {
        const double a1 = 0.25 * (1.0 - 2.0 * sm + sp);
        const double a2 = 0.25 * (-1.0 + 2.0 * sp + sp);
        return {a1 - 0.75, a2 - 0.75};
    }
    // Consistent: p = +-sp/2, q = +-sm/2.  Default from `branch`; the
    // normalizability test promotes p to the regular (plus) root whenever
    // the default root fails square-integrability at the origin.
    double p = detail::branch_sign(branch) * 0.5 * sp;
    const double q = -0.5 * sm;  // decay at infinity
    if (2.0 * p <= -0.5) p = 0.5 * sp;
    return {p, q};
}

// Quantized third potential parameter.  The returned energy is V2 itself:
// the simple pole of the inhomogeneity must be cancelled, which pins
// eps = V2 and leaves V3 carrying the level index.
inline SpectralCondition pt_quantization(double V1, const AmbiguityParams& amb, int n,
                                         double V2 = 0.0,
                                         PtScheme scheme = PtScheme::Classic,
                                         Branch branch = Branch::Minus) {
    if (n < 0) throw ConstraintError("level index must be non-negative");
    detail::pt_require_solvable(V1, amb, scheme);
    SpectralCondition out;
    out.which = SpectralCase::PT;
    out.n = n;
    out.energy = V2;
    if (scheme == PtScheme::Classic) {
        const double sp = std::sqrt(detail::pt_radicand_plus(V1, amb, scheme));
        const double sm = std::sqrt(detail::pt_radicand_minus(V1, amb, scheme));
        const double A = 0.5 * (-1.0 + sm + sp);
        const double gamma = -(amb.beta + 1.0) / 2.0 - 0.25 + 0.25 * (-1.0 + sm + sp) * (-1.0 + sm + sp);
        out.output_parameter = gamma * gamma - (A - n) * (A - n);
    } else {
        const auto e = pt_phi_exponents(V1, amb, scheme, branch);
        const double sigma = e.p + e.q;
        out.output_parameter = (sigma + n) * (sigma + n + 1.0) +
                               profiles::ordering_weight(amb) + (amb.beta + 1.0) / 2.0;
    }
    return out;
}

// V3 solving the y^{-2} coefficient identity
//   2 b+ b- + 2 n (b+ + b-) + n(n-1) + 3/8 - V3 - alpha(alpha+beta+1) = 0
// for the residues of the chosen branch.
inline double pt_closure_v3(double V1, const AmbiguityParams& amb, int n,
                            Branch branch = Branch::Minus,
                            PtScheme scheme = PtScheme::Classic) {
    const auto [r1, r2] = pt_residues(V1, amb, branch, scheme);
    return 2.0 * r1.value * r2.value + 2.0 * n * (r1.value + r2.value) + n * (n - 1.0) +
           3.0 / 8.0 - profiles::ordering_weight(amb);
}

inline ClosedFormState pt_eigenfunction(double V1, const AmbiguityParams& amb, int n,
                                        StateTarget target = StateTarget::Phi,
                                        PtScheme scheme = PtScheme::Classic,
                                        Branch branch = Branch::Minus) {
    if (n < 0) throw ConstraintError("level index must be non-negative");
    const auto e = pt_phi_exponents(V1, amb, scheme, branch);
    ClosedFormState s;
    s.arg = ArgMap::CoshX;
    s.x_lo = 0.0;
    s.x_hi = std::numeric_limits<double>::infinity();
    s.family = PolyFamily::Jacobi;
    s.n = n;
    s.scale = 1.0;
    // phi = sqrt(M) psi lowers both exponents by 1/4 (sqrt(M) = (y^2-1)^{-1/4}).
    const double lift = (target == StateTarget::Psi) ? 0.25 : 0.0;
    s.powers = {{1.0, e.p + lift}, {-1.0, e.q + lift}};
    if (scheme == PtScheme::Classic) {
        const double a1 = e.p + 0.75, a2 = e.q + 0.75;
        s.l1 = 2.0 * a1 - 1.5;
        s.l2 = -2.0 * a2 - 1.5;
    } else {
        s.l1 = 2.0 * e.p;
        s.l2 = 2.0 * e.q;
    }
    return s;
}

// ---------------------------------------------------------------------------
// Exponential (Morse type) case, mass M = e^{-2x}
// ---------------------------------------------------------------------------

// C = 2(beta+1) + 4 alpha(alpha+beta+1) - 1
inline double morse_c_constant(const AmbiguityParams& amb) {
    return 2.0 * (amb.beta + 1.0) + 4.0 * profiles::ordering_weight(amb) - 1.0;
}

// Residue of the mapped Riccati solution at y = e^{-x} = 0.  Default branch
// Minus; the normalizability test promotes to Plus when the Minus prefactor
// y^{b1+1/2} is not square-integrable toward x -> +infinity (b1 <= -1/2).
inline ResidueData morse_residues(double V0, const AmbiguityParams& amb,
                                  Branch branch = Branch::Minus) {
    const double root = std::sqrt(std::abs(V0 - morse_c_constant(amb)));
    double value = 0.5 * (1.0 + detail::branch_sign(branch) * 2.0 * root);
    Branch used = branch;
    if (branch == Branch::Minus && value <= -0.5) {
        value = 0.5 * (1.0 + 2.0 * root);
        used = Branch::Plus;
    }
    return {Complex(0.0, 0.0), value, used};
}

// Leading terms of the expansion at y = infinity: B0 = -sqrt(-eps),
// B1 = -B(1+2A)/(2 B0).
inline std::pair<Complex, Complex> morse_infinity_expansion(double eps, double A, double B) {
    if (eps >= 0.0) throw PositiveEnergyError("bound-state expansion needs eps < 0");
    const Complex B0(-std::sqrt(-eps), 0.0);
    const Complex B1 = Complex(-B * (1.0 + 2.0 * A), 0.0) / (2.0 * B0);
    return {B0, B1};
}

// V0 = C + (A-n)^2, energy = -B^2.
inline SpectralCondition morse_quantization(const AmbiguityParams& amb, double A, int n,
                                            double B = 1.0) {
    if (n < 0) throw ConstraintError("level index must be non-negative");
    if (!(A > n)) throw UnboundError("bound state requires A > n");
    SpectralCondition out;
    out.which = SpectralCase::Morse;
    out.n = n;
    out.output_parameter = morse_c_constant(amb) + (A - n) * (A - n);
    out.energy = -B * B;
    return out;
}

// phi_n(y) = y^{A-n+1} e^{-s y/2} L_n^{2(A-n)}(s y), y = e^{-x}.
inline ClosedFormState morse_eigenfunction(double A, double B, int n, double laguerre_scale) {
    if (n < 0) throw ConstraintError("level index must be non-negative");
    if (!(A > n)) throw UnboundError("bound state requires A > n");
    if (!(B > 0.0)) throw ConstraintError("bound state requires B > 0");
    ClosedFormState s;
    s.arg = ArgMap::ExpNegX;
    s.x_lo = -std::numeric_limits<double>::infinity();
    s.x_hi = std::numeric_limits<double>::infinity();
    s.powers = {{0.0, A - n + 1.0}};
    s.exp_coeff = -0.5 * laguerre_scale;
    s.family = PolyFamily::Laguerre;
    s.n = n;
    s.k = 2.0 * (A - n);
    s.scale = laguerre_scale;
    return s;
}

struct MorseScaleCalibration {
    double scale = 1.0;
    std::vector<std::pair<double, double>> tried;  // (candidate, max residual of phi_0)
};

// The Laguerre-argument scale is ambiguous between published forms; calibrate
// once by minimizing the eigenvalue-equation residual of phi_0 over the three
// candidates {1, 2B, B} on a fixed window.
inline MorseScaleCalibration calibrate_morse_scale(double A, double B,
                                                   const AmbiguityParams& amb) {
    if (!(A > 0.0)) throw UnboundError("calibration requires A > 0");
    const auto profile = profiles::MassProfile::exponential_decay();
    const auto cond = morse_quantization(amb, A, 0, B);
    const auto V = profiles::PotentialSpec::morse(cond.output_parameter, A, B);
    const auto veff = [&](double x) { return profiles::effective_potential(V, profile, amb, x); };
    const Grid g(-3.0, 9.0, 2001);

    MorseScaleCalibration cal;
    double best = std::numeric_limits<double>::infinity();
    for (double cand : {1.0, 2.0 * B, B}) {
        const auto phi0 = morse_eigenfunction(A, B, 0, cand);
        const double r =
            closed_form::pdm_residual_analytic(phi0, profile, veff, cond.energy, g).abs().maxCoeff();
        cal.tried.emplace_back(cand, r);
        if (r < best) {
            best = r;
            cal.scale = cand;
        }
    }
    return cal;
}

// ---------------------------------------------------------------------------
// Laurent coefficients by contour quadrature
// ---------------------------------------------------------------------------

// c_m = (1/2 pi i) \oint G(z) (z - pole)^{-m-1} dz on a circle of the given
// radius, 256-point trapezoid (spectrally accurate for analytic integrands).
inline std::vector<Complex> laurent_coefficients(const std::function<Complex(Complex)>& G,
                                                 Complex pole, double radius, int order_lo,
                                                 int order_hi, int n_quad = 256) {
    if (!(radius > 0.0)) throw QuadratureError("laurent quadrature needs a positive radius");
    if (order_hi < order_lo) throw QuadratureError("empty order range");
    std::vector<Complex> samples(n_quad);
    std::vector<Complex> zs(n_quad);
    for (int j = 0; j < n_quad; ++j) {
        const double th = 2.0 * M_PI * j / n_quad;
        const Complex w = std::polar(radius, th);
        zs[j] = w;
        samples[j] = G(pole + w);
        if (!std::isfinite(samples[j].real()) || !std::isfinite(samples[j].imag()))
            throw QuadratureError("non-finite sample on the quadrature circle");
    }
    std::vector<Complex> out;
    out.reserve(order_hi - order_lo + 1);
    for (int m = order_lo; m <= order_hi; ++m) {
        Complex acc(0.0, 0.0);
        for (int j = 0; j < n_quad; ++j) acc += samples[j] * std::pow(zs[j], -m);
        out.push_back(acc / static_cast<double>(n_quad));
    }
    return out;
}

}  // namespace qemhj::spectra

#endif  // QEMHJ_RESIDUE_SPECTRA_HPP
