#ifndef QEMHJ_ORACLE_HPP
#define QEMHJ_ORACLE_HPP

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "qemhj/closed_form.hpp"
#include "qemhj/errors.hpp"
#include "qemhj/grid.hpp"
#include "qemhj/profiles.hpp"

// Independent numerical ground truth: a finite-difference eigensolver for the
// position-dependent-mass operator
//
//   H = -(1/M) d^2/dx^2 + (M'/M^2) d/dx + V_eff = -d/dx (1/M) d/dx + V_eff,
//
// node counting, contour residues, and the quantum action variable.  Nothing
// here touches the closed-form quantization formulas, so agreement between
// the two routes is evidence, not tautology.

namespace qemhj::oracle {

using closed_form::ClosedFormState;
using profiles::MassProfile;
using qemhj::Complex;
using qemhj::Grid;
using qemhj::MetricWeight;

// Tridiagonal discretization on interior nodes (Dirichlet ends).  `diag` and
// `offdiag` are the symmetric flux form, whose eigenvectors sample phi
// directly; the raw (non-symmetric) first-derivative form is recovered from
// it by the exact diagonal similarity with sqrt(M), so both forms share one
// spectrum by construction.
struct DiscretizedOperator {
    Grid grid;                 // full grid including the Dirichlet endpoints
    Eigen::VectorXd diag;      // size m = n_points - 2
    Eigen::VectorXd offdiag;   // size m - 1
    Eigen::VectorXd sqrt_mass; // sqrt(M) at interior nodes
    bool symmetric = true;

    int interior_size() const { return static_cast<int>(diag.size()); }

    // Raw-form entries H_raw = D^{-1} T D with D = diag(sqrt(M)).
    double raw_lower(int i) const { return offdiag[i] * sqrt_mass[i] / sqrt_mass[i + 1]; }
    double raw_upper(int i) const { return offdiag[i] * sqrt_mass[i + 1] / sqrt_mass[i]; }
};

inline DiscretizedOperator discretize_pdm(const MassProfile& profile,
                                          const std::function<double(double)>& veff,
                                          const Grid& grid) {
    if (!profile.contains(grid.x_lo) || !profile.contains(grid.x_hi))
        throw DomainError("grid must lie strictly inside the mass-profile domain");
    const int m = grid.n_points - 2;
    if (m < 1) throw DomainError("grid too small to discretize");
    const double h = grid.spacing();

    DiscretizedOperator op;
    op.grid = grid;
    op.diag.resize(m);
    op.offdiag.resize(m - 1);
    op.sqrt_mass.resize(m);

    // flux coefficients p = 1/M at half nodes
    auto p_half = [&](int i) {  // between full-grid nodes i and i+1
        const double x = grid.node(i) + 0.5 * h;
        return 1.0 / profiles::eval_mass(profile, x).M;
    };
    for (int i = 0; i < m; ++i) {
        const double x = grid.node(i + 1);
        op.diag[i] = (p_half(i) + p_half(i + 1)) / (h * h) + veff(x);
        op.sqrt_mass[i] = std::sqrt(profiles::eval_mass(profile, x).M);
        if (i + 1 < m) op.offdiag[i] = -p_half(i + 1) / (h * h);
    }
    return op;
}

struct EigenResult {
    std::vector<double> eigenvalues;              // ascending
    std::vector<Eigen::VectorXd> eigenvectors;    // phi on interior nodes
    std::vector<double> residual_norms;           // ||T v - lambda v||_2
};

namespace detail {

// Number of eigenvalues of the symmetric tridiagonal strictly below x
// (Sturm sequence count).
inline int count_below(const Eigen::VectorXd& d, const Eigen::VectorXd& e, double x) {
    const int m = static_cast<int>(d.size());
    int count = 0;
    double q = d[0] - x;
    if (q < 0.0) ++count;
    for (int i = 1; i < m; ++i) {
        if (q == 0.0) q = 1e-300;
        q = d[i] - x - e[i - 1] * e[i - 1] / q;
        if (q < 0.0) ++count;
    }
    return count;
}

inline void gershgorin(const Eigen::VectorXd& d, const Eigen::VectorXd& e, double& lo,
                       double& hi) {
    const int m = static_cast<int>(d.size());
    lo = std::numeric_limits<double>::infinity();
    hi = -lo;
    for (int i = 0; i < m; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(e[i - 1]);
        if (i + 1 < m) r += std::abs(e[i]);
        lo = std::min(lo, d[i] - r);
        hi = std::max(hi, d[i] + r);
    }
}

// Solve (T - lambda) u = rhs in place, tridiagonal Gaussian elimination with
// partial pivoting (pivoting creates one extra superdiagonal).
inline void shifted_solve(const Eigen::VectorXd& d, const Eigen::VectorXd& e, double lambda,
                          Eigen::VectorXd& u) {
    const int m = static_cast<int>(d.size());
    Eigen::VectorXd A(m), B(m), C(m);
    for (int i = 0; i < m; ++i) {
        A[i] = d[i] - lambda;
        B[i] = (i + 1 < m) ? e[i] : 0.0;  // superdiagonal
        C[i] = (i > 0) ? e[i - 1] : 0.0;  // subdiagonal
    }
    Eigen::VectorXd D2(m);
    D2.setZero();  // second superdiagonal created by pivoting
    for (int i = 0; i + 1 < m; ++i) {
        if (std::abs(C[i + 1]) > std::abs(A[i])) {
            std::swap(A[i], C[i + 1]);
            std::swap(B[i], A[i + 1]);
            std::swap(D2[i], B[i + 1]);
            std::swap(u[i], u[i + 1]);
        }
        if (A[i] == 0.0) A[i] = 1e-300;
        const double mfac = C[i + 1] / A[i];
        A[i + 1] -= mfac * B[i];
        B[i + 1] -= mfac * D2[i];
        u[i + 1] -= mfac * u[i];
    }
    if (A[m - 1] == 0.0) A[m - 1] = 1e-300;
    u[m - 1] /= A[m - 1];
    if (m >= 2) {
        u[m - 2] = (u[m - 2] - B[m - 2] * u[m - 1]) / (A[m - 2] == 0.0 ? 1e-300 : A[m - 2]);
    }
    for (int i = m - 3; i >= 0; --i) {
        u[i] = (u[i] - B[i] * u[i + 1] - D2[i] * u[i + 2]) / (A[i] == 0.0 ? 1e-300 : A[i]);
    }
}

}  // namespace detail

// Lowest k eigenpairs of the symmetric form by Sturm bisection plus inverse
// iteration.  Deterministic (fixed-seed start vectors).
inline EigenResult solve_lowest(const DiscretizedOperator& op, int k, int iteration_cap = 500) {
    const int m = op.interior_size();
    if (k < 1 || k >= m) throw DomainError("requested eigenpair count out of range");
    const Eigen::VectorXd& d = op.diag;
    const Eigen::VectorXd& e = op.offdiag;

    double lo, hi;
    detail::gershgorin(d, e, lo, hi);

    EigenResult res;
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);

    auto apply = [&](const Eigen::VectorXd& v) {
        Eigen::VectorXd w(m);
        for (int i = 0; i < m; ++i) {
            double s = d[i] * v[i];
            if (i > 0) s += e[i - 1] * v[i - 1];
            if (i + 1 < m) s += e[i] * v[i + 1];
            w[i] = s;
        }
        return w;
    };

    for (int j = 0; j < k; ++j) {
        // bisection: find lambda_j (ascending, 0-based)
        double a = lo, b = hi;
        int it = 0;
        while (b - a > 1e-14 * std::max(1.0, std::max(std::abs(a), std::abs(b)))) {
            if (++it > 20000) throw ConvergenceError("bisection failed to localize eigenvalue");
            const double mid = 0.5 * (a + b);
            (detail::count_below(d, e, mid) <= j ? a : b) = mid;
        }
        double lambda = 0.5 * (a + b);

        // inverse iteration
        Eigen::VectorXd v(m);
        for (int i = 0; i < m; ++i) v[i] = unif(rng);
        v.normalize();
        double resid = std::numeric_limits<double>::infinity();
        int iter = 0;
        // avoid exact singularity of the shift
        double shift = lambda + (b - a + 1e-13 * std::max(1.0, std::abs(lambda)));
        while (iter++ < iteration_cap) {
            detail::shifted_solve(d, e, shift, v);
            // re-orthogonalize against previously found vectors (clusters)
            for (int l = 0; l < j; ++l) {
                if (std::abs(res.eigenvalues[l] - lambda) <
                    1e-6 * std::max(1.0, std::abs(lambda)))
                    v -= res.eigenvectors[l].dot(v) * res.eigenvectors[l];
            }
            const double nv = v.norm();
            if (!(nv > 0.0) || !std::isfinite(nv)) throw ConvergenceError("inverse iteration broke down");
            v /= nv;
            const Eigen::VectorXd w = apply(v);
            const double rayleigh = v.dot(w);
            resid = (w - rayleigh * v).norm();
            if (resid < 1e-10 * std::max(1.0, std::abs(rayleigh))) {
                lambda = rayleigh;
                break;
            }
            shift = rayleigh;
        }
        if (iter >= iteration_cap)
            throw ConvergenceError("inverse iteration hit the iteration cap");

        // sign convention: first antinode positive
        const double best = v.cwiseAbs().maxCoeff();
        int first_extremum = 0;
        for (int i = 0; i < m; ++i)
            if (std::abs(v[i]) > 0.5 * best) {
                first_extremum = i;
                break;
            }
        if (v[first_extremum] < 0.0) v = -v;

        res.eigenvalues.push_back(lambda);
        res.eigenvectors.push_back(v);
        res.residual_norms.push_back(resid);
    }
    return res;
}

// Strict sign changes, entries below 1e-12 * max|v| ignored.
inline int count_nodes(const Eigen::VectorXd& v) {
    const double tol = 1e-12 * v.cwiseAbs().maxCoeff();
    int count = 0;
    double prev = 0.0;
    bool have_prev = false;
    for (int i = 0; i < v.size(); ++i) {
        if (std::abs(v[i]) <= tol) continue;
        if (have_prev && prev * v[i] < 0.0) ++count;
        prev = v[i];
        have_prev = true;
    }
    return count;
}

inline int count_nodes(const Eigen::ArrayXd& v) {
    return count_nodes(Eigen::VectorXd(v.matrix()));
}

// (1/2 pi i) \oint f dz around `center`, 256-point trapezoid.
inline Complex contour_residue(const std::function<Complex(Complex)>& f, Complex center,
                               double radius, int n_quad = 256) {
    if (!(radius > 0.0)) throw QuadratureError("contour radius must be positive");
    Complex acc(0.0, 0.0);
    for (int j = 0; j < n_quad; ++j) {
        const double th = 2.0 * M_PI * j / n_quad;
        const Complex w = std::polar(radius, th);
        const Complex fz = f(center + w);
        if (!std::isfinite(fz.real()) || !std::isfinite(fz.imag()))
            throw QuadratureError("non-finite sample on the residue contour");
        acc += fz * w;
    }
    return acc / static_cast<double>(n_quad);
}

// Real zeros (in x) of the polynomial factor of a closed-form state, inside
// the state's physical region, via the companion matrix of the monomial
// coefficients.
inline std::vector<double> state_polynomial_zeros_x(const ClosedFormState& s) {
    std::vector<double> coeffs;
    switch (s.family) {
        case closed_form::PolyFamily::None:
            return {};
        case closed_form::PolyFamily::Jacobi:
            coeffs = poly::jacobi_monomial_coeffs(s.n, s.l1, s.l2);
            break;
        case closed_form::PolyFamily::Laguerre:
            coeffs = poly::laguerre_monomial_coeffs(s.n, s.k);
            break;
    }
    // trim numerically vanished leading coefficients (degenerate parameter
    // combinations drop the degree)
    double top = 0.0;
    for (double c : coeffs) top = std::max(top, std::abs(c));
    if (!(top > 0.0)) throw RootFindingError("polynomial vanished identically");
    while (coeffs.size() > 1 && std::abs(coeffs.back()) < 1e-12 * top) coeffs.pop_back();
    const int deg = static_cast<int>(coeffs.size()) - 1;
    if (deg == 0) return {};

    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
    for (int i = 0; i < deg; ++i) comp(0, i) = -coeffs[deg - 1 - i] / coeffs[deg];
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp);
    if (es.info() != Eigen::Success) throw RootFindingError("companion eigensolve failed");

    std::vector<double> xs;
    for (int i = 0; i < deg; ++i) {
        const Complex z = es.eigenvalues()[i];
        if (std::abs(z.imag()) > 1e-9 * (1.0 + std::abs(z.real()))) continue;
        const double zy = z.real() / s.scale;  // polynomial argument is scale*y
        if (s.arg == closed_form::ArgMap::CoshX) {
            if (zy <= 1.0 + 1e-12) continue;
            xs.push_back(std::acosh(zy));
        } else {
            if (zy <= 0.0) continue;
            xs.push_back(-std::log(zy));
        }
    }
    std::sort(xs.begin(), xs.end());
    return xs;
}

// Quantum action variable: J = sum over physical polynomial zeros of
// (i * residue of p~), rounded to the nearest integer.  Each residue should
// individually sit within quadrature error of -i.
struct ActionResult {
    int J = 0;
    std::vector<Complex> residues;
    std::vector<double> zeros_x;
};

inline ActionResult action_variable(const ClosedFormState& s) {
    ActionResult out;
    out.zeros_x = state_polynomial_zeros_x(s);
    if (out.zeros_x.empty()) return out;

    auto p_tilde = [&](Complex z) {
        return Complex(0.0, -1.0) * s.log_derivative<Complex>(z);
    };
    double acc = 0.0;
    for (size_t i = 0; i < out.zeros_x.size(); ++i) {
        double dist = 0.5;  // cap
        for (size_t l = 0; l < out.zeros_x.size(); ++l)
            if (l != i) dist = std::min(dist, 0.5 * std::abs(out.zeros_x[i] - out.zeros_x[l]));
        if (s.arg == closed_form::ArgMap::CoshX)
            dist = std::min(dist, 0.5 * out.zeros_x[i]);  // keep away from x = 0
        const Complex r = contour_residue(p_tilde, Complex(out.zeros_x[i], 0.0), dist);
        out.residues.push_back(r);
        acc += (Complex(0.0, 1.0) * r).real();
    }
    out.J = static_cast<int>(std::lround(acc));
    return out;
}

// Trapezoid inner product  \int conj(u) eta v dx  on a shared grid.
inline Complex eta_inner_product(const SampledComplexFunction& u,
                                 const SampledComplexFunction& v, const MetricWeight& eta) {
    if (!u.grid.same_as(v.grid) || !u.grid.same_as(eta.grid))
        throw GridMismatchError("inner product needs one shared grid");
    ArrayXcd f(u.grid.n_points);
    for (int i = 0; i < u.grid.n_points; ++i)
        f[i] = std::conj(u.values[i]) * eta.eta[i] * v.values[i];
    return trapezoid(f, u.grid.spacing());
}

}  // namespace qemhj::oracle

#endif  // QEMHJ_ORACLE_HPP
