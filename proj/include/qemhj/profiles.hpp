#ifndef QEMHJ_PROFILES_HPP
#define QEMHJ_PROFILES_HPP

#include <Eigen/Core>
#include <cmath>
#include <limits>
#include <memory>
#include <utility>
#include <vector>

#include "qemhj/errors.hpp"
#include "qemhj/grid.hpp"

// Mass profiles, potential families, kinetic-ordering parameters and the
// effective-potential constructor.  Units are dimensionless throughout with
// hbar = 2 m0 = 1; the mass entering every formula is the dimensionless M(x).

namespace qemhj::profiles {

using qemhj::Grid;

// Kinetic-ordering parameters (alpha, beta, gamma), constrained to
// alpha + beta + gamma = -1.  gamma is always derived.
struct AmbiguityParams {
    double alpha;
    double beta;
    double gamma;
};

inline AmbiguityParams make_ambiguity(double alpha, double beta) {
    return {alpha, beta, -1.0 - alpha - beta};
}

// alpha*(alpha+beta+1); shows up in every ordering-dependent coefficient.
inline double ordering_weight(const AmbiguityParams& a) {
    return a.alpha * (a.alpha + a.beta + 1.0);
}

// Natural cubic spline through (x_i, y_i); used to give tabulated profiles
// evaluatable first/second derivatives (second-order accurate).
class CubicSpline {
public:
    CubicSpline() = default;
    CubicSpline(std::vector<double> x, std::vector<double> y)
        : x_(std::move(x)), y_(std::move(y)) {
        const int n = static_cast<int>(x_.size());
        if (n < 3) throw DomainError("spline needs at least 3 samples");
        for (int i = 1; i < n; ++i)
            if (!(x_[i] > x_[i - 1])) throw DomainError("spline abscissae must increase");
        m_.assign(n, 0.0);
        // Tridiagonal solve for the second derivatives, natural ends.
        std::vector<double> a(n, 0.0), b(n, 0.0), c(n, 0.0), r(n, 0.0);
        b[0] = 1.0;
        b[n - 1] = 1.0;
        for (int i = 1; i + 1 < n; ++i) {
            const double hl = x_[i] - x_[i - 1], hr = x_[i + 1] - x_[i];
            a[i] = hl / 6.0;
            b[i] = (hl + hr) / 3.0;
            c[i] = hr / 6.0;
            r[i] = (y_[i + 1] - y_[i]) / hr - (y_[i] - y_[i - 1]) / hl;
        }
        for (int i = 1; i < n; ++i) {
            const double w = a[i] / b[i - 1];
            b[i] -= w * c[i - 1];
            r[i] -= w * r[i - 1];
        }
        m_[n - 1] = r[n - 1] / b[n - 1];
        for (int i = n - 2; i >= 0; --i) m_[i] = (r[i] - c[i] * m_[i + 1]) / b[i];
    }

    // value, first and second derivative at x
    void eval(double x, double& f, double& f1, double& f2) const {
        const int n = static_cast<int>(x_.size());
        if (x < x_.front() || x > x_.back()) throw DomainError("spline evaluation outside table");
        int lo = 0, hi = n - 1;
        while (hi - lo > 1) {
            const int mid = (lo + hi) / 2;
            (x_[mid] <= x ? lo : hi) = mid;
        }
        const double h = x_[lo + 1] - x_[lo];
        const double A = (x_[lo + 1] - x) / h, B = (x - x_[lo]) / h;
        f = A * y_[lo] + B * y_[lo + 1] +
            ((A * A * A - A) * m_[lo] + (B * B * B - B) * m_[lo + 1]) * h * h / 6.0;
        f1 = (y_[lo + 1] - y_[lo]) / h -
             (3.0 * A * A - 1.0) / 6.0 * h * m_[lo] + (3.0 * B * B - 1.0) / 6.0 * h * m_[lo + 1];
        f2 = A * m_[lo] + B * m_[lo + 1];
    }

    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }

private:
    std::vector<double> x_, y_;
    std::vector<double> m_;  // second derivatives at the knots
};

enum class MassKind { Constant, InverseSinh, ExponentialDecay, Tabulated };

// Dimensionless mass M(x) > 0 on an open interval, with evaluatable
// M, M', M''.  InverseSinh is M = 1/sinh x on (0, inf); ExponentialDecay is
// M = e^{-2x} on all of R.
struct MassProfile {
    MassKind kind = MassKind::Constant;
    double m0 = 1.0;                      // Constant only
    double x_lo = -std::numeric_limits<double>::infinity();
    double x_hi = std::numeric_limits<double>::infinity();
    std::shared_ptr<const CubicSpline> table;  // Tabulated only

    static MassProfile constant(double m0) {
        if (!(m0 > 0.0)) throw DomainError("constant mass must be positive");
        MassProfile p;
        p.kind = MassKind::Constant;
        p.m0 = m0;
        return p;
    }
    static MassProfile inverse_sinh() {
        MassProfile p;
        p.kind = MassKind::InverseSinh;
        p.x_lo = 0.0;
        return p;
    }
    static MassProfile exponential_decay() {
        MassProfile p;
        p.kind = MassKind::ExponentialDecay;
        return p;
    }
    static MassProfile tabulated(std::vector<double> x, std::vector<double> m) {
        for (double v : m)
            if (!(v > 0.0)) throw DomainError("tabulated mass must be positive");
        MassProfile p;
        p.kind = MassKind::Tabulated;
        p.table = std::make_shared<CubicSpline>(std::move(x), std::move(m));
        p.x_lo = p.table->x_min();
        p.x_hi = p.table->x_max();
        return p;
    }

    bool contains(double x) const { return x > x_lo && x < x_hi; }

    void require_inside(double x) const {
        if (!contains(x)) throw DomainError("x outside mass-profile domain");
    }
};

struct MassValue {
    double M;
    double M1;
    double M2;
};

inline MassValue eval_mass(const MassProfile& p, double x) {
    p.require_inside(x);
    switch (p.kind) {
        case MassKind::Constant:
            return {p.m0, 0.0, 0.0};
        case MassKind::InverseSinh: {
            const double s = std::sinh(x), c = std::cosh(x);
            // M' = -cosh/sinh^2; M'' = (cosh^2 + sinh^2)/sinh^3 = (2 sinh^2 + 1)/sinh^3
            return {1.0 / s, -c / (s * s), (2.0 * s * s + 1.0) / (s * s * s)};
        }
        case MassKind::ExponentialDecay: {
            const double M = std::exp(-2.0 * x);
            return {M, -2.0 * M, 4.0 * M};
        }
        case MassKind::Tabulated: {
            double f, f1, f2;
            p.table->eval(x, f, f1, f2);
            return {f, f1, f2};
        }
    }
    throw DomainError("unreachable mass kind");
}

enum class PotentialKind { PoschlTeller, Morse, Tabulated };

// Potential families:
//   PoschlTeller: V(x) = V1 coth x + V2 + V3 sinh x          on (0, inf)
//   Morse:        V(x) = V0 e^{2x} - B(2A+1) e^{x}           on R
struct PotentialSpec {
    PotentialKind kind = PotentialKind::PoschlTeller;
    double V1 = 0.0, V2 = 0.0, V3 = 0.0;  // PoschlTeller
    double V0 = 0.0, A = 0.0, B = 0.0;    // Morse
    std::shared_ptr<const CubicSpline> table;

    static PotentialSpec poschl_teller(double V1, double V2, double V3) {
        PotentialSpec v;
        v.kind = PotentialKind::PoschlTeller;
        v.V1 = V1;
        v.V2 = V2;
        v.V3 = V3;
        return v;
    }
    static PotentialSpec morse(double V0, double A, double B) {
        PotentialSpec v;
        v.kind = PotentialKind::Morse;
        v.V0 = V0;
        v.A = A;
        v.B = B;
        return v;
    }
    static PotentialSpec tabulated(std::vector<double> x, std::vector<double> vals) {
        PotentialSpec v;
        v.kind = PotentialKind::Tabulated;
        v.table = std::make_shared<CubicSpline>(std::move(x), std::move(vals));
        return v;
    }

    double operator()(double x) const {
        switch (kind) {
            case PotentialKind::PoschlTeller:
                if (!(x > 0.0)) throw DomainError("Poschl-Teller potential defined on (0, inf)");
                return V1 / std::tanh(x) + V2 + V3 * std::sinh(x);
            case PotentialKind::Morse:
                return V0 * std::exp(2.0 * x) - B * (2.0 * A + 1.0) * std::exp(x);
            case PotentialKind::Tabulated: {
                double f, f1, f2;
                table->eval(x, f, f1, f2);
                return f;
            }
        }
        throw DomainError("unreachable potential kind");
    }
};

// V_eff = V + (1/2)(beta+1) M''/M^2 - [alpha(alpha+beta+1)+beta+1] M'^2/M^3.
inline double effective_potential(const PotentialSpec& V, const MassProfile& profile,
                                  const AmbiguityParams& amb, double x) {
    const MassValue m = eval_mass(profile, x);
    const double k = ordering_weight(amb) + amb.beta + 1.0;
    return V(x) + 0.5 * (amb.beta + 1.0) * m.M2 / (m.M * m.M) -
           k * m.M1 * m.M1 / (m.M * m.M * m.M);
}

}  // namespace qemhj::profiles

#endif  // QEMHJ_PROFILES_HPP
