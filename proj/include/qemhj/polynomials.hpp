#ifndef QEMHJ_POLYNOMIALS_HPP
#define QEMHJ_POLYNOMIALS_HPP

#include <cmath>
#include <string>
#include <vector>

#include "qemhj/errors.hpp"

// Jacobi and generalized Laguerre evaluators by three-term recurrence in the
// degree.  Parameters are arbitrary reals (the spectra here need negative,
// non-classical parameter values), so no orthogonality-range checks are made;
// a vanishing recurrence denominator is reported, never masked.

namespace qemhj::poly {

template <typename Scalar>
Scalar eval_jacobi(int n, double l1, double l2, Scalar y) {
    if (n < 0) throw RecurrenceBreakdown("jacobi degree must be non-negative");
    if (n == 0) return Scalar(1);
    Scalar pm1 = Scalar(1);
    Scalar p = Scalar(0.5 * (l1 - l2)) + Scalar(1.0 + 0.5 * (l1 + l2)) * y;
    for (int m = 2; m <= n; ++m) {
        const double s = l1 + l2;
        const double den = 2.0 * m * (m + s) * (2.0 * m + s - 2.0);
        if (den == 0.0)
            throw RecurrenceBreakdown("jacobi recurrence denominator vanished at degree " +
                                      std::to_string(m));
        const double c1 = (2.0 * m + s - 1.0) * (l1 * l1 - l2 * l2);
        const double c2 = (2.0 * m + s - 1.0) * (2.0 * m + s) * (2.0 * m + s - 2.0);
        const double c3 = 2.0 * (m + l1 - 1.0) * (m + l2 - 1.0) * (2.0 * m + s);
        const Scalar pn = ((Scalar(c1) + Scalar(c2) * y) * p - Scalar(c3) * pm1) / Scalar(den);
        pm1 = p;
        p = pn;
    }
    return p;
}

template <typename Scalar>
Scalar eval_laguerre(int n, double k, Scalar y) {
    if (n < 0) throw RecurrenceBreakdown("laguerre degree must be non-negative");
    if (n == 0) return Scalar(1);
    Scalar lm1 = Scalar(1);
    Scalar l = Scalar(k + 1.0) - y;
    for (int m = 1; m + 1 <= n; ++m) {
        const Scalar ln = ((Scalar(2.0 * m + k + 1.0) - y) * l - Scalar(m + k) * lm1) /
                          Scalar(m + 1.0);
        lm1 = l;
        l = ln;
    }
    return l;
}

// d/dy P_n^{(l1,l2)}(y) = (n+l1+l2+1)/2 * P_{n-1}^{(l1+1,l2+1)}(y)
template <typename Scalar>
Scalar eval_jacobi_derivative(int n, double l1, double l2, Scalar y) {
    if (n == 0) return Scalar(0);
    return Scalar(0.5 * (n + l1 + l2 + 1.0)) * eval_jacobi<Scalar>(n - 1, l1 + 1.0, l2 + 1.0, y);
}

template <typename Scalar>
Scalar eval_jacobi_second_derivative(int n, double l1, double l2, Scalar y) {
    if (n <= 1) return Scalar(0);
    return Scalar(0.25 * (n + l1 + l2 + 1.0) * (n + l1 + l2 + 2.0)) *
           eval_jacobi<Scalar>(n - 2, l1 + 2.0, l2 + 2.0, y);
}

// d/dy L_n^{(k)}(y) = -L_{n-1}^{(k+1)}(y)
template <typename Scalar>
Scalar eval_laguerre_derivative(int n, double k, Scalar y) {
    if (n == 0) return Scalar(0);
    return -eval_laguerre<Scalar>(n - 1, k + 1.0, y);
}

template <typename Scalar>
Scalar eval_laguerre_second_derivative(int n, double k, Scalar y) {
    if (n <= 1) return Scalar(0);
    return eval_laguerre<Scalar>(n - 2, k + 2.0, y);
}

// Monomial coefficients (ascending powers), reconstructed through the same
// recurrences.  Fine in double for the degrees used here (n <= 10).
inline std::vector<double> jacobi_monomial_coeffs(int n, double l1, double l2) {
    std::vector<double> pm1{1.0};
    if (n == 0) return pm1;
    std::vector<double> p{0.5 * (l1 - l2), 1.0 + 0.5 * (l1 + l2)};
    for (int m = 2; m <= n; ++m) {
        const double s = l1 + l2;
        const double den = 2.0 * m * (m + s) * (2.0 * m + s - 2.0);
        if (den == 0.0)
            throw RecurrenceBreakdown("jacobi recurrence denominator vanished at degree " +
                                      std::to_string(m));
        const double c1 = (2.0 * m + s - 1.0) * (l1 * l1 - l2 * l2);
        const double c2 = (2.0 * m + s - 1.0) * (2.0 * m + s) * (2.0 * m + s - 2.0);
        const double c3 = 2.0 * (m + l1 - 1.0) * (m + l2 - 1.0) * (2.0 * m + s);
        std::vector<double> pn(m + 1, 0.0);
        for (size_t i = 0; i < p.size(); ++i) {
            pn[i] += c1 * p[i] / den;
            pn[i + 1] += c2 * p[i] / den;
        }
        for (size_t i = 0; i < pm1.size(); ++i) pn[i] -= c3 * pm1[i] / den;
        pm1 = std::move(p);
        p = std::move(pn);
    }
    return p;
}

inline std::vector<double> laguerre_monomial_coeffs(int n, double k) {
    std::vector<double> lm1{1.0};
    if (n == 0) return lm1;
    std::vector<double> l{k + 1.0, -1.0};
    for (int m = 1; m + 1 <= n; ++m) {
        std::vector<double> ln(m + 2, 0.0);
        for (size_t i = 0; i < l.size(); ++i) {
            ln[i] += (2.0 * m + k + 1.0) * l[i] / (m + 1.0);
            ln[i + 1] -= l[i] / (m + 1.0);
        }
        for (size_t i = 0; i < lm1.size(); ++i) ln[i] -= (m + k) * lm1[i] / (m + 1.0);
        lm1 = std::move(l);
        l = std::move(ln);
    }
    return l;
}

}  // namespace qemhj::poly

#endif  // QEMHJ_POLYNOMIALS_HPP
