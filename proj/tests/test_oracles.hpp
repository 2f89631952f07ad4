#ifndef QEMHJ_TEST_ORACLES_HPP
#define QEMHJ_TEST_ORACLES_HPP

// Test-only independent oracles: brute-force series evaluations and
// high-order finite differences.  Nothing here shares code with the library
// paths it checks.

#include <cmath>

namespace test_oracles {

// 5-point central first derivative, O(h^4).
template <typename F>
double fd_first(const F& f, double x, double h) {
    return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

// 5-point central second derivative, O(h^4).
template <typename F>
double fd_second(const F& f, double x, double h) {
    return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) /
           (12 * h * h);
}

inline double pochhammer(double a, int m) {
    double p = 1.0;
    for (int i = 0; i < m; ++i) p *= a + i;
    return p;
}

inline double factorial(int m) {
    double p = 1.0;
    for (int i = 2; i <= m; ++i) p *= i;
    return p;
}

// Hypergeometric-sum form of the Jacobi polynomial:
// P_n^{(a,b)}(y) = ((a+1)_n / n!) * sum_k (-n)_k (n+a+b+1)_k / ((a+1)_k k!) ((1-y)/2)^k
inline double jacobi_series(int n, double a, double b, double y) {
    const double z = 0.5 * (1.0 - y);
    double sum = 0.0;
    for (int k = 0; k <= n; ++k) {
        sum += pochhammer(-n, k) * pochhammer(n + a + b + 1.0, k) /
               (pochhammer(a + 1.0, k) * factorial(k)) * std::pow(z, k);
    }
    return pochhammer(a + 1.0, n) / factorial(n) * sum;
}

// L_n^{(k)}(y) = sum_i (-1)^i (k+i+1)_{n-i} / ((n-i)! i!) y^i
inline double laguerre_series(int n, double k, double y) {
    double sum = 0.0;
    double sign = 1.0;
    for (int i = 0; i <= n; ++i) {
        sum += sign * pochhammer(k + i + 1.0, n - i) / (factorial(n - i) * factorial(i)) *
               std::pow(y, i);
        sign = -sign;
    }
    return sum;
}

}  // namespace test_oracles

#endif
