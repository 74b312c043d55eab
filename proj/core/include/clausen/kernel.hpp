#pragma once

#include <complex>
#include <vector>

#include "clausen/theta.hpp"

namespace clausen {

enum class CoeffRoute { taylor, lambert };

// Taylor family of the elliptic kernel: coeffs[m-1] = c_{2m}(t) in
//   K_ell(v | i t) = sum_{m>=1} c_{2m}(t) v^{2m}.
struct KernelCoefficients {
    double t = 0.0;
    std::vector<double> coeffs;
    CoeffRoute route = CoeffRoute::taylor;

    double c(int m) const { return coeffs.at(static_cast<std::size_t>(m) - 1); }
    int order_count() const { return static_cast<int>(coeffs.size()); }
};

// Elliptic kernel K_ell(v | i t) = -2 log( theta1(v|it) / (theta1'(0|it) v) ),
// finite at v = 0 (removable singularity, K_ell(0) = 0). Requires |v| < 1.
EvalResult k_ell(double v, const Modulus& mod, const Precision& prec = {});

// Complex-argument kernel, used for Taylor extraction on a circle.
std::complex<double> k_ell(std::complex<double> v, const Modulus& mod, const Precision& prec = {});

// Circular and hyperbolic counterparts with the same normalization:
//   -2 log(sin(pi v)/(pi v))  and  -2 log(sinh(pi v)/(pi v)); both 0 at v = 0.
double circular_kernel(double v);
double hyperbolic_kernel(double v);

// c_{2m}(t) for m = 1..order_count, extracted from samples of the kernel:
// trapezoidal Fourier sums over N points of K_ell on the circle |v| = r
// recover the Taylor coefficients directly (c_{2m} = A_{2m}/r^{2m} with A the
// 2m-th circle harmonic). order_count <= 8.
KernelCoefficients kernel_coeffs_taylor(const Modulus& mod, int order_count,
                                        const Precision& prec = {});

// Closed q-series route (requires t >= 0.5 so the Lambert tail stays
// geometric with ratio <= e^{-pi}):
//   c_{2m}(t) = 2 zeta(2m)/m
//             + 4 (-1)^m (2pi)^{2m}/(2m)! * sum_k k^{2m-1} q^{2k}/(1-q^{2k}).
KernelCoefficients kernel_coeffs_lambert(const Modulus& mod, int order_count,
                                         const Precision& prec = {});

}  // namespace clausen
