#include "clausen/kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace clausen {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double factorial(int n) {
    double f = 1.0;
    for (int j = 2; j <= n; ++j) f *= j;
    return f;
}

}  // namespace

double circular_kernel(double v) {
    if (v == 0.0) return 0.0;
    if (!(std::abs(v) < 1.0)) throw std::domain_error("circular_kernel: require |v| < 1");
    const double z = kPi * v;
    if (std::abs(z) < 1e-2) {
        const double z2 = z * z;
        return z2 * (1.0 / 3.0 + z2 * (1.0 / 90.0 + z2 * (2.0 / 2835.0)));
    }
    return -2.0 * std::log(std::sin(z) / z);
}

double hyperbolic_kernel(double v) {
    if (v == 0.0) return 0.0;
    if (!std::isfinite(v)) throw std::domain_error("hyperbolic_kernel: argument must be finite");
    const double z = kPi * v;
    if (std::abs(z) < 1e-2) {
        const double z2 = z * z;
        return z2 * (-1.0 / 3.0 + z2 * (1.0 / 90.0 - z2 * (2.0 / 2835.0)));
    }
    return -2.0 * std::log(std::sinh(z) / z);
}

EvalResult k_ell(double v, const Modulus& mod, const Precision& prec) {
    prec.validate();
    if (v == 0.0) return EvalResult{0.0, 0.0, 0};
    if (!(std::abs(v) < 1.0)) throw std::domain_error("k_ell: require |v| < 1");
    const EvalResult th = theta1_normalized(v, mod, prec);
    const double ratio = th.value / (kTwoPi * v);
    if (!(ratio > 0.0)) throw std::domain_error("k_ell: theta ratio is not positive");
    const double value = -2.0 * std::log(ratio);
    const double err = 2.0 * (th.err_bound / std::abs(th.value)) + 4e-16 * (1.0 + std::abs(value));
    return EvalResult{value, err, th.terms_used};
}

std::complex<double> k_ell(std::complex<double> v, const Modulus& mod, const Precision& prec) {
    prec.validate();
    if (v == std::complex<double>{0.0, 0.0}) return {0.0, 0.0};
    const ComplexEvalResult th = theta1(ComplexArg{v.real(), v.imag()}, mod, prec);
    const EvalResult dp = theta1_prime0(mod, prec);
    const std::complex<double> ratio = th.value / (dp.value * v);
    if (!(std::abs(ratio) > 0.0) || !std::isfinite(std::abs(ratio)))
        throw std::domain_error("k_ell: theta ratio degenerate");
    return -2.0 * std::log(ratio);
}

KernelCoefficients kernel_coeffs_taylor(const Modulus& mod, int order_count,
                                        const Precision& prec) {
    prec.validate();
    if (order_count < 1 || order_count > 8)
        throw std::invalid_argument("kernel_coeffs_taylor: require 1 <= order_count <= 8");
    const double t = mod.t();
    if (!(t >= 0.25))
        throw std::domain_error("kernel_coeffs_taylor: require t >= 0.25");

    // Trapezoidal Fourier sums over the circle |v| = r recover Taylor
    // coefficients: c_{2m} = (1/(N r^{2m})) sum_j K(r e^{i phi_j}) e^{-2m i phi_j}.
    // r stays well inside the nearest kernel singularity (v = +-1, +-i t).
    const double r = std::min(0.3, 0.55 * t);
    constexpr int N = 64;

    std::complex<double> samples[N];
    for (int j = 0; j < N; ++j) {
        const double phi = kTwoPi * j / N;
        const std::complex<double> v{r * std::cos(phi), r * std::sin(phi)};
        samples[j] = k_ell(v, mod, prec);
    }

    KernelCoefficients out;
    out.t = t;
    out.route = CoeffRoute::taylor;
    double max_spurious = 0.0;
    for (int m = 1; m <= order_count; ++m) {
        std::complex<double> acc{0.0, 0.0};
        for (int j = 0; j < N; ++j) {
            const double phi = -kTwoPi * (2.0 * m) * j / N;
            acc += samples[j] * std::complex<double>{std::cos(phi), std::sin(phi)};
        }
        acc /= static_cast<double>(N);
        const double scale = std::pow(r, 2.0 * m);
        out.coeffs.push_back(acc.real() / scale);
        max_spurious = std::max(max_spurious, std::abs(acc.imag()) / scale);
    }
    // K is even and real on the real axis: odd harmonics and imaginary parts
    // of even harmonics measure the extraction residual.
    std::complex<double> odd{0.0, 0.0};
    for (int j = 0; j < N; ++j) {
        const double phi = -kTwoPi * j / N;
        odd += samples[j] * std::complex<double>{std::cos(phi), std::sin(phi)};
    }
    max_spurious = std::max(max_spurious, std::abs(odd) / (static_cast<double>(N) * r));
    if (max_spurious > 1e-6)
        throw ConvergenceError("kernel_coeffs_taylor: extraction residual above tolerance");
    return out;
}

KernelCoefficients kernel_coeffs_lambert(const Modulus& mod, int order_count,
                                         const Precision& prec) {
    prec.validate();
    if (order_count < 1 || order_count > 8)
        throw std::invalid_argument("kernel_coeffs_lambert: require 1 <= order_count <= 8");
    const double t = mod.t();
    if (!(t >= 0.5))
        throw std::domain_error(
            "kernel_coeffs_lambert: require t >= 0.5 (reduce via the theta S-transform first)");

    const double q2 = mod.q() * mod.q();
    KernelCoefficients out;
    out.t = t;
    out.route = CoeffRoute::lambert;
    for (int m = 1; m <= order_count; ++m) {
        const double front = 4.0 * ((m % 2 == 0) ? 1.0 : -1.0) *
                             std::pow(kTwoPi, 2.0 * m) / factorial(2 * m);
        // Lambert sum: sum_k k^{2m-1} q^{2k} / (1 - q^{2k})
        CompensatedAccumulator lam;
        double q2k = q2;
        const double coeff_tol = prec.abs_tol / (std::abs(front) * 4.0);
        // past k >= 2m the term ratio is bounded by e * q^2 (< 0.12 for t >= 0.5)
        const double ratio_bound = 2.72 * q2;
        for (std::int64_t k = 1;; ++k) {
            const double term =
                std::pow(static_cast<double>(k), 2.0 * m - 1.0) * q2k / (1.0 - q2k);
            lam.add(term);
            q2k *= q2;
            if (k >= 2 * m && term * ratio_bound / (1.0 - ratio_bound) < coeff_tol) break;
            if (k > prec.max_terms)
                throw ConvergenceError("kernel_coeffs_lambert: series did not converge");
        }
        out.coeffs.push_back(2.0 * zeta_int(2 * m, prec).value / m + front * lam.value());
    }
    return out;
}

}  // namespace clausen
