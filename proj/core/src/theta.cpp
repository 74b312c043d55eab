#include "clausen/theta.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace clausen {

namespace {

constexpr double kPi = std::numbers::pi;

struct Reduced {
    double re = 0.0;
    double sign = 1.0;
};

// v -> v mod 1 with theta1(v + 1) = -theta1(v).
Reduced reduce_unit(double re) {
    const double k = std::nearbyint(re);
    const double r = re - k;
    const double parity = std::fmod(std::abs(k), 2.0);
    return Reduced{r, parity == 1.0 ? -1.0 : 1.0};
}

// Direct series for t >= 0.5 (real argument, already reduced):
//   2 sum (-1)^n q^{(n+1/2)^2} sin((2n+1) pi v)
EvalResult series_real(double v, double sign, double t, const Precision& prec) {
    CompensatedAccumulator acc;
    std::int64_t n = 0;
    double env = 0.0;
    for (;; ++n) {
        const double half = static_cast<double>(n) + 0.5;
        env = 2.0 * std::exp(-kPi * t * half * half);
        if (env < 0.25 * prec.abs_tol && n >= 1) break;
        const double term = env * std::sin((2.0 * n + 1.0) * kPi * v);
        acc.add((n % 2 == 0) ? term : -term);
        if (n >= prec.max_terms) throw ConvergenceError("theta1: series did not converge");
    }
    return EvalResult{sign * acc.value(), 2.0 * env + 4e-16, n};
}

// Gaussian dual series for t < 0.5 (real argument, already reduced):
//   t^{-1/2} sum (-1)^n [ e^{-pi (n+1/2-v)^2 / t} - e^{-pi (n+1/2+v)^2 / t} ]
EvalResult dual_real(double v, double sign, double t, const Precision& prec) {
    const double pref = 1.0 / std::sqrt(t);
    CompensatedAccumulator acc;
    std::int64_t n = 0;
    double env = 0.0;
    for (;; ++n) {
        const double half = static_cast<double>(n) + 0.5;
        const double am = half - v;
        const double ap = half + v;
        const double ea = std::exp(-kPi * am * am / t);
        const double eb = std::exp(-kPi * ap * ap / t);
        env = pref * std::max(ea, eb);
        const double term = pref * (ea - eb);
        acc.add((n % 2 == 0) ? term : -term);
        if (env < 0.25 * prec.abs_tol && n >= 1) break;
        if (n >= prec.max_terms) throw ConvergenceError("theta1: dual series did not converge");
    }
    return EvalResult{sign * acc.value(), 2.0 * env + 4e-16, n + 1};
}

std::complex<double> csum_term(std::complex<double> z) { return std::sin(z); }

ComplexEvalResult series_complex(std::complex<double> v, double sign, double t,
                                 const Precision& prec) {
    const double aim = std::abs(v.imag());
    // envelope peaks at e^{pi im^2 / t} around n+1/2 ~ |im|/t
    if (kPi * aim * aim / t > 690.0)
        throw ConvergenceError("theta1: argument imaginary part too large (overflow)");

    std::complex<double> sum{0.0, 0.0};
    const double peak = aim / t;
    std::int64_t n = 0;
    double env = 0.0, env_prev = 0.0;
    for (;; ++n) {
        const double half = static_cast<double>(n) + 0.5;
        env = 2.0 * std::exp(-kPi * t * half * half + (2.0 * n + 1.0) * kPi * aim);
        if (n >= 1 && half > peak && env < 0.25 * prec.abs_tol && env < 0.5 * env_prev) break;
        const double qn = std::exp(-kPi * t * half * half);
        std::complex<double> term = 2.0 * qn * csum_term((2.0 * n + 1.0) * kPi * v);
        sum += (n % 2 == 0) ? term : -term;
        env_prev = env;
        if (n >= prec.max_terms) throw ConvergenceError("theta1: series did not converge");
    }
    return ComplexEvalResult{sign * sum, 2.0 * env + 4e-16, n};
}

ComplexEvalResult dual_complex(std::complex<double> v, double sign, double t,
                               const Precision& prec) {
    const double aim = std::abs(v.imag());
    if (kPi * aim * aim / t > 690.0)
        throw ConvergenceError("theta1: argument imaginary part too large (overflow)");
    const double pref = 1.0 / std::sqrt(t);
    std::complex<double> sum{0.0, 0.0};
    std::int64_t n = 0;
    double env = 0.0;
    for (;; ++n) {
        const double half = static_cast<double>(n) + 0.5;
        const std::complex<double> am = half - v;
        const std::complex<double> ap = half + v;
        const std::complex<double> ea = std::exp(-kPi * am * am / t);
        const std::complex<double> eb = std::exp(-kPi * ap * ap / t);
        const std::complex<double> term = pref * (ea - eb);
        sum += (n % 2 == 0) ? term : -term;
        env = pref * std::max(std::abs(ea), std::abs(eb));
        if (env < 0.25 * prec.abs_tol && n >= 1) break;
        if (n >= prec.max_terms) throw ConvergenceError("theta1: dual series did not converge");
    }
    return ComplexEvalResult{sign * sum, 2.0 * env + 4e-16, n + 1};
}

}  // namespace

double nome(double t) {
    if (!(t > 0.0)) throw std::domain_error("nome: require t > 0");
    return std::exp(-kPi * t);
}

Modulus::Modulus(double t) : t_(t), q_(nome(t)) {}

EvalResult theta1(double v, const Modulus& mod, const Precision& prec) {
    prec.validate();
    const Reduced r = reduce_unit(v);
    if (r.re == 0.0) return EvalResult{0.0, 0.0, 0};
    if (mod.t() < 0.5) return dual_real(r.re, r.sign, mod.t(), prec);
    return series_real(r.re, r.sign, mod.t(), prec);
}

ComplexEvalResult theta1(ComplexArg v, const Modulus& mod, const Precision& prec) {
    prec.validate();
    if (!(std::isfinite(v.re) && std::isfinite(v.im)))
        throw std::domain_error("theta1: argument components must be finite");
    const Reduced r = reduce_unit(v.re);
    const std::complex<double> z{r.re, v.im};
    if (v.im == 0.0) {
        const EvalResult re = theta1(v.re, mod, prec);
        return ComplexEvalResult{{re.value, 0.0}, re.err_bound, re.terms_used};
    }
    if (mod.t() < 0.5) return dual_complex(z, r.sign, mod.t(), prec);
    return series_complex(z, r.sign, mod.t(), prec);
}

EvalResult theta1_prime0(const Modulus& mod, const Precision& prec) {
    prec.validate();
    const double t = mod.t();
    if (t < 0.5) {
        // theta1'(0 | i t) = t^{-3/2} theta1'(0 | i/t)
        EvalResult dual = theta1_prime0(Modulus(1.0 / t), prec);
        const double scale = std::pow(t, -1.5);
        return EvalResult{scale * dual.value, scale * dual.err_bound + 4e-16, dual.terms_used};
    }
    CompensatedAccumulator acc;
    std::int64_t n = 0;
    double env = 0.0;
    for (;; ++n) {
        const double half = static_cast<double>(n) + 0.5;
        env = (2.0 * n + 1.0) * std::exp(-kPi * t * half * half);
        if (env * 2.0 * kPi < 0.25 * prec.abs_tol && n >= 1) break;
        acc.add((n % 2 == 0) ? env : -env);
        if (n >= prec.max_terms) throw ConvergenceError("theta1_prime0: series did not converge");
    }
    return EvalResult{2.0 * kPi * acc.value(), 4.0 * kPi * env + 4e-16, n};
}

EvalResult eta_cubed(const Modulus& mod, const Precision& prec) {
    prec.validate();
    const double t = mod.t();
    if (t < 0.5) {
        EvalResult dual = eta_cubed(Modulus(1.0 / t), prec);
        const double scale = std::pow(t, -1.5);
        return EvalResult{scale * dual.value, scale * dual.err_bound + 4e-16, dual.terms_used};
    }
    const double q2 = std::exp(-2.0 * kPi * t);
    double prod = 1.0;
    double q2n = q2;
    std::int64_t n = 0;
    while (q2n > 1e-18) {
        const double f = 1.0 - q2n;
        prod *= f * f * f;
        q2n *= q2;
        ++n;
        if (n > 4096) throw ConvergenceError("eta_cubed: product did not converge");
    }
    const double value = std::exp(-kPi * t * 0.25) * prod;
    return EvalResult{value, 8e-16 * std::abs(value) + 1e-300, n};
}

EvalResult theta1_normalized(double v, const Modulus& mod, const Precision& prec) {
    prec.validate();
    const EvalResult th = theta1(v, mod, prec);
    const EvalResult e3 = eta_cubed(mod, prec);
    const double value = th.value / e3.value;
    const double err =
        th.err_bound / std::abs(e3.value) + std::abs(value) * (e3.err_bound / std::abs(e3.value));
    return EvalResult{value, err, th.terms_used + e3.terms_used};
}

double s_transform_residual(double v, const Modulus& mod, const Precision& prec) {
    prec.validate();
    const double t = mod.t();
    // LHS: theta1 at the dual modulus i/t with argument v/(it) = -i v/t.
    const ComplexEvalResult lhs = theta1(ComplexArg{0.0, -v / t}, Modulus(1.0 / t), prec);
    const EvalResult th = theta1(v, mod, prec);
    const std::complex<double> rhs =
        std::complex<double>(0.0, -1.0) * std::sqrt(t) * std::exp(kPi * v * v / t) * th.value;
    return std::abs(lhs.value - rhs);
}

}  // namespace clausen
