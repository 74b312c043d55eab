#include "clausen/clausen.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace clausen {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSingularityGuard = 1e-8;

double pow_int_neg(double k, int s) {
    const double inv = 1.0 / k;
    switch (s) {
        case 1: return inv;
        case 2: return inv * inv;
        case 3: return inv * inv * inv;
        case 4: {
            const double i2 = inv * inv;
            return i2 * i2;
        }
        case 5: {
            const double i2 = inv * inv;
            return i2 * i2 * inv;
        }
        default: return std::pow(inv, static_cast<double>(s));
    }
}

double factorial(int n) {
    double f = 1.0;
    for (int j = 2; j <= n; ++j) f *= j;
    return f;
}

double harmonic(int n) {
    double h = 0.0;
    for (int j = 1; j <= n; ++j) h += 1.0 / j;
    return h;
}

// zeta(1 - 2r) = -B_{2r} / (2r); beyond the exact table the reflection
// formula zeta(1-2r) = 2 (-1)^r (2r-1)! zeta(2r) / (2pi)^{2r} takes over.
double zeta_neg_odd(int r, const Precision& prec) {
    if (r < 1) throw std::domain_error("zeta_neg_odd: require r >= 1");
    if (r <= 15) {
        const Rational b = bernoulli_even(r);
        return -b.to_double() / (2.0 * r);
    }
    const double mag =
        2.0 * std::exp(std::lgamma(2.0 * r) - 2.0 * r * std::log(kTwoPi)) * zeta_int(2 * r, prec).value;
    return (r % 2 == 0) ? mag : -mag;
}

// zeta(s) for the integer arguments appearing in the small-argument
// expansions: s >= 2 regular, s = 0 -> -1/2, negative even -> 0,
// negative odd via zeta_neg_odd. s = 1 must be excluded by the caller.
double zeta_any(int s, const Precision& prec) {
    if (s >= 2) return zeta_int(s, prec).value;
    if (s == 1) throw std::logic_error("zeta_any: s = 1 is the excluded index");
    if (s == 0) return -0.5;
    if ((-s) % 2 == 0) return 0.0;  // negative even integers are trivial zeros
    return zeta_neg_odd((1 - s) / 2, prec);
}

// Direct Fourier summation of sum w_n(k theta)/k^n for theta in [0.5, pi].
// Dirichlet-kernel tail bound: |sum_{k>K}| <= 1 / (sin(theta/2) K^n).
EvalResult circular_direct(int n, double theta, const Precision& prec) {
    const double M = 1.0 / std::sin(0.5 * theta);
    const double kf = std::ceil(std::pow(M / prec.abs_tol, 1.0 / static_cast<double>(n)));
    const auto K = static_cast<std::int64_t>(std::max(kf, 4.0));
    if (K > prec.max_terms)
        throw ConvergenceError("circular_cl: term budget exhausted before tolerance");

    const bool use_sin = (n % 2 == 0);
    const double c1 = std::cos(theta);
    const double s1 = std::sin(theta);
    double ck = 1.0, sk = 0.0;  // cos(k theta), sin(k theta) at k = 0
    CompensatedAccumulator acc;
    for (std::int64_t k = 1; k <= K; ++k) {
        if (k % 512 == 0) {
            // resynchronize the rotation recurrence against libm
            const double kth = static_cast<double>(k) * theta;
            ck = std::cos(kth);
            sk = std::sin(kth);
        } else {
            const double c = ck * c1 - sk * s1;
            const double s = sk * c1 + ck * s1;
            ck = c;
            sk = s;
        }
        acc.add((use_sin ? sk : ck) * pow_int_neg(static_cast<double>(k), n));
    }
    const double tail = M * pow_int_neg(static_cast<double>(K), n);
    return EvalResult{acc.value(), tail + 2e-15, K};
}

// Small-argument route, theta in (0, 0.5): the standard polylog expansion
//   Li_n(e^{i theta}) = (i theta)^{n-1}/(n-1)! (H_{n-1} - log(-i theta))
//                     + sum_{j != n-1} zeta(n-j) (i theta)^j / j!
// taken to its real (odd n) or imaginary (even n) part.
EvalResult circular_small(int n, double theta, const Precision& prec) {
    const double log_term_sign = (n % 2 == 0) ? ((n / 2) % 2 == 0 ? -1.0 : 1.0)
                                              : (((n - 1) / 2) % 2 == 0 ? 1.0 : -1.0);
    CompensatedAccumulator acc;
    acc.add(log_term_sign * std::pow(theta, n - 1) / factorial(n - 1) *
            (harmonic(n - 1) - std::log(theta)));

    const int skip_r = (n % 2 == 0) ? (n / 2 - 1) : ((n - 1) / 2);
    const int jpar = (n % 2 == 0) ? 1 : 0;  // odd j for even n, even j for odd n
    std::int64_t terms = 1;
    double term = 0.0;
    for (int r = 0;; ++r) {
        const int j = 2 * r + jpar;
        if (r == skip_r) continue;
        const double sign = (r % 2 == 0) ? 1.0 : -1.0;
        term = sign * zeta_any(n - j, prec) * std::pow(theta, j) / factorial(j);
        acc.add(term);
        ++terms;
        if (r > skip_r && std::abs(term) < 0.25 * prec.abs_tol) break;
        if (r > 200) throw ConvergenceError("circular_cl: expansion did not converge");
    }
    return EvalResult{acc.value(), 2.0 * std::abs(term) + 2e-16, terms};
}

// Elliptic correction sum_k d_k w_n(k theta) / k^n with
// d_k = 2 q^{2k}/(1-q^{2k}); geometric tail in q^{2k}.
EvalResult elliptic_correction(int n, double theta, double q, const Precision& prec) {
    const double q2 = q * q;
    CompensatedAccumulator acc;
    const bool use_sin = (n % 2 == 0);
    double q2k = q2;
    std::int64_t k = 1;
    for (;; ++k) {
        const double d = 2.0 * q2k / (1.0 - q2k);
        const double w = use_sin ? std::sin(k * theta) : std::cos(k * theta);
        acc.add(d * w * pow_int_neg(static_cast<double>(k), n));
        q2k *= q2;
        const double tail = 2.0 * q2k / ((1.0 - q2) * (1.0 - q2));
        if (tail < 0.25 * prec.abs_tol) break;
        if (k > prec.max_terms)
            throw ConvergenceError("elliptic_cl: correction series did not converge");
    }
    const double tail = 2.0 * q2k / ((1.0 - q2) * (1.0 - q2));
    return EvalResult{acc.value(), 2.0 * tail + 2e-16, k};
}

Precision with_tol(const Precision& prec, double tol) {
    Precision p = prec;
    p.abs_tol = tol;
    return p;
}

}  // namespace

const char* Family::name() const {
    switch (tag) {
        case Tag::circular: return "circular";
        case Tag::elliptic: return "elliptic";
        case Tag::hyperbolic: return "hyperbolic";
    }
    return "unknown";
}

double fourier_weight(std::int64_t k, const Family& family) {
    if (k < 1) throw std::domain_error("fourier_weight: require k >= 1");
    if (family.tag != Family::Tag::elliptic) return 1.0;
    const double t = family.modulus->t();
    const double q2k = std::exp(-kTwoPi * static_cast<double>(k) * t);
    return 1.0 + 2.0 * q2k / (1.0 - q2k);
}

EvalResult circular_cl(int n, double x, const Precision& prec) {
    prec.validate();
    if (n < 1) throw std::domain_error("circular_cl: require n >= 1");

    double theta = std::remainder(x, kTwoPi);  // in [-pi, pi]
    double sign = 1.0;
    if (n % 2 == 0 && theta < 0.0) sign = -1.0;  // even levels are odd functions
    theta = std::abs(theta);

    if (n == 1) {
        if (theta < kSingularityGuard)
            throw std::domain_error("circular_cl: Cl_1 is singular at x = 0 (mod 2pi)");
        const double value = -std::log(2.0 * std::sin(0.5 * theta));
        return EvalResult{value, 4e-16 * (1.0 + std::abs(value)), 0};
    }
    if (theta == 0.0) {
        if (n % 2 == 0) return EvalResult{0.0, 0.0, 0};
        return zeta_int(n, prec);
    }
    EvalResult r = (theta < 0.5) ? circular_small(n, theta, prec) : circular_direct(n, theta, prec);
    r.value *= sign;
    return r;
}

EvalResult elliptic_cl(int n, double x, const Modulus& mod, const Precision& prec) {
    prec.validate();
    if (n < 1) throw std::domain_error("elliptic_cl: require n >= 1");

    double theta = std::remainder(x, kTwoPi);
    double sign = 1.0;
    if (n % 2 == 0 && theta < 0.0) sign = -1.0;
    theta = std::abs(theta);

    if (n == 1) {
        if (theta < kSingularityGuard)
            throw std::domain_error("elliptic_cl: ECl_1 is singular at x = 0 (mod 2pi)");
        // accelerated bridge: -log thetahat1(x/(2pi)) + C(t)
        const Precision half = with_tol(prec, 0.5 * prec.abs_tol);
        const EvalResult th = theta1_normalized(theta / kTwoPi, mod, half);
        const EvalResult c = elliptic_bridge_constant(mod, half);
        const double value = -std::log(th.value) + c.value;
        const double err = th.err_bound / th.value + c.err_bound + 4e-16;
        return EvalResult{value, err, th.terms_used + c.terms_used};
    }

    const Precision half = with_tol(prec, 0.5 * prec.abs_tol);
    EvalResult base = circular_cl(n, theta, half);
    EvalResult corr = elliptic_correction(n, theta, mod.q(), half);
    EvalResult r;
    r.value = sign * (base.value + corr.value);
    r.err_bound = base.err_bound + corr.err_bound;
    r.terms_used = base.terms_used + corr.terms_used;
    return r;
}

EvalResult elliptic_cl1_series(double x, const Modulus& mod, const Precision& prec) {
    prec.validate();
    const double theta = std::abs(std::remainder(x, kTwoPi));
    if (theta < kSingularityGuard)
        throw std::domain_error("elliptic_cl1_series: singular at x = 0 (mod 2pi)");
    const Precision half = with_tol(prec, 0.5 * prec.abs_tol);
    const double base = -std::log(2.0 * std::sin(0.5 * theta));
    const EvalResult corr = elliptic_correction(1, theta, mod.q(), half);
    return EvalResult{base + corr.value, corr.err_bound + 4e-16 * (1.0 + std::abs(base)),
                      corr.terms_used};
}

EvalResult elliptic_bridge_constant(const Modulus& mod, const Precision& prec) {
    prec.validate();
    // C(t) = 2 sum_k q^{2k} / (k (1 - q^{2k}))
    const double q2 = mod.q() * mod.q();
    CompensatedAccumulator acc;
    double q2k = q2;
    std::int64_t k = 1;
    for (;; ++k) {
        acc.add(2.0 * q2k / (static_cast<double>(k) * (1.0 - q2k)));
        q2k *= q2;
        const double tail = 2.0 * q2k / ((1.0 - q2) * (1.0 - q2));
        if (tail < 0.25 * prec.abs_tol) break;
        if (k > prec.max_terms)
            throw ConvergenceError("elliptic_bridge_constant: series did not converge");
    }
    return EvalResult{acc.value(), 0.5 * prec.abs_tol + 2e-16, k};
}

namespace {

// Li_n(e^{-x}) for x >= 0.5: plain geometric series.
EvalResult polylog_exp_direct(int n, double x, const Precision& prec) {
    const double r = std::exp(-x);
    CompensatedAccumulator acc;
    double ekx = r;
    std::int64_t k = 1;
    for (;; ++k) {
        acc.add(ekx * pow_int_neg(static_cast<double>(k), n));
        ekx *= r;
        if (ekx / (1.0 - r) < 0.25 * prec.abs_tol) break;
        if (k > prec.max_terms) throw ConvergenceError("hyperbolic_cl: series did not converge");
    }
    return EvalResult{acc.value(), 2.0 * ekx / (1.0 - r) + 2e-16, k};
}

// Li_n(e^{-x}) for 0 < x < 0.5:
//   (-x)^{n-1}/(n-1)! (H_{n-1} - log x) + sum_{j != n-1} zeta(n-j) (-x)^j / j!
EvalResult polylog_exp_small(int n, double x, const Precision& prec) {
    CompensatedAccumulator acc;
    const double lead_sign = ((n - 1) % 2 == 0) ? 1.0 : -1.0;
    const double lead = lead_sign * std::pow(x, n - 1) / factorial(n - 1);
    acc.add(lead * (harmonic(n - 1) - std::log(x)));
    std::int64_t terms = 1;
    double term = 0.0;
    for (int j = 0;; ++j) {
        if (j == n - 1) continue;
        const double xj_sign = (j % 2 == 0) ? 1.0 : -1.0;
        term = zeta_any(n - j, prec) * xj_sign * std::pow(x, j) / factorial(j);
        acc.add(term);
        ++terms;
        if (j > n + 2 && std::abs(term) < 0.25 * prec.abs_tol) break;
        if (j > 300) throw ConvergenceError("hyperbolic_cl: expansion did not converge");
    }
    return EvalResult{acc.value(), 2.0 * std::abs(term) + 2e-16, terms};
}

}  // namespace

EvalResult hyperbolic_cl(int n, double x, const Precision& prec) {
    prec.validate();
    if (n < 1) throw std::domain_error("hyperbolic_cl: require n >= 1");
    if (n == 1) {
        if (!(x > 0.0)) throw std::domain_error("hyperbolic_cl: HCl_1 requires x > 0");
        const double value = -std::log(2.0 * std::sinh(0.5 * x));
        return EvalResult{value, 4e-16 * (1.0 + std::abs(value)), 0};
    }
    if (x < 0.0) throw std::domain_error("hyperbolic_cl: require x >= 0 for n >= 2");

    const double rho = ((n % 2 == 0) ? 1.0 : -1.0) * std::pow(x, n) / (2.0 * factorial(n));
    EvalResult li;
    if (x == 0.0) {
        li = zeta_int(n, prec);
    } else if (x >= 0.5) {
        li = polylog_exp_direct(n, x, prec);
    } else {
        li = polylog_exp_small(n, x, prec);
    }
    return EvalResult{li.value + rho, li.err_bound + 4e-16 * std::abs(rho), li.terms_used};
}

}  // namespace clausen
