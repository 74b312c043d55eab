#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <span>

#include "clausen/errors.hpp"

namespace clausen {

// Tolerance policy shared by every series and integral in the library.
struct Precision {
    double abs_tol = 1e-12;              // target absolute error for series evaluations
    std::int64_t max_terms = 20'000'000; // hard cap on series terms
    double quad_tol = 1e-10;             // absolute tolerance for adaptive quadrature

    void validate() const;
};

// Value plus the accumulated absolute error claim and work count.
struct EvalResult {
    double value = 0.0;
    double err_bound = 0.0;
    std::int64_t terms_used = 0;
};

// Exact rational, used for Bernoulli numbers.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Neumaier-compensated accumulator. Adding through this keeps the rounding
// error of long sums at O(eps) instead of O(n eps).
class CompensatedAccumulator {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Compensated sum of a finite sequence. Empty input sums to zero.
double compensated_sum(std::span<const double> terms);

// B_{2m} as an exact rational, 1 <= m <= 15 (B_2 = 1/6, ..., B_30).
Rational bernoulli_even(int m);

// zeta(s) for integer s >= 2. Even s <= 30 uses the Bernoulli closed form
//   zeta(2m) = (-1)^{m+1} B_{2m} (2pi)^{2m} / (2 (2m)!),
// otherwise the p-series is summed to K terms and the integral tail
// int_K^inf u^{-s} du is added; the sandwich 0 <= tail_int - tail <= K^{-s}
// gives the error bound and fixes K = ceil(tol^{-1/s}).
EvalResult zeta_int(int s, const Precision& prec = {});

// Direct-summation route (also for even s); exposed so the closed form and
// the summation can be checked against each other.
EvalResult zeta_int_series(int s, const Precision& prec = {});

// Adaptive Gauss-Kronrod (7-15) quadrature of f over [a, b]. Panels touching
// an endpoint are pre-bisected geometrically so integrable log singularities
// at a or b converge; afterwards the worst-error panel is bisected until the
// summed error estimate drops below prec.quad_tol.
EvalResult adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                              const Precision& prec = {});

}  // namespace clausen
