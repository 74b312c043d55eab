#pragma once

#include <complex>

#include "clausen/numerics.hpp"

namespace clausen {

// Nome for tau = i*t: q = e^{-pi t}. Requires t > 0.
double nome(double t);

// Purely imaginary modulus tau = i*t with the nome cached.
class Modulus {
public:
    explicit Modulus(double t);

    double t() const { return t_; }
    double q() const { return q_; }

private:
    double t_;
    double q_;
};

// Theta argument v (period-1 variable: theta1 vanishes at integers).
struct ComplexArg {
    double re = 0.0;
    double im = 0.0;
};

struct ComplexEvalResult {
    std::complex<double> value{0.0, 0.0};
    double err_bound = 0.0;
    std::int64_t terms_used = 0;
};

// theta1(v | i t) = 2 sum_{n>=0} (-1)^n q^{(n+1/2)^2} sin((2n+1) pi v).
// The argument is reduced by v -> v mod 1 (sign flip per unit shift) first.
// For t < 0.5 the evaluation is routed through the modular S-transform
// (Gaussian dual series at modulus 1/t), which converges for small t.
ComplexEvalResult theta1(ComplexArg v, const Modulus& mod, const Precision& prec = {});
EvalResult theta1(double v, const Modulus& mod, const Precision& prec = {});

// theta1'(0 | i t) = 2 pi sum_{n>=0} (-1)^n (2n+1) q^{(n+1/2)^2}.
// Equals the product form 2 pi q^{1/4} prod (1-q^{2n})^3; for t < 0.5 the
// identity theta1'(0 | i t) = t^{-3/2} theta1'(0 | i/t) is applied.
EvalResult theta1_prime0(const Modulus& mod, const Precision& prec = {});

// eta(i t)^3 = q^{1/4} prod (1-q^{2n})^3, the normalizer below; computed from
// the product for t >= 0.5 and via eta(i/t)^3 t^{-3/2} otherwise.
EvalResult eta_cubed(const Modulus& mod, const Precision& prec = {});

// Normalized theta: theta1(v | i t) / eta(i t)^3 -> 2 sin(pi v) as t -> inf.
EvalResult theta1_normalized(double v, const Modulus& mod, const Precision& prec = {});

// | theta1(v/(i t) | i/t) - (-i) sqrt(t) e^{pi v^2 / t} theta1(v | i t) |,
// both sides evaluated independently with complex arguments.
double s_transform_residual(double v, const Modulus& mod, const Precision& prec = {});

}  // namespace clausen
