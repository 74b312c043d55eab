#pragma once

#include <optional>

#include "clausen/theta.hpp"

namespace clausen {

// One of the three CL-type regimes. The elliptic regime carries its modulus.
struct Family {
    enum class Tag { circular, elliptic, hyperbolic };

    Tag tag = Tag::circular;
    std::optional<Modulus> modulus;

    static Family circular() { return {Tag::circular, std::nullopt}; }
    static Family elliptic(double t) { return {Tag::elliptic, Modulus(t)}; }
    static Family hyperbolic() { return {Tag::hyperbolic, std::nullopt}; }

    const char* name() const;
};

// Fourier weight a_k multiplying 1/k^n: 1 in the circular (and hyperbolic)
// regime; coth(pi k t) = 1 + 2 q^{2k}/(1-q^{2k}) in the elliptic one.
double fourier_weight(std::int64_t k, const Family& family);

// Classical Clausen function, 2pi-periodic:
//   Cl_n(x) = sum sin(kx)/k^n (n even),  sum cos(kx)/k^n (n odd).
// n = 1 is the closed form -log(2 sin(x/2)); x = 0 (mod 2pi) is then singular.
EvalResult circular_cl(int n, double x, const Precision& prec = {});

// Elliptic Clausen function ECl_n(x; i t) = sum_k a_k(t) w_n(kx) / k^n with
// a_k(t) = coth(pi k t). Level 1 uses the accelerated bridge
//   ECl_1(x) = -log thetahat1(x/(2pi) | i t) + C(t).
EvalResult elliptic_cl(int n, double x, const Modulus& mod, const Precision& prec = {});

// Level-1 weighted cosine series route (the series definition evaluated
// directly); must agree with the accelerated route above.
EvalResult elliptic_cl1_series(double x, const Modulus& mod, const Precision& prec = {});

// Bridge constant C(t) = 2 sum_k q^{2k} / (k (1 - q^{2k})) separating the
// Fourier definition of ECl_1 from -log thetahat1.
EvalResult elliptic_bridge_constant(const Modulus& mod, const Precision& prec = {});

// Hyperbolic Clausen function
//   HCl_n(x) = Li_n(e^{-x}) + (-1)^n x^n / (2 n!)
// so that HCl_1(x) = -log(2 sinh(x/2)) and d/dx HCl_{n+1} = -HCl_n.
// Domain: x > 0 for n = 1, x >= 0 for n >= 2.
EvalResult hyperbolic_cl(int n, double x, const Precision& prec = {});

}  // namespace clausen
