#include "clausen/recursion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "clausen/boundary.hpp"

namespace clausen {

double lift_even(const std::function<double(double)>& f, double x, const Precision& prec) {
    prec.validate();
    if (x == 0.0) return 0.0;
    return adaptive_integrate(f, 0.0, x, prec).value;
}

double lift_odd(const std::function<double(double)>& f, double boundary, double x,
                const Precision& prec) {
    prec.validate();
    if (x == 0.0) return boundary;
    return boundary - adaptive_integrate(f, 0.0, x, prec).value;
}

double RecursionReport::max_fd_residual() const {
    double m = 0.0;
    for (const auto& l : levels) m = std::max(m, l.fd_residual);
    return m;
}

double RecursionReport::max_lift_residual() const {
    double m = 0.0;
    for (const auto& l : levels) m = std::max(m, l.lift_residual);
    return m;
}

RecursionReport verify_recursion(const Family& family, int n_max, std::span<const double> grid,
                                 const Precision& prec) {
    prec.validate();
    if (n_max < 2) throw std::domain_error("verify_recursion: require n_max >= 2");
    if (family.tag == Family::Tag::elliptic && !family.modulus.has_value())
        throw std::invalid_argument("verify_recursion: elliptic family needs a modulus");

    auto level = [&](int n, double x) -> double {
        switch (family.tag) {
            case Family::Tag::circular: return circular_cl(n, x, prec).value;
            case Family::Tag::elliptic: return elliptic_cl(n, x, *family.modulus, prec).value;
            case Family::Tag::hyperbolic: return hyperbolic_cl(n, x, prec).value;
        }
        throw std::logic_error("verify_recursion: unknown family");
    };

    // d/dx L_{n+1} = sign(n+1) * L_n: circular/elliptic alternate by parity
    // (+ for even targets, - for odd targets); hyperbolic is uniformly -1.
    auto derivative_sign = [&](int target) -> double {
        if (family.tag == Family::Tag::hyperbolic) return -1.0;
        return (target % 2 == 0) ? 1.0 : -1.0;
    };

    // Boundary constant of an odd-index level (and of every hyperbolic level):
    // zeta(n) in the circular/hyperbolic regimes, B_{2m+1}(i t) elliptically.
    auto boundary_of = [&](int target) -> double {
        if (family.tag == Family::Tag::elliptic && target % 2 == 1)
            return boundary_constant((target - 1) / 2, *family.modulus, prec).value;
        return zeta_int(target, prec).value;
    };

    constexpr double kFdStep = 1e-5;

    RecursionReport report;
    report.family = family.tag;
    for (int n = 1; n <= n_max; ++n) {
        const int target = n + 1;
        LevelResidual res;
        res.level = target;
        for (double x : grid) {
            const double upper_p = level(target, x + kFdStep);
            const double upper_m = level(target, x - kFdStep);
            const double fd = (upper_p - upper_m) / (2.0 * kFdStep);
            const double expected = derivative_sign(target) * level(n, x);
            res.fd_residual = std::max(res.fd_residual, std::abs(fd - expected));

            // Quadrature lift consumes only the level below.
            const auto below = [&](double u) { return level(n, u); };
            double lifted = 0.0;
            if (family.tag == Family::Tag::hyperbolic) {
                // d/dx L_{n+1} = -L_n at every level: always the anchored lift
                lifted = lift_odd(below, boundary_of(target), x, prec);
            } else if (target % 2 == 0) {
                lifted = lift_even(below, x, prec);
            } else {
                lifted = lift_odd(below, boundary_of(target), x, prec);
            }
            res.lift_residual = std::max(res.lift_residual, std::abs(lifted - level(target, x)));
        }
        report.levels.push_back(res);
    }
    report.pass = report.max_fd_residual() <= report.fd_bound &&
                  report.max_lift_residual() <= report.lift_bound;
    return report;
}

}  // namespace clausen
