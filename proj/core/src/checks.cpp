#include "clausen/checks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "clausen/boundary.hpp"
#include "clausen/kernel.hpp"
#include "clausen/recursion.hpp"

namespace clausen {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

const double kThetaGridV[] = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
const double kThetaGridT[] = {0.5, 1.0, 2.0, 5.0};

// Independent product-formula route:
// 2 q^{1/4} sin(pi v) prod (1-q^{2n}) (1 - 2 q^{2n} cos(2 pi v) + q^{4n}).
double theta1_product(double v, const Modulus& mod) {
    const double q = mod.q();
    const double q2 = q * q;
    const double c = std::cos(kTwoPi * v);
    double prod = 1.0;
    double q2n = q2;
    while (q2n > 1e-18) {
        prod *= (1.0 - q2n) * (1.0 - 2.0 * q2n * c + q2n * q2n);
        q2n *= q2;
    }
    return 2.0 * std::exp(-kPi * mod.t() * 0.25) * std::sin(kPi * v) * prod;
}

Check make_check(std::string name, double residual, double bound) {
    return Check{std::move(name), residual, bound, residual <= bound};
}

}  // namespace

bool SuiteReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

SuiteReport check_theta(const Precision& prec) {
    SuiteReport report;
    report.suite = "theta";

    double odd_res = 0.0, period_res = 0.0, product_res = 0.0, s_res = 0.0;
    for (double t : kThetaGridT) {
        const Modulus mod(t);
        for (double v : kThetaGridV) {
            const double plus = theta1(v, mod, prec).value;
            const double minus = theta1(-v, mod, prec).value;
            const double shifted = theta1(v + 1.0, mod, prec).value;
            odd_res = std::max(odd_res, std::abs(minus + plus));
            period_res = std::max(period_res, std::abs(shifted + plus));
            product_res = std::max(product_res, std::abs(plus - theta1_product(v, mod)));
            s_res = std::max(s_res, s_transform_residual(v, mod, prec));
        }
    }
    report.checks.push_back(make_check("theta/oddness", odd_res, 1e-13));
    report.checks.push_back(make_check("theta/quasi-periodicity", period_res, 1e-13));
    report.checks.push_back(make_check("theta/series-vs-product", product_res, 1e-12));
    report.checks.push_back(make_check("theta/s-transform-residual", s_res, 1e-11));

    // Circular limit of the normalized theta. The leading deviation is
    // 8 q^2 sin^3(pi v) (largest at v = 1/2), so the envelope constant is 9.
    for (double t : {2.0, 5.0}) {
        const Modulus mod(t);
        double sup = 0.0;
        for (int i = 0; i <= 100; ++i) {
            const double v = i / 100.0;
            sup = std::max(sup,
                           std::abs(theta1_normalized(v, mod, prec).value - 2.0 * std::sin(kPi * v)));
        }
        const double q2 = mod.q() * mod.q();
        report.checks.push_back(make_check("theta/circular-limit-t" + std::to_string(int(t)), sup,
                                           9.0 * q2 + 1e-13));
    }
    return report;
}

SuiteReport check_recursion(std::optional<Family::Tag> family, double t, const Precision& prec) {
    SuiteReport report;
    report.suite = "recursion";
    const double grid[] = {0.5, 1.0, 2.0};

    std::vector<Family> families;
    if (!family || *family == Family::Tag::circular) families.push_back(Family::circular());
    if (!family || *family == Family::Tag::elliptic) families.push_back(Family::elliptic(t));
    if (!family || *family == Family::Tag::hyperbolic) families.push_back(Family::hyperbolic());

    for (const Family& f : families) {
        const RecursionReport r = verify_recursion(f, 4, grid, prec);
        report.checks.push_back(make_check(std::string("recursion/") + f.name() + "/finite-diff",
                                           r.max_fd_residual(), r.fd_bound));
        report.checks.push_back(make_check(std::string("recursion/") + f.name() + "/lift-vs-series",
                                           r.max_lift_residual(), r.lift_bound));
    }
    return report;
}

namespace {

SuiteReport degeneration_core(int m_max, const Precision& prec) {
    SuiteReport report;
    report.suite = "degeneration";

    // ECl_n -> Cl_n at large t
    {
        const Modulus mod(5.0);
        double res = 0.0;
        for (int n : {2, 3, 4}) {
            for (double x : {0.5, 1.0, kPi, 5.0}) {
                res = std::max(res, std::abs(elliptic_cl(n, x, mod, prec).value -
                                             circular_cl(n, x, prec).value));
            }
        }
        report.checks.push_back(make_check("degeneration/elliptic-to-circular", res, 1e-10));
    }

    // B_{2m+1}(i t) -> zeta(2m+1) with the 2q^2/(1-q^2) envelope
    {
        const double ts[] = {2.0, 3.0, 5.0};
        const DegenerationReport dr = degeneration_report(m_max, ts, prec);
        double worst_ratio = 0.0;
        for (const auto& row : dr.rows) {
            worst_ratio = std::max(worst_ratio, std::abs(row.residual) /
                                                    (3.0 * row.envelope + prec.abs_tol));
        }
        report.checks.push_back(make_check("degeneration/boundary-envelope-ratio", worst_ratio, 1.0));
        report.notes.push_back(dr.note);
    }

    // stated hyperbolic limit: ratio to the circular constant is exactly 2^{1-2m}
    {
        double res = 0.0;
        for (int m = 1; m <= 4; ++m) {
            const double expected = std::ldexp(1.0, 1 - 2 * m);
            const double ratio = hyperbolic_limit_constant(m) / circular_limit_constant(m);
            res = std::max(res, std::abs(ratio - expected) / expected);
        }
        report.checks.push_back(make_check("degeneration/hyperbolic-ratio-relative", res, 1e-15));
    }

    return report;
}

}  // namespace

SuiteReport check_degeneration(int m_max, const Precision& prec) {
    SuiteReport report = degeneration_core(m_max, prec);
    // the S-transform (theta identity grid) underlies the hyperbolic limit
    const SuiteReport theta = check_theta(prec);
    report.checks.insert(report.checks.end(), theta.checks.begin(), theta.checks.end());
    return report;
}

SuiteReport check_kernel(const Precision& prec) {
    SuiteReport report;
    report.suite = "kernel";

    // dual-route equality of the coefficient family
    {
        double res = 0.0;
        for (double t : {0.75, 1.0, 2.0, 5.0}) {
            const Modulus mod(t);
            const KernelCoefficients taylor = kernel_coeffs_taylor(mod, 4, prec);
            const KernelCoefficients lambert = kernel_coeffs_lambert(mod, 4, prec);
            for (int m = 1; m <= 4; ++m)
                res = std::max(res, std::abs(taylor.c(m) - lambert.c(m)));
        }
        report.checks.push_back(make_check("kernel/dual-route-coeffs", res, 1e-7));
    }

    // evenness of the kernel
    {
        double res = 0.0;
        for (double t : {0.75, 1.0, 2.0}) {
            const Modulus mod(t);
            for (double v : {0.1, 0.2, 0.3, 0.45}) {
                res = std::max(res, std::abs(k_ell(v, mod, prec).value -
                                             k_ell(-v, mod, prec).value));
            }
        }
        report.checks.push_back(make_check("kernel/evenness", res, 1e-13));
    }

    // kernel degeneration to the circular log-sine kernel
    for (double t : {2.0, 5.0}) {
        const Modulus mod(t);
        double sup = 0.0;
        for (int i = -40; i <= 40; ++i) {
            const double v = i / 100.0;
            if (v == 0.0) continue;
            sup = std::max(sup, std::abs(k_ell(v, mod, prec).value - circular_kernel(v)));
        }
        const double q2 = mod.q() * mod.q();
        report.checks.push_back(
            make_check("kernel/circular-limit-t" + std::to_string(int(t)), sup, 20.0 * q2));
    }

    // circular degeneration of the coefficients; the residual is
    // A_m q^2 (1 + O(q^2)) with A_m = 4 (2pi)^{2m} / (2m)!.
    {
        double worst_ratio = 0.0;
        for (double t : {2.0, 5.0}) {
            const Modulus mod(t);
            const double q2 = mod.q() * mod.q();
            const KernelCoefficients kc = kernel_coeffs_lambert(mod, 4, prec);
            double fact = 2.0;
            for (int m = 1; m <= 4; ++m) {
                if (m > 1)
                    for (int j = 2 * m - 1; j <= 2 * m; ++j) fact *= j;
                const double a_m = 4.0 * std::pow(kTwoPi, 2.0 * m) / fact;
                const double envelope = 1.15 * a_m * q2 / (1.0 - q2);
                const double resid =
                    std::abs(kc.c(m) - 2.0 * zeta_int(2 * m, prec).value / m);
                worst_ratio = std::max(worst_ratio, resid / envelope);
            }
        }
        report.checks.push_back(make_check("kernel/coeff-circular-limit-ratio", worst_ratio, 1.0));
    }

    // truncated expansion against the extracted coefficients
    {
        double worst_ratio = 0.0;
        for (double t : {1.0, 2.0}) {
            const Modulus mod(t);
            const KernelCoefficients kc = kernel_coeffs_taylor(mod, 5, prec);
            for (double v : {0.035, 0.04, 0.045, 0.05}) {
                double partial = 0.0;
                for (int m = 4; m >= 1; --m) partial += kc.c(m) * std::pow(v, 2.0 * m);
                const double bound = 2.0 * std::abs(kc.c(5)) * std::pow(v, 10.0);
                const double resid = std::abs(k_ell(v, mod, prec).value - partial);
                worst_ratio = std::max(worst_ratio, resid / bound);
            }
        }
        report.checks.push_back(make_check("kernel/truncated-expansion-ratio", worst_ratio, 1.0));
    }
    return report;
}

SuiteReport check_boundary(const Precision& prec) {
    SuiteReport report;
    report.suite = "boundary";

    // agreement with the odd-level elliptic Clausen value at 0
    {
        double res = 0.0;
        for (int m = 1; m <= 3; ++m) {
            for (double t : {0.75, 1.0, 2.0}) {
                const Modulus mod(t);
                res = std::max(res, std::abs(boundary_constant(m, mod, prec).value -
                                             elliptic_cl(2 * m + 1, 0.0, mod, prec).value));
            }
        }
        report.checks.push_back(make_check("boundary/consistency-with-elliptic-cl", res, 1e-12));
    }

    // strict monotonicity in t and in m (differences must stay negative)
    {
        const double ts[] = {0.75, 1.0, 2.0};
        double max_diff = -1e308;
        for (int m = 1; m <= 3; ++m) {
            for (std::size_t i = 0; i + 1 < std::size(ts); ++i) {
                const double lo = boundary_constant(m, Modulus(ts[i + 1]), prec).value;
                const double hi = boundary_constant(m, Modulus(ts[i]), prec).value;
                max_diff = std::max(max_diff, lo - hi);
            }
        }
        for (double t : ts) {
            const Modulus mod(t);
            for (int m = 1; m <= 2; ++m) {
                max_diff = std::max(max_diff, boundary_constant(m + 1, mod, prec).value -
                                                  boundary_constant(m, mod, prec).value);
            }
        }
        report.checks.push_back(make_check("boundary/monotonicity", max_diff, -1e-9));
    }

    // circular limit envelope for t >= 2
    {
        double worst_ratio = 0.0;
        for (double t : {2.0, 3.0, 5.0}) {
            const Modulus mod(t);
            const double q2 = mod.q() * mod.q();
            const double envelope = 3.0 * 2.0 * q2 / (1.0 - q2) + prec.abs_tol;
            for (int m = 1; m <= 4; ++m) {
                const double resid = std::abs(boundary_constant(m, mod, prec).value -
                                              zeta_int(2 * m + 1, prec).value);
                worst_ratio = std::max(worst_ratio, resid / envelope);
            }
        }
        report.checks.push_back(make_check("boundary/circular-limit-ratio", worst_ratio, 1.0));
    }
    return report;
}

SuiteReport check_all(double t, const Precision& prec) {
    SuiteReport report;
    report.suite = "all";
    for (const SuiteReport& sub :
         {check_theta(prec), check_recursion(std::nullopt, t, prec), degeneration_core(3, prec),
          check_kernel(prec), check_boundary(prec)}) {
        report.checks.insert(report.checks.end(), sub.checks.begin(), sub.checks.end());
        report.notes.insert(report.notes.end(), sub.notes.begin(), sub.notes.end());
    }
    return report;
}

}  // namespace clausen
