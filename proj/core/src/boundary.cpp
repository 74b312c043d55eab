#include "clausen/boundary.hpp"

#include <cmath>
#include <stdexcept>

namespace clausen {

EvalResult boundary_constant(int m, const Modulus& mod, const Precision& prec) {
    prec.validate();
    if (m < 1)
        throw std::domain_error(
            "boundary_constant: m = 0 rejected, ECl_1(0) diverges logarithmically");

    // B_{2m+1}(i t) = zeta(2m+1) + 2 sum_k 1/(k^{2m+1} (e^{2 pi k t} - 1))
    const int s = 2 * m + 1;
    const Precision half{0.5 * prec.abs_tol, prec.max_terms, prec.quad_tol};
    const EvalResult zeta = zeta_int(s, half);

    const double q2 = mod.q() * mod.q();
    CompensatedAccumulator acc;
    double q2k = q2;
    std::int64_t k = 1;
    for (;; ++k) {
        acc.add(2.0 * q2k / ((1.0 - q2k) * std::pow(static_cast<double>(k), s)));
        q2k *= q2;
        const double tail = 2.0 * q2k / ((1.0 - q2) * (1.0 - q2));
        if (tail < 0.25 * half.abs_tol) break;
        if (k > prec.max_terms)
            throw ConvergenceError("boundary_constant: series did not converge");
    }
    const double tail = 4.0 * q2k / ((1.0 - q2) * (1.0 - q2));
    return EvalResult{zeta.value + acc.value(), zeta.err_bound + tail + 2e-16,
                      zeta.terms_used + k};
}

double circular_limit_constant(int m) {
    if (m < 1) throw std::domain_error("circular_limit_constant: require m >= 1");
    return zeta_int(2 * m + 1).value;
}

double hyperbolic_limit_constant(int m) {
    if (m < 1) throw std::domain_error("hyperbolic_limit_constant: require m >= 1");
    // exact power-of-two scaling keeps the ratio to the circular constant exact
    return std::ldexp(circular_limit_constant(m), 1 - 2 * m);
}

DegenerationReport degeneration_report(int m_max, std::span<const double> t_list,
                                       const Precision& prec) {
    prec.validate();
    if (m_max < 1) throw std::domain_error("degeneration_report: require m_max >= 1");

    DegenerationReport report;
    report.note =
        "hyperbolic limit constants zeta(2m+1)/2^(2m-1) arise from the modular-transform "
        "regularization; the plain series normalization gives HCl_{2m+1}(0) = zeta(2m+1), "
        "differing by the factor 2^(1-2m)";
    report.pass = true;
    for (double t : t_list) {
        const Modulus mod(t);
        const double q2 = mod.q() * mod.q();
        const double envelope = 2.0 * q2 / (1.0 - q2);
        for (int m = 1; m <= m_max; ++m) {
            DegenerationRow row;
            row.m = m;
            row.t = t;
            row.value = boundary_constant(m, mod, prec).value;
            row.zeta = zeta_int(2 * m + 1, prec).value;
            row.residual = row.value - row.zeta;
            row.envelope = envelope;
            row.within = std::abs(row.residual) <= 3.0 * envelope + prec.abs_tol;
            report.pass = report.pass && row.within;
            report.rows.push_back(row);
        }
    }
    return report;
}

}  // namespace clausen
