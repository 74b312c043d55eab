#pragma once

#include <string>
#include <vector>

#include "clausen/theta.hpp"

namespace clausen {

// Odd boundary constant B_{2m+1}(i t) = ECl_{2m+1}(0 | i t)
//   = sum_k coth(pi k t)/k^{2m+1}
//   = zeta(2m+1) + 2 sum_k 1 / (k^{2m+1} (e^{2 pi k t} - 1)).
// m = 0 is rejected: ECl_1(0) diverges logarithmically.
EvalResult boundary_constant(int m, const Modulus& mod, const Precision& prec = {});

// Degeneration limits of B_{2m+1}: zeta(2m+1) for t -> inf and
// zeta(2m+1) / 2^{2m-1} for t -> 0+ (via the S-transform).
double circular_limit_constant(int m);
double hyperbolic_limit_constant(int m);

struct DegenerationRow {
    int m = 0;
    double t = 0.0;
    double value = 0.0;    // B_{2m+1}(i t)
    double zeta = 0.0;     // zeta(2m+1)
    double residual = 0.0; // value - zeta
    double envelope = 0.0; // 2 q^2 / (1 - q^2)
    bool within = false;   // residual <= 3*envelope + abs_tol
};

struct DegenerationReport {
    std::vector<DegenerationRow> rows;
    std::string note;   // records the hyperbolic-normalization discrepancy
    bool pass = false;
};

// Tabulates B_{2m+1}(i t) against zeta(2m+1) for m = 1..m_max over t_list and
// flags rows whose residual exceeds 3x the predicted envelope plus abs_tol.
DegenerationReport degeneration_report(int m_max, std::span<const double> t_list,
                                       const Precision& prec = {});

}  // namespace clausen
