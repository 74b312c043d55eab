#pragma once

#include <vector>

#include "clausen/clausen.hpp"

namespace clausen {

// Quadrature lift producing an even-index level from the odd-index level
// below it: returns int_0^x f(u) du (sine-type levels vanish at 0).
double lift_even(const std::function<double(double)>& f, double x, const Precision& prec = {});

// Quadrature lift producing an odd-index level with prescribed boundary
// constant at 0: returns boundary - int_0^x f(u) du.
double lift_odd(const std::function<double(double)>& f, double boundary, double x,
                const Precision& prec = {});

struct LevelResidual {
    int level = 0;            // the produced level n+1
    double fd_residual = 0.0; // max | central difference of level n+1  -/+  level n |
    double lift_residual = 0.0; // max | quadrature lift - series value |
};

struct RecursionReport {
    Family::Tag family = Family::Tag::circular;
    std::vector<LevelResidual> levels;
    double fd_bound = 1e-6;
    double lift_bound = 1e-8;
    bool pass = false;

    double max_fd_residual() const;
    double max_lift_residual() const;
};

// Checks, for each level n <= n_max and each grid point x, that
//  (i)  the central finite difference of level n+1 (step 1e-5) matches
//       the signed level n to fd_bound, and
//  (ii) the quadrature lift of level n matches the series evaluation of
//       level n+1 to lift_bound.
// The same lift code path runs for all three families; only the level-1
// kernel, the boundary constants and the derivative sign differ
// (circular/elliptic alternate sign by parity, hyperbolic is uniformly -1).
RecursionReport verify_recursion(const Family& family, int n_max, std::span<const double> grid,
                                 const Precision& prec = {});

}  // namespace clausen
