#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clausen/clausen.hpp"

namespace clausen {

// One verification check: the largest residual observed over its sweep and
// the bound it is held to.
struct Check {
    std::string name;
    double max_residual = 0.0;
    double bound = 0.0;
    bool pass = false;
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;
    std::vector<std::string> notes;

    bool all_pass() const;
};

// Theta identities on the grid v in {0.1..0.9}, t in {0.5, 1, 2, 5}:
// oddness, quasi-periodicity, series/product agreement, S-transform residual,
// and the normalized-theta circular limit (envelope 9 q^2: the leading
// deviation is 8 q^2 sin^3(pi v), attained at v = 1/2).
SuiteReport check_theta(const Precision& prec = {});

// verify_recursion for the requested family (or all three), n_max = 4,
// grid {0.5, 1, 2}.
SuiteReport check_recursion(std::optional<Family::Tag> family, double t,
                            const Precision& prec = {});

// Degeneration sweeps: ECl_n -> Cl_n at large t, boundary constants against
// zeta(2m+1) with the 2q^2/(1-q^2) envelope, the stated hyperbolic limit
// ratio, plus the theta identity grid (the S-transform underlies the
// hyperbolic limit). Carries the boundary-normalization note.
SuiteReport check_degeneration(int m_max, const Precision& prec = {});

// Kernel properties: dual-route coefficient agreement, evenness, circular
// degeneration of the kernel and of the coefficients, truncated-expansion
// consistency.
SuiteReport check_kernel(const Precision& prec = {});

// Boundary properties: consistency with elliptic_cl(2m+1, 0), monotonicity
// in t and m, circular-limit envelope.
SuiteReport check_boundary(const Precision& prec = {});

// Union of all suites, flattened under suite name "all".
SuiteReport check_all(double t, const Precision& prec = {});

}  // namespace clausen
