#pragma once

#include <cstdint>
#include <random>

#include "vexh/exponent.hpp"
#include "vexh/grid.hpp"

namespace vexh {

struct Modular {
    double value = 0.0;  // may be +inf when an infinity-sentinel node exceeds 1
};

struct LuxemburgNorm {
    double value = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    double modular_at_norm = 0.0;
};

// rho_{p(.)}(f) = integral |f(x)|^{p(x)} dx with 0^{p(x)} := 0. Nodes flagged
// as the dual infinity sentinel contribute by the ess-sup rule: 0 when
// |f| <= 1, +inf otherwise.
Modular modular(const GridFunction& f, const VariableExponent& p);

// Luxemburg quasi-norm by bisection on lambda -> modular(f/lambda).
// Returns 0 for f == 0. tol is the relative bracket width (default 1e-12
// downstream); at most 200 bisection steps. Constant exponents take the
// closed-form path (modular^{1/q}) unless force_bisection is set (the
// acceptance oracle compares the two).
LuxemburgNorm luxemburg_norm(const GridFunction& f, const VariableExponent& p, double tol = 1e-12,
                             bool force_bisection = false);

struct HolderPairing {
    double lhs = 0.0;              // integral |f g|
    double rhs_bound_ratio = 0.0;  // lhs / (||f||_p ||g||_{p*})
};

// Requires p_minus >= 1. The defining-inequality constant asserted by callers
// is C = 2; violations are reported, never clipped.
HolderPairing holder_pairing(const GridFunction& f, const GridFunction& g,
                             const VariableExponent& p);

// Certified lower bound for the associate norm: max over `trials` random
// unit-norm g in L^{p*(.)} of |integral f g|, plus the analytic candidate
// g ~ sgn(conj f)|f|^{p(.)-1}. Requires p_minus >= 1, trials >= 1.
double norm_lower_bound_by_duality(const GridFunction& f, const VariableExponent& p, int trials,
                                   std::mt19937_64& rng);

} // namespace vexh
