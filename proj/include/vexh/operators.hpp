#pragma once

#include <vector>

#include "vexh/grid.hpp"
#include "vexh/kernels.hpp"

namespace vexh {

// =============================================================================
// Riesz transforms R_{j_1} ... R_{j_k} as one spectral multiplier product
// prod_i (-i xi_{j_i} / |xi|), with value 0 at xi = 0.
// =============================================================================
struct RieszSymbol {
    std::vector<int> indices;  // each in 1..n, k >= 1

    explicit RieszSymbol(std::vector<int> idx);
    cplx multiplier(std::array<double, 2> xi) const;
};

GridFunction riesz(const GridFunction& f, const RieszSymbol& symbol);

// =============================================================================
// Uncentered Hardy-Littlewood maximal function over sampled radii: for each x,
// max over radii r and grid centers c with |x-c| < r of the discrete ball
// average of |f| around c. Radii must be >= h; output >= |f| pointwise as long
// as radius h is included.
// =============================================================================
GridFunction hl_maximal(const GridFunction& f, const std::vector<double>& radii);

// Geometric default ladder {h, 2h, 4h, ..., <= L/4}.
std::vector<double> default_maximal_radii(const Grid& g);

// =============================================================================
// Mollification f * phi_eps with phi_eps(x) = eps^{-n} phi(x/eps) resampled
// from the closed-form rule. Requires unit mass (|mass-1| <= 1e-8) and
// eps >= h/2.
// =============================================================================
GridFunction mollify(const GridFunction& f, const SeparableKernel& phi, double eps);

} // namespace vexh
