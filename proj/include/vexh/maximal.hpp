#pragma once

#include <vector>

#include "vexh/grid.hpp"
#include "vexh/kernels.hpp"

namespace vexh {

enum class MaximalMode { radial, nontangential };

// Geometric default ladder {2^k h : k = 0..log2(L/(4h))}.
std::vector<double> default_t_set(const Grid& g);

// M*_{psi,+}(f): pointwise max over the t ladder of |f * psi_t|.
GridFunction radial_maximal(const GridFunction& f, const SeparableKernel& psi,
                            const std::vector<double>& t_set);

// Cone-sampled non-tangential variant: max over t and |xi - y| < t of |f*psi_t(xi)|.
GridFunction nontangential_maximal(const GridFunction& f, const SeparableKernel& psi,
                                   const std::vector<double>& t_set);

// Pointwise max over certified family members (a finite lower bound for the
// F_N supremum). Requires a certified family.
GridFunction grand_maximal(const GridFunction& f, const TestFamily& family,
                           const std::vector<double>& t_set, MaximalMode mode);

// f*_P: cone max of the Poisson extension (spectral path).
GridFunction poisson_nt_maximal(const GridFunction& f, const std::vector<double>& t_set);

// u*: cone max over the field's own ladder.
GridFunction field_nt_maximal(const HalfSpaceField& u);

} // namespace vexh
