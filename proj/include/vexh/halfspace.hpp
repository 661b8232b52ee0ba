#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "vexh/grid.hpp"
#include "vexh/operators.hpp"

namespace vexh {

// =============================================================================
// Harmonic vectors F = {u_0, ..., u_n} and rank-m tensor fields G with
// components over index tuples in {0..n}^m (full storage, j_1 major).
// =============================================================================
struct HarmonicVector {
    std::vector<HalfSpaceField> components;  // size n+1; slot 0 is u_0 (t-slot)

    const Grid& grid() const { return components.at(0).grid; }
    const std::vector<double>& t_ladder() const { return components.at(0).t_ladder; }
    // |F|(., t) from exact semigroup slices (requires provenance).
    GridFunction magnitude_at(double t) const;
    // |F| on the stored ladder.
    HalfSpaceField magnitude_field() const;
};

struct TensorField {
    int rank = 1;  // m
    int dim = 1;   // n
    std::vector<HalfSpaceField> components;  // (n+1)^m entries

    std::size_t flatten(const std::vector<int>& tuple) const;
    std::vector<int> unflatten(std::size_t flat) const;
    const Grid& grid() const { return components.at(0).grid; }
    const std::vector<double>& t_ladder() const { return components.at(0).t_ladder; }
    GridFunction magnitude_at(double t) const;
    HalfSpaceField magnitude_field() const;
};

// =============================================================================
// Poisson extensions
// =============================================================================

// Spectral semigroup slices exp(-t|xi|) f_hat; mean of f preserved at every t.
HalfSpaceField poisson_extend(const GridFunction& f, const std::vector<double>& t_ladder);

// Kernel-quadrature cross-validation path: periodic convolution with the
// sampled periodized Poisson kernel.
HalfSpaceField poisson_extend_quadrature(const GridFunction& f, const std::vector<double>& t_ladder);

// u_0 = f*P_t, u_j = R_j(f)*P_t (= f*Q_t^{(j)} exactly in the spectral model).
// Requires a uniform ladder with >= 3 levels.
HarmonicVector poisson_vector(const GridFunction& f, const std::vector<double>& t_ladder);

// Component (j_1..j_m) = (R_{j_1}...R_{j_m} f)*P_t with R_0 := I; one
// multiplier product per tuple. Component budget checked against max_bytes.
TensorField poisson_tensor(const GridFunction& f, const std::vector<double>& t_ladder, int m,
                           std::size_t max_bytes = std::size_t{2} << 30);

TensorField tensor_from_vector(const HarmonicVector& F);

// =============================================================================
// Residuals
// =============================================================================

// Max-norm over interior t-levels of div F = sum_j d u_j / d x_j (x_0 := t)
// and of all curl pairs d u_j/d x_k - d u_k/d x_j, by central differences.
std::pair<double, double> cr_residual(const HarmonicVector& F);

// Max interior residual of the (n+1)-dimensional discrete Laplacian.
double harmonicity_residual(const HalfSpaceField& u);

// Max over index permutations and nodes of component differences.
double symmetry_residual(const TensorField& G);

// Max over (j_3..j_m, x, t) of |sum_j G_{j,j,j_3..j_m}|.
double trace_residual(const TensorField& G);

// Finite-difference gradient appended as the last tensor slot; the exact
// spectral derivative path is used when provenance is available unless
// force_finite_difference is set.
TensorField gradient_tensor(const TensorField& G, bool force_finite_difference = false);

// Pointwise l2 magnitude over all multi-indices |alpha| = m of d^alpha u.
// m = 0 returns |u|. Spectral path when provenance exists; otherwise repeated
// central differences (needs >= 2m+1 uniform t levels).
HalfSpaceField grad_m_magnitude(const HalfSpaceField& u, int m);

struct SubharmonicityReport {
    double violation = 0.0;       // largest negative discrete Laplacian of w^eta
    std::size_t where_node = 0;   // flattened grid node of the extremum
    std::size_t where_level = 0;  // t level of the extremum
    double laplacian_min = 0.0;   // signed minimum over tested nodes
};

// Discrete Laplacian test of w^eta over interior nodes where w > floor
// (default 1e-10; w^eta is not C^2 at zeros). Requires w >= 0.
SubharmonicityReport subharmonicity_check(const HalfSpaceField& w, double eta,
                                          double floor = 1e-10);

// =============================================================================
// Harmonic majorant machinery
// =============================================================================

// max over x of |F(x, t_probe + a)| - {(|F(.,a)|^eta * P_{t_probe})(x)}^{1/eta}.
// eta must satisfy eta > 0 and eta >= (n-1)/(n+m-1) for the field's rank;
// a and t_probe must lie in the resolvable range [h, L/8].
double majorant_check(const HarmonicVector& F, double eta, double a, double t_probe);
double majorant_check(const TensorField& G, double eta, double a, double t_probe);

// K(|F_a(.,t)|^{eta q}, t) = integral |F(x, t+a)|^{eta q} / (|x|+1+t)^{n+1} dx
// over the grid window. Requires q in (1, p_minus/eta); pass p_minus when the
// caller has an exponent in scope.
double k_integral(const HarmonicVector& F, double eta, double q, double a, double t,
                  double p_minus = std::numeric_limits<double>::infinity());
double k_integral(const TensorField& G, double eta, double q, double a, double t,
                  double p_minus = std::numeric_limits<double>::infinity());

} // namespace vexh
