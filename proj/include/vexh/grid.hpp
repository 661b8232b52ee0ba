#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vexh/fft.hpp"

namespace vexh {

using cplx = std::complex<double>;

// =============================================================================
// Grid: uniform isotropic periodic grid on the torus [-L/2, L/2)^n, n in {1,2}.
// =============================================================================
struct Grid {
    int dim = 1;              // n
    double period = 16.0;     // L per axis
    int points_per_axis = 0;  // N_g, power of two >= 8

    Grid() = default;
    Grid(int dim_, double period_, int points_per_axis_);

    double spacing() const { return period / points_per_axis; }
    std::size_t size() const;

    // Node coordinate along one axis: x_i = -L/2 + i*h.
    double coord(int i) const { return -0.5 * period + i * spacing(); }
    // Signed integer mode for FFT bin i: in [-N/2, N/2).
    int mode(int i) const { return i <= points_per_axis / 2 - 1 ? i : i - points_per_axis; }
    // Angular frequency of bin i: 2*pi*mode/L.
    double xi(int i) const;

    // Flattened index <-> per-axis indices (axis-1 major for dim 2).
    std::array<int, 2> unflatten(std::size_t flat) const;
    std::size_t flatten(int i1, int i2 = 0) const;
    // Coordinates of a flattened node.
    std::array<double, 2> point(std::size_t flat) const;
    // Euclidean norm of the node coordinate within the window.
    double point_norm(std::size_t flat) const;
    // Periodic (torus) distance between two nodes.
    double torus_distance(std::size_t a, std::size_t b) const;

    bool operator==(const Grid& o) const {
        return dim == o.dim && period == o.period && points_per_axis == o.points_per_axis;
    }
};

// =============================================================================
// GridFunction: complex samples of f on a Grid.
// =============================================================================
struct GridFunction {
    Grid grid;
    std::vector<cplx> samples;
    std::string tag;

    GridFunction() = default;
    GridFunction(const Grid& g, std::string tag_ = {});
    GridFunction(const Grid& g, std::vector<cplx> samples_, std::string tag_ = {});

    std::size_t size() const { return samples.size(); }
    void check_finite() const;  // throws std::domain_error on NaN/Inf samples
};

// Spectrum: continuum-normalized Fourier coefficients, coeff_k = h^n * DFT_k.
// Under this normalization convolution of functions is plain coefficient product.
struct Spectrum {
    Grid grid;
    std::vector<cplx> coeff;
};

// =============================================================================
// HalfSpaceField: samples u(x, t_k) on grid x t_ladder. Fields built by the
// Poisson semigroup carry their boundary coefficient spectrum so that exact
// slices/derivatives at arbitrary t remain available.
// =============================================================================
struct HalfSpaceField {
    Grid grid;
    std::vector<double> t_ladder;       // strictly increasing, positive
    std::vector<GridFunction> slices;   // one per t
    // Semigroup provenance: slice(t) = inverse_fourier(coeff .* exp(-t|xi|)).
    std::optional<Spectrum> semigroup_coeff;

    HalfSpaceField() = default;
    HalfSpaceField(const Grid& g, std::vector<double> ts);

    std::size_t levels() const { return t_ladder.size(); }
    bool uniform_ladder(double rel_tol = 1e-9) const;
    double ladder_step() const;  // throws if not uniform
    void validate() const;       // ladder/shape invariants
};

// =============================================================================
// Operations
// =============================================================================

// Rectangle rule h^n * sum(samples); exact for band-limited periodic integrands.
cplx quadrature(const GridFunction& f);

Spectrum fourier(const GridFunction& f);
GridFunction inverse_fourier(const Spectrum& s);

// Periodic convolution with quadrature weight h^n (approximates the integral
// convolution); computed spectrally.
GridFunction convolve(const GridFunction& f, const GridFunction& k);

// Second-order central difference, periodic. axis is 1-based (1..n).
GridFunction central_difference(const GridFunction& f, int axis);

// axis 0 is the t-axis (requires uniform ladder with >= 3 levels; boundary
// levels use one-sided second-order stencils); axes 1..n are per-slice spatial.
HalfSpaceField central_difference(const HalfSpaceField& u, int axis);

// Exact derivative of a semigroup-built field (requires provenance):
// axis 0 multiplies the coefficient by -|xi|, axis j by i*xi_j.
HalfSpaceField spectral_derivative(const HalfSpaceField& u, int axis);

// Evaluate a semigroup-built field at an arbitrary t > 0 (requires provenance).
GridFunction semigroup_slice(const HalfSpaceField& u, double t);

// Elementwise helpers used throughout the residual/maximal machinery.
GridFunction abs(const GridFunction& f);
GridFunction pow_abs(const GridFunction& f, double exponent);  // |f|^e, 0^e := 0
double max_abs(const GridFunction& f);
double max_abs_diff(const GridFunction& a, const GridFunction& b);

// Circular shift by whole cells along an axis (positive = toward +x).
GridFunction shift(const GridFunction& f, int axis, int cells);

// Spectral multiplier application: out_hat(k) = m(xi_vector(k)) * f_hat(k).
// The multiplier receives the signed frequency vector (xi_1[, xi_2]).
template <typename MultFn>
Spectrum apply_multiplier(const Spectrum& s, MultFn&& m) {
    Spectrum out{s.grid, s.coeff};
    const Grid& g = s.grid;
    const int N = g.points_per_axis;
    if (g.dim == 1) {
        for (int i = 0; i < N; ++i) out.coeff[i] *= m(std::array<double, 2>{g.xi(i), 0.0});
    } else {
        for (int i1 = 0; i1 < N; ++i1)
            for (int i2 = 0; i2 < N; ++i2)
                out.coeff[g.flatten(i1, i2)] *= m(std::array<double, 2>{g.xi(i1), g.xi(i2)});
    }
    return out;
}

template <typename MultFn>
GridFunction apply_multiplier(const GridFunction& f, MultFn&& m) {
    return inverse_fourier(apply_multiplier(fourier(f), std::forward<MultFn>(m)));
}

} // namespace vexh
