#pragma once

#include <array>
#include <string>
#include <vector>

#include "vexh/grid.hpp"

namespace vexh {

// =============================================================================
// Poisson kernel constants and closed forms
// =============================================================================

// C_n = Gamma((n+1)/2) / pi^((n+1)/2) via half-integer Gamma (double factorial
// closed form; no general Gamma needed).
double poisson_constant(int n);

// P_t(x) = C_n * t / (t^2 + |x|^2)^((n+1)/2).   Requires t > 0.
double poisson_kernel(int n, double t, std::array<double, 2> x);

// Q_t^{(j)}(x) = C_n * x_j / (t^2 + |x|^2)^((n+1)/2), j in 1..n. Requires t > 0.
double conjugate_poisson_kernel(int n, int j, double t, std::array<double, 2> x);

// Grid samples of the kernels periodized over the torus (exact up to 1e-15;
// evaluated through the aliased Fourier symbol, cross-checked in tests against
// direct image sums and the 1D closed forms).
GridFunction sample_poisson_periodized(const Grid& g, double t);
GridFunction sample_conjugate_poisson_periodized(const Grid& g, int j, double t);

// Raw window samples (no periodization) and the associated tail-mass
// diagnostic 1 - integral_window P_t.
GridFunction sample_poisson_window(const Grid& g, double t);
double poisson_window_tail_mass(const Grid& g, double t);

// Closed forms of the 1D periodized kernels (conformal-strip formulas), used
// as independent oracles in tests.
double periodized_poisson_1d(double period, double t, double x);
double periodized_conjugate_poisson_1d(double period, double t, double x);

// Direct image-sum evaluation (slow path, any dimension), for cross-checks.
double poisson_image_sum(int n, double t, std::array<double, 2> x, double period, int images);

// =============================================================================
// Smooth separable kernel rules (families, mollifiers, corpus atoms)
// =============================================================================

struct Profile1D {
    enum class Kind { gaussian, gaussian_prime, bump };
    Kind kind = Kind::gaussian;
    double width = 1.0;  // sigma for the Gaussian kinds, support radius for bump

    double eval(double x) const;
    // half-width beyond which |x^a d^b profile| is negligible for audits
    double audit_halfwidth(int order) const;
};

// Tensor-product kernel amplitude * prod_i profile_i(x_i). All default family
// members and mollifiers are separable, which makes both dilation and the F_N
// seminorm exact per axis.
struct SeparableKernel {
    std::string name;
    int dim = 1;
    std::array<Profile1D, 2> profiles{};
    double amplitude = 1.0;

    double eval(std::array<double, 2> x) const;
};

// integral of the kernel over R^n (fine 1D quadratures per axis).
double kernel_mass(const SeparableKernel& k);

// Samples of the dilated kernel eps^{-n} K(x/eps), periodized over the torus.
// Requires eps > 0.
GridFunction sample_kernel(const SeparableKernel& k, const Grid& g, double eps);

// sup_{|a|,|b| <= order} sup_x |x^a d^b psi(x)| for the separable kernel,
// from per-profile audit tables (spectral differentiation on a wide fine grid).
double fn_seminorm(const SeparableKernel& k, int order);

// Per-profile audit table s(a,b) = sup_x |x^a (d/dx)^b profile(x)|, a,b <= order.
std::vector<std::vector<double>> profile_seminorm_table(const Profile1D& p, int order);

// =============================================================================
// TestFamily: finite surrogate of F_N
// =============================================================================

struct FamilyMember {
    SeparableKernel kernel;  // already normalized so the F_N seminorm is <= 1
    double seminorm = 0.0;   // audited value after normalization
    double mass = 0.0;       // integral of the normalized kernel
};

struct TestFamily {
    int order = 0;  // N
    std::vector<FamilyMember> members;
    bool certified = false;

    void require_certified() const;
};

// Gaussian, derivative-of-Gaussian (one per axis) and a compactly supported
// bump, each divided by its audited F_N seminorm.
TestFamily default_test_family(int dim, int order);

// Unit-mass Gaussian mollifier (width sigma in natural units; dilation happens
// at sampling time).
SeparableKernel gaussian_mollifier(int dim, double sigma = 1.0);

} // namespace vexh
