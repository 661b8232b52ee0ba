#include "vexh/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vexh {

// =============================================================================
// Grid
// =============================================================================

Grid::Grid(int dim_, double period_, int points_per_axis_)
    : dim(dim_), period(period_), points_per_axis(points_per_axis_) {
    if (dim != 1 && dim != 2) throw std::domain_error("Grid: dim must be 1 or 2");
    if (period <= 0.0) throw std::domain_error("Grid: period must be positive");
    if (points_per_axis < 8 || !fft::is_power_of_two(static_cast<std::size_t>(points_per_axis)))
        throw std::domain_error("Grid: points_per_axis must be a power of two >= 8");
}

std::size_t Grid::size() const {
    std::size_t n = static_cast<std::size_t>(points_per_axis);
    return dim == 1 ? n : n * n;
}

double Grid::xi(int i) const {
    return 2.0 * std::numbers::pi * mode(i) / period;
}

std::array<int, 2> Grid::unflatten(std::size_t flat) const {
    if (dim == 1) return {static_cast<int>(flat), 0};
    const int N = points_per_axis;
    return {static_cast<int>(flat) / N, static_cast<int>(flat) % N};
}

std::size_t Grid::flatten(int i1, int i2) const {
    if (dim == 1) return static_cast<std::size_t>(i1);
    return static_cast<std::size_t>(i1) * points_per_axis + static_cast<std::size_t>(i2);
}

std::array<double, 2> Grid::point(std::size_t flat) const {
    auto [i1, i2] = unflatten(flat);
    return {coord(i1), dim == 2 ? coord(i2) : 0.0};
}

double Grid::point_norm(std::size_t flat) const {
    auto p = point(flat);
    return std::hypot(p[0], p[1]);
}

double Grid::torus_distance(std::size_t a, std::size_t b) const {
    auto pa = point(a), pb = point(b);
    double acc = 0.0;
    for (int d = 0; d < dim; ++d) {
        double diff = std::fabs(pa[d] - pb[d]);
        diff = std::min(diff, period - diff);
        acc += diff * diff;
    }
    return std::sqrt(acc);
}

// =============================================================================
// GridFunction
// =============================================================================

GridFunction::GridFunction(const Grid& g, std::string tag_)
    : grid(g), samples(g.size(), cplx{0.0, 0.0}), tag(std::move(tag_)) {}

GridFunction::GridFunction(const Grid& g, std::vector<cplx> samples_, std::string tag_)
    : grid(g), samples(std::move(samples_)), tag(std::move(tag_)) {
    if (samples.size() != g.size())
        throw std::domain_error("GridFunction: sample count does not match grid");
}

void GridFunction::check_finite() const {
    for (const cplx& z : samples)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw std::domain_error("GridFunction: non-finite sample");
}

// =============================================================================
// HalfSpaceField
// =============================================================================

HalfSpaceField::HalfSpaceField(const Grid& g, std::vector<double> ts)
    : grid(g), t_ladder(std::move(ts)) {
    validate();
    slices.assign(t_ladder.size(), GridFunction(g));
}

void HalfSpaceField::validate() const {
    if (t_ladder.empty()) throw std::domain_error("HalfSpaceField: empty t ladder");
    if (t_ladder.front() <= 0.0) throw std::domain_error("HalfSpaceField: t must be positive");
    for (std::size_t k = 1; k < t_ladder.size(); ++k)
        if (t_ladder[k] <= t_ladder[k - 1])
            throw std::domain_error("HalfSpaceField: t ladder must be strictly increasing");
    for (const auto& s : slices)
        if (!(s.grid == grid)) throw std::domain_error("HalfSpaceField: slice grid mismatch");
}

bool HalfSpaceField::uniform_ladder(double rel_tol) const {
    if (t_ladder.size() < 2) return true;
    const double dt = t_ladder[1] - t_ladder[0];
    for (std::size_t k = 1; k + 1 < t_ladder.size(); ++k)
        if (std::fabs((t_ladder[k + 1] - t_ladder[k]) - dt) > rel_tol * dt) return false;
    return true;
}

double HalfSpaceField::ladder_step() const {
    if (t_ladder.size() < 2 || !uniform_ladder())
        throw std::invalid_argument("HalfSpaceField: uniform t ladder required");
    return t_ladder[1] - t_ladder[0];
}

// =============================================================================
// Fourier calculus
// =============================================================================

namespace {

void fft_nd(std::vector<cplx>& a, const Grid& g, bool inverse) {
    const std::size_t N = static_cast<std::size_t>(g.points_per_axis);
    if (g.dim == 1) {
        fft::transform(a.data(), N, inverse);
        return;
    }
    std::vector<cplx> scratch;
    for (std::size_t r = 0; r < N; ++r) fft::transform(a.data() + r * N, N, inverse);
    for (std::size_t c = 0; c < N; ++c) fft::transform_strided(a.data() + c, N, N, inverse, scratch);
}

// Coordinates start at -L/2, so true Fourier coefficients carry the phase
// e^{-i xi (-L/2)} = (-1)^mode per axis relative to the raw DFT. Folding the
// phase in keeps convolution a plain coefficient product and centers
// symbol-built kernels at x = 0.
void apply_origin_phase(std::vector<cplx>& a, const Grid& g) {
    const int N = g.points_per_axis;
    if (g.dim == 1) {
        for (int i = 1; i < N; i += 2) a[i] = -a[i];
        return;
    }
    for (int i1 = 0; i1 < N; ++i1)
        for (int i2 = 0; i2 < N; ++i2)
            if ((i1 + i2) & 1) a[g.flatten(i1, i2)] = -a[g.flatten(i1, i2)];
}

} // namespace

cplx quadrature(const GridFunction& f) {
    cplx acc{0.0, 0.0};
    for (const cplx& z : f.samples) acc += z;
    double w = f.grid.spacing();
    if (f.grid.dim == 2) w *= f.grid.spacing();
    return acc * w;
}

Spectrum fourier(const GridFunction& f) {
    Spectrum s{f.grid, f.samples};
    fft_nd(s.coeff, f.grid, false);
    apply_origin_phase(s.coeff, f.grid);
    double w = f.grid.spacing();
    if (f.grid.dim == 2) w *= f.grid.spacing();
    for (cplx& z : s.coeff) z *= w;
    return s;
}

GridFunction inverse_fourier(const Spectrum& s) {
    if (s.coeff.size() != s.grid.size())
        throw std::domain_error("inverse_fourier: coefficient count does not match grid");
    GridFunction f(s.grid);
    f.samples = s.coeff;
    apply_origin_phase(f.samples, s.grid);
    fft_nd(f.samples, s.grid, true);
    double w = s.grid.spacing();
    if (s.grid.dim == 2) w *= s.grid.spacing();
    for (cplx& z : f.samples) z /= w;
    return f;
}

GridFunction convolve(const GridFunction& f, const GridFunction& k) {
    if (!(f.grid == k.grid)) throw std::domain_error("convolve: grid mismatch");
    Spectrum a = fourier(f);
    const Spectrum b = fourier(k);
    for (std::size_t i = 0; i < a.coeff.size(); ++i) a.coeff[i] *= b.coeff[i];
    return inverse_fourier(a);
}

// =============================================================================
// Finite differences
// =============================================================================

GridFunction central_difference(const GridFunction& f, int axis) {
    const Grid& g = f.grid;
    if (axis < 1 || axis > g.dim) throw std::domain_error("central_difference: bad axis");
    const int N = g.points_per_axis;
    const double inv2h = 1.0 / (2.0 * g.spacing());
    GridFunction out(g, f.tag);
    if (g.dim == 1) {
        for (int i = 0; i < N; ++i)
            out.samples[i] = (f.samples[(i + 1) % N] - f.samples[(i + N - 1) % N]) * inv2h;
        return out;
    }
    for (int i1 = 0; i1 < N; ++i1) {
        for (int i2 = 0; i2 < N; ++i2) {
            std::size_t plus, minus;
            if (axis == 1) {
                plus = g.flatten((i1 + 1) % N, i2);
                minus = g.flatten((i1 + N - 1) % N, i2);
            } else {
                plus = g.flatten(i1, (i2 + 1) % N);
                minus = g.flatten(i1, (i2 + N - 1) % N);
            }
            out.samples[g.flatten(i1, i2)] = (f.samples[plus] - f.samples[minus]) * inv2h;
        }
    }
    return out;
}

HalfSpaceField central_difference(const HalfSpaceField& u, int axis) {
    u.validate();
    HalfSpaceField out(u.grid, u.t_ladder);
    if (axis == 0) {
        if (u.levels() < 3)
            throw std::invalid_argument("central_difference: need >= 3 t levels for axis 0");
        const double dt = u.ladder_step();
        const std::size_t K = u.levels();
        const double inv2 = 1.0 / (2.0 * dt);
        for (std::size_t x = 0; x < u.grid.size(); ++x) {
            // one-sided second-order stencils at the ladder ends
            out.slices[0].samples[x] = (-3.0 * u.slices[0].samples[x] + 4.0 * u.slices[1].samples[x] -
                                        u.slices[2].samples[x]) *
                                       inv2;
            out.slices[K - 1].samples[x] =
                (3.0 * u.slices[K - 1].samples[x] - 4.0 * u.slices[K - 2].samples[x] +
                 u.slices[K - 3].samples[x]) *
                inv2;
        }
        for (std::size_t k = 1; k + 1 < K; ++k)
            for (std::size_t x = 0; x < u.grid.size(); ++x)
                out.slices[k].samples[x] =
                    (u.slices[k + 1].samples[x] - u.slices[k - 1].samples[x]) * inv2;
        return out;
    }
    for (std::size_t k = 0; k < u.levels(); ++k) out.slices[k] = central_difference(u.slices[k], axis);
    return out;
}

HalfSpaceField spectral_derivative(const HalfSpaceField& u, int axis) {
    if (!u.semigroup_coeff)
        throw std::invalid_argument("spectral_derivative: field has no semigroup provenance");
    if (axis < 0 || axis > u.grid.dim) throw std::domain_error("spectral_derivative: bad axis");
    const Grid& g = u.grid;
    const int N = g.points_per_axis;
    Spectrum c = *u.semigroup_coeff;
    if (axis == 0) {
        c = apply_multiplier(c, [](std::array<double, 2> xi) {
            return cplx{-std::hypot(xi[0], xi[1]), 0.0};
        });
    } else {
        // i*xi_j; the Nyquist row of the axis is zeroed (odd multiplier convention)
        const double xi_nyquist = std::fabs(g.xi(N / 2));
        const int ax = axis - 1;
        c = apply_multiplier(c, [ax, xi_nyquist](std::array<double, 2> xi) {
            if (std::fabs(xi[ax]) >= xi_nyquist * (1.0 - 1e-12)) return cplx{0.0, 0.0};
            return cplx{0.0, xi[ax]};
        });
    }
    HalfSpaceField out(g, u.t_ladder);
    out.semigroup_coeff = c;
    for (std::size_t k = 0; k < out.levels(); ++k) out.slices[k] = semigroup_slice(out, out.t_ladder[k]);
    return out;
}

GridFunction semigroup_slice(const HalfSpaceField& u, double t) {
    if (!u.semigroup_coeff)
        throw std::invalid_argument("semigroup_slice: field has no semigroup provenance");
    if (t <= 0.0) throw std::domain_error("semigroup_slice: t must be positive");
    Spectrum s = apply_multiplier(*u.semigroup_coeff, [t](std::array<double, 2> xi) {
        return std::exp(-t * std::hypot(xi[0], xi[1]));
    });
    return inverse_fourier(s);
}

// =============================================================================
// Elementwise helpers
// =============================================================================

GridFunction abs(const GridFunction& f) {
    GridFunction out(f.grid, f.tag);
    for (std::size_t i = 0; i < f.size(); ++i) out.samples[i] = cplx{std::abs(f.samples[i]), 0.0};
    return out;
}

GridFunction pow_abs(const GridFunction& f, double exponent) {
    GridFunction out(f.grid, f.tag);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double a = std::abs(f.samples[i]);
        out.samples[i] = cplx{a == 0.0 ? 0.0 : std::pow(a, exponent), 0.0};
    }
    return out;
}

double max_abs(const GridFunction& f) {
    double m = 0.0;
    for (const cplx& z : f.samples) m = std::max(m, std::abs(z));
    return m;
}

double max_abs_diff(const GridFunction& a, const GridFunction& b) {
    if (!(a.grid == b.grid)) throw std::domain_error("max_abs_diff: grid mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.samples[i] - b.samples[i]));
    return m;
}

GridFunction shift(const GridFunction& f, int axis, int cells) {
    const Grid& g = f.grid;
    if (axis < 1 || axis > g.dim) throw std::domain_error("shift: bad axis");
    const int N = g.points_per_axis;
    auto wrap = [N](int i) { return ((i % N) + N) % N; };
    GridFunction out(g, f.tag);
    if (g.dim == 1) {
        for (int i = 0; i < N; ++i) out.samples[i] = f.samples[wrap(i - cells)];
        return out;
    }
    for (int i1 = 0; i1 < N; ++i1)
        for (int i2 = 0; i2 < N; ++i2) {
            const int s1 = axis == 1 ? wrap(i1 - cells) : i1;
            const int s2 = axis == 2 ? wrap(i2 - cells) : i2;
            out.samples[g.flatten(i1, i2)] = f.samples[g.flatten(s1, s2)];
        }
    return out;
}

} // namespace vexh
