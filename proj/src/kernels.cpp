#include "vexh/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace vexh {

// =============================================================================
// Poisson kernels
// =============================================================================

namespace {

double half_integer_gamma(int twice) {
    // Gamma(twice/2) for twice >= 1: integers use factorial, half-integers the
    // double-factorial formula Gamma(m + 1/2) = (2m-1)!! / 2^m * sqrt(pi).
    if (twice % 2 == 0) {
        int m = twice / 2;
        double acc = 1.0;
        for (int i = 2; i < m; ++i) acc *= i;
        return acc;
    }
    int m = (twice - 1) / 2;
    double acc = 1.0;
    for (int i = 2 * m - 1; i >= 1; i -= 2) acc *= i;
    return acc / std::pow(2.0, m) * std::sqrt(std::numbers::pi);
}

double sq_norm(int n, std::array<double, 2> x) {
    return n == 1 ? x[0] * x[0] : x[0] * x[0] + x[1] * x[1];
}

} // namespace

double poisson_constant(int n) {
    return half_integer_gamma(n + 1) / std::pow(std::numbers::pi, 0.5 * (n + 1));
}

double poisson_kernel(int n, double t, std::array<double, 2> x) {
    if (!(t > 0.0)) throw std::domain_error("poisson_kernel: t must be positive");
    const double r2 = t * t + sq_norm(n, x);
    return poisson_constant(n) * t / std::pow(r2, 0.5 * (n + 1));
}

double conjugate_poisson_kernel(int n, int j, double t, std::array<double, 2> x) {
    if (!(t > 0.0)) throw std::domain_error("conjugate_poisson_kernel: t must be positive");
    if (j < 1 || j > n) throw std::domain_error("conjugate_poisson_kernel: bad component");
    const double r2 = t * t + sq_norm(n, x);
    return poisson_constant(n) * x[j - 1] / std::pow(r2, 0.5 * (n + 1));
}

namespace {

// Aliased symbol sampling: the DFT of the sampled periodized kernel equals the
// fold sum of the continuum symbol over Nyquist shifts. Folds decay like
// exp(-t * 2*pi*N/L * |k|); 8 shells are far below double precision.
GridFunction sample_from_symbol(const Grid& g, double t,
                                const std::function<cplx(std::array<double, 2>)>& symbol) {
    const double shift = 2.0 * std::numbers::pi * g.points_per_axis / g.period;
    const int folds = 8;
    Spectrum s{g, std::vector<cplx>(g.size())};
    const int N = g.points_per_axis;
    auto aliased = [&](std::array<double, 2> xi) {
        cplx acc{0.0, 0.0};
        if (g.dim == 1) {
            for (int k = -folds; k <= folds; ++k) acc += symbol({xi[0] + k * shift, 0.0});
        } else {
            for (int k1 = -folds; k1 <= folds; ++k1)
                for (int k2 = -folds; k2 <= folds; ++k2)
                    acc += symbol({xi[0] + k1 * shift, xi[1] + k2 * shift});
        }
        return acc;
    };
    if (g.dim == 1) {
        for (int i = 0; i < N; ++i) s.coeff[i] = aliased({g.xi(i), 0.0});
    } else {
        for (int i1 = 0; i1 < N; ++i1)
            for (int i2 = 0; i2 < N; ++i2) s.coeff[g.flatten(i1, i2)] = aliased({g.xi(i1), g.xi(i2)});
    }
    GridFunction out = inverse_fourier(s);
    out.tag = "kernel(t=" + std::to_string(t) + ")";
    return out;
}

} // namespace

GridFunction sample_poisson_periodized(const Grid& g, double t) {
    if (!(t > 0.0)) throw std::domain_error("sample_poisson_periodized: t must be positive");
    return sample_from_symbol(g, t, [t](std::array<double, 2> xi) {
        return cplx{std::exp(-t * std::hypot(xi[0], xi[1])), 0.0};
    });
}

GridFunction sample_conjugate_poisson_periodized(const Grid& g, int j, double t) {
    if (!(t > 0.0))
        throw std::domain_error("sample_conjugate_poisson_periodized: t must be positive");
    if (j < 1 || j > g.dim)
        throw std::domain_error("sample_conjugate_poisson_periodized: bad component");
    return sample_from_symbol(g, t, [t, j](std::array<double, 2> xi) {
        const double r = std::hypot(xi[0], xi[1]);
        if (r == 0.0) return cplx{0.0, 0.0};
        return cplx{0.0, -xi[j - 1] / r} * std::exp(-t * r);
    });
}

GridFunction sample_poisson_window(const Grid& g, double t) {
    GridFunction out(g, "poisson_window(t=" + std::to_string(t) + ")");
    for (std::size_t i = 0; i < g.size(); ++i)
        out.samples[i] = cplx{poisson_kernel(g.dim, t, g.point(i)), 0.0};
    return out;
}

double poisson_window_tail_mass(const Grid& g, double t) {
    return 1.0 - quadrature(sample_poisson_window(g, t)).real();
}

double periodized_poisson_1d(double period, double t, double x) {
    const double tau = 2.0 * std::numbers::pi * t / period;
    const double th = 2.0 * std::numbers::pi * x / period;
    return (1.0 / period) * std::sinh(tau) / (std::cosh(tau) - std::cos(th));
}

double periodized_conjugate_poisson_1d(double period, double t, double x) {
    const double tau = 2.0 * std::numbers::pi * t / period;
    const double th = 2.0 * std::numbers::pi * x / period;
    return (1.0 / period) * std::sin(th) / (std::cosh(tau) - std::cos(th));
}

double poisson_image_sum(int n, double t, std::array<double, 2> x, double period, int images) {
    double acc = 0.0;
    if (n == 1) {
        for (int k = -images; k <= images; ++k) acc += poisson_kernel(1, t, {x[0] + k * period, 0.0});
        return acc;
    }
    for (int k1 = -images; k1 <= images; ++k1)
        for (int k2 = -images; k2 <= images; ++k2)
            acc += poisson_kernel(2, t, {x[0] + k1 * period, x[1] + k2 * period});
    return acc;
}

// =============================================================================
// Smooth separable kernels
// =============================================================================

double Profile1D::eval(double x) const {
    switch (kind) {
        case Kind::gaussian:
            return std::exp(-x * x / (2.0 * width * width));
        case Kind::gaussian_prime: {
            const double s2 = width * width;
            return -(x / s2) * std::exp(-x * x / (2.0 * s2));
        }
        case Kind::bump: {
            const double u = x / width;
            if (std::fabs(u) >= 1.0) return 0.0;
            return std::exp(-1.0 / (1.0 - u * u));
        }
    }
    return 0.0;
}

double Profile1D::audit_halfwidth(int order) const {
    if (kind == Kind::bump) return width * 1.25;
    return width * (8.0 + 2.0 * order);
}

double SeparableKernel::eval(std::array<double, 2> x) const {
    double v = amplitude * profiles[0].eval(x[0]);
    if (dim == 2) v *= profiles[1].eval(x[1]);
    return v;
}

namespace {

double profile_mass(const Profile1D& p) {
    const double W = p.audit_halfwidth(0);
    const int M = 1 << 15;
    const double h = 2.0 * W / M;
    double acc = 0.0;
    for (int i = 0; i < M; ++i) acc += p.eval(-W + (i + 0.5) * h);
    return acc * h;
}

} // namespace

double kernel_mass(const SeparableKernel& k) {
    double m = k.amplitude * profile_mass(k.profiles[0]);
    if (k.dim == 2) m *= profile_mass(k.profiles[1]);
    return m;
}

GridFunction sample_kernel(const SeparableKernel& k, const Grid& g, double eps) {
    if (!(eps > 0.0)) throw std::domain_error("sample_kernel: eps must be positive");
    if (k.dim != g.dim) throw std::domain_error("sample_kernel: dimension mismatch");
    const int N = g.points_per_axis;
    const double L = g.period;
    // per-axis periodized profile values at the node coordinates
    auto axis_values = [&](const Profile1D& p) {
        std::vector<double> v(N, 0.0);
        const double cutoff = p.audit_halfwidth(0) * eps;
        const int images = std::max(1, static_cast<int>(std::ceil(cutoff / L)) + 1);
        for (int i = 0; i < N; ++i) {
            const double x = g.coord(i);
            double acc = 0.0;
            for (int m = -images; m <= images; ++m) acc += p.eval((x + m * L) / eps);
            v[i] = acc;
        }
        return v;
    };
    const double scale = k.amplitude / (g.dim == 1 ? eps : eps * eps);
    GridFunction out(g, k.name);
    const auto v1 = axis_values(k.profiles[0]);
    if (g.dim == 1) {
        for (int i = 0; i < N; ++i) out.samples[i] = cplx{scale * v1[i], 0.0};
        return out;
    }
    const auto v2 = axis_values(k.profiles[1]);
    for (int i1 = 0; i1 < N; ++i1)
        for (int i2 = 0; i2 < N; ++i2)
            out.samples[g.flatten(i1, i2)] = cplx{scale * v1[i1] * v2[i2], 0.0};
    return out;
}

std::vector<std::vector<double>> profile_seminorm_table(const Profile1D& p, int order) {
    const double W = p.audit_halfwidth(order);
    const std::size_t M = 1 << 13;
    const double h = 2.0 * W / static_cast<double>(M);
    std::vector<cplx> samples(M);
    for (std::size_t i = 0; i < M; ++i) samples[i] = cplx{p.eval(-W + i * h), 0.0};

    std::vector<cplx> hat = samples;
    fft::transform(hat.data(), M, false);
    // high-order spectral derivatives amplify the FFT round-off floor; drop
    // coefficients below 1e-13 of the peak before differentiating
    double peak = 0.0;
    for (const cplx& z : hat) peak = std::max(peak, std::abs(z));
    for (cplx& z : hat)
        if (std::abs(z) < 1e-13 * peak) z = cplx{0.0, 0.0};

    auto xi_of = [&](std::size_t i) {
        const long m =
            static_cast<long>(i) <= static_cast<long>(M) / 2 - 1 ? static_cast<long>(i)
                                                                 : static_cast<long>(i) - static_cast<long>(M);
        return 2.0 * std::numbers::pi * static_cast<double>(m) / (2.0 * W);
    };

    std::vector<std::vector<double>> table(order + 1, std::vector<double>(order + 1, 0.0));
    std::vector<cplx> work(M);
    for (int b = 0; b <= order; ++b) {
        for (std::size_t i = 0; i < M; ++i) {
            const cplx ix{0.0, xi_of(i)};
            work[i] = hat[i] * std::pow(ix, b);
        }
        fft::transform(work.data(), M, true);
        for (int a = 0; a <= order; ++a) {
            double s = 0.0;
            for (std::size_t i = 0; i < M; ++i) {
                const double x = -W + i * h;
                s = std::max(s, std::pow(std::fabs(x), a) * std::abs(work[i]));
            }
            table[a][b] = s;
        }
    }
    return table;
}

double fn_seminorm(const SeparableKernel& k, int order) {
    const auto t1 = profile_seminorm_table(k.profiles[0], order);
    if (k.dim == 1) {
        double s = 0.0;
        for (int a = 0; a <= order; ++a)
            for (int b = 0; b <= order; ++b) s = std::max(s, t1[a][b]);
        return std::fabs(k.amplitude) * s;
    }
    const auto t2 = profile_seminorm_table(k.profiles[1], order);
    double s = 0.0;
    for (int a1 = 0; a1 <= order; ++a1)
        for (int a2 = 0; a1 + a2 <= order; ++a2)
            for (int b1 = 0; b1 <= order; ++b1)
                for (int b2 = 0; b1 + b2 <= order; ++b2)
                    s = std::max(s, t1[a1][b1] * t2[a2][b2]);
    return std::fabs(k.amplitude) * s;
}

// =============================================================================
// TestFamily
// =============================================================================

void TestFamily::require_certified() const {
    if (!certified || members.empty())
        throw std::invalid_argument("TestFamily: family is empty or not certified");
}

TestFamily default_test_family(int dim, int order) {
    // the seminorm audits are pure in (dim, order); cache them
    static std::mutex cache_mutex;
    static std::map<std::pair<int, int>, TestFamily> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find({dim, order});
        if (it != cache.end()) return it->second;
    }
    std::vector<SeparableKernel> raw;
    const Profile1D gauss{Profile1D::Kind::gaussian, 1.0};
    const Profile1D dgauss{Profile1D::Kind::gaussian_prime, 1.0};
    const Profile1D bump{Profile1D::Kind::bump, 1.0};
    if (dim == 1) {
        raw.push_back({"gaussian", 1, {gauss, gauss}, 1.0});
        raw.push_back({"gaussian_prime", 1, {dgauss, gauss}, 1.0});
        raw.push_back({"bump", 1, {bump, gauss}, 1.0});
    } else {
        raw.push_back({"gaussian", 2, {gauss, gauss}, 1.0});
        raw.push_back({"gaussian_prime_x1", 2, {dgauss, gauss}, 1.0});
        raw.push_back({"gaussian_prime_x2", 2, {gauss, dgauss}, 1.0});
        raw.push_back({"bump", 2, {bump, bump}, 1.0});
    }
    TestFamily fam;
    fam.order = order;
    for (auto& k : raw) {
        const double s = fn_seminorm(k, order);
        k.amplitude /= s * (1.0 + 1e-9);
        FamilyMember m;
        m.kernel = k;
        m.seminorm = fn_seminorm(k, order);
        m.mass = kernel_mass(k);
        fam.members.push_back(std::move(m));
    }
    fam.certified = std::all_of(fam.members.begin(), fam.members.end(),
                                [](const FamilyMember& m) { return m.seminorm <= 1.0; });
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        cache.emplace(std::pair{dim, order}, fam);
    }
    return fam;
}

SeparableKernel gaussian_mollifier(int dim, double sigma) {
    const Profile1D gauss{Profile1D::Kind::gaussian, sigma};
    SeparableKernel k{"gaussian_mollifier", dim, {gauss, gauss}, 1.0};
    k.amplitude = 1.0 / kernel_mass(k);
    return k;
}

} // namespace vexh
