#include "vexh/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "vexh/kernels.hpp"

namespace vexh {

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

namespace {

GridFunction normalize_sup(GridFunction f) {
    const double m = max_abs(f);
    if (m > 0.0)
        for (cplx& z : f.samples) z /= m;
    return f;
}

} // namespace

GridFunction remove_mean(const GridFunction& f) {
    cplx mean{0.0, 0.0};
    for (const cplx& z : f.samples) mean += z;
    mean /= static_cast<double>(f.size());
    GridFunction out = f;
    for (cplx& z : out.samples) z -= mean;
    return out;
}

GridFunction gaussian_packet(const Grid& g, double c1, double c2, double sigma, std::string tag) {
    GridFunction f(g, std::move(tag));
    for (std::size_t i = 0; i < g.size(); ++i) {
        auto p = g.point(i);
        double d2 = (p[0] - c1) * (p[0] - c1);
        if (g.dim == 2) d2 += (p[1] - c2) * (p[1] - c2);
        f.samples[i] = cplx{std::exp(-d2 / (2.0 * sigma * sigma)), 0.0};
    }
    return normalize_sup(std::move(f));
}

GridFunction modulated_gaussian(const Grid& g, double c1, double c2, double sigma, double freq,
                                std::string tag) {
    GridFunction f = gaussian_packet(g, c1, c2, sigma, std::move(tag));
    for (std::size_t i = 0; i < g.size(); ++i) {
        auto p = g.point(i);
        f.samples[i] *= std::cos(freq * (p[0] - c1) + (g.dim == 2 ? 0.7 * freq * (p[1] - c2) : 0.0));
    }
    return normalize_sup(std::move(f));
}

GridFunction poisson_data(const Grid& g, double t, int shift_cells, std::string tag) {
    GridFunction f = sample_poisson_periodized(g, t);
    f = shift(f, 1, shift_cells);
    f.tag = std::move(tag);
    return normalize_sup(std::move(f));
}

GridFunction box_smooth_atom(const Grid& g, double halfwidth, double smoothing, std::string tag) {
    GridFunction f(g, std::move(tag));
    const double inv = 1.0 / (std::numbers::sqrt2 * smoothing);
    auto profile = [&](double x) {
        return 0.5 * (std::erf((x + halfwidth) * inv) - std::erf((x - halfwidth) * inv));
    };
    for (std::size_t i = 0; i < g.size(); ++i) {
        auto p = g.point(i);
        double v = profile(p[0]);
        if (g.dim == 2) v *= profile(p[1]);
        f.samples[i] = cplx{v, 0.0};
    }
    return normalize_sup(remove_mean(f));
}

GridFunction random_bandlimited(const Grid& g, int band, bool zero_mean, std::mt19937_64& rng,
                                std::string tag) {
    if (band < 1) throw std::domain_error("random_bandlimited: band must be >= 1");
    Spectrum s{g, std::vector<cplx>(g.size(), cplx{0.0, 0.0})};
    const int N = g.points_per_axis;
    auto coeff_at = [&](int m1, int m2) -> cplx& {
        const int i1 = (m1 + N) % N;
        const int i2 = (m2 + N) % N;
        return s.coeff[g.dim == 1 ? static_cast<std::size_t>(i1) : g.flatten(i1, i2)];
    };
    auto draw = [&](int m1, int m2) {
        const double re = 2.0 * uniform01(rng) - 1.0;
        const double im = 2.0 * uniform01(rng) - 1.0;
        const double decay = std::exp(-(m1 * m1 + m2 * m2) / (2.0 * band * band));
        const cplx c = cplx{re, im} * decay;
        coeff_at(m1, m2) = c;
        coeff_at(-m1, -m2) = std::conj(c);  // real-valued field
    };
    if (g.dim == 1) {
        for (int m = 1; m <= band; ++m) draw(m, 0);
    } else {
        for (int m1 = 0; m1 <= band; ++m1)
            for (int m2 = -band; m2 <= band; ++m2) {
                if (m1 == 0 && m2 <= 0) continue;
                draw(m1, m2);
            }
    }
    if (!zero_mean) coeff_at(0, 0) = cplx{uniform01(rng), 0.0};
    GridFunction f = inverse_fourier(s);
    for (cplx& z : f.samples) z = cplx{z.real(), 0.0};  // drop round-off imaginary dust
    f.tag = std::move(tag);
    return normalize_sup(std::move(f));
}

std::vector<GridFunction> make_corpus(const Grid& g, const CorpusSpec& spec, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<GridFunction> corpus;
    const double L = g.period;
    auto jitter = [&](double scale) { return (uniform01(rng) - 0.5) * scale; };

    for (int i = 0; i < spec.gaussians && !spec.mean_zero_only; ++i) {
        const double sigma = L / 16.0 * (0.6 + 0.8 * uniform01(rng));
        corpus.push_back(gaussian_packet(g, jitter(L / 4.0), jitter(L / 4.0), sigma,
                                         "gaussian_" + std::to_string(i)));
    }
    for (int i = 0; i < spec.modulated; ++i) {
        const double sigma = L / 16.0 * (0.6 + 0.8 * uniform01(rng));
        const double freq = 2.0 * std::numbers::pi / L * (4.0 + 4.0 * uniform01(rng));
        corpus.push_back(modulated_gaussian(g, jitter(L / 4.0), jitter(L / 4.0), sigma, freq,
                                            "modulated_" + std::to_string(i)));
    }
    for (int i = 0; i < spec.poisson_data && !spec.mean_zero_only; ++i) {
        const double t = L / 16.0 * (1.0 + uniform01(rng));
        const int cells = static_cast<int>(uniform01(rng) * g.points_per_axis / 4);
        corpus.push_back(poisson_data(g, t, cells, "poisson_data_" + std::to_string(i)));
    }
    for (int i = 0; i < spec.box_atoms; ++i) {
        const double w = L / 16.0 * (0.8 + 0.8 * uniform01(rng));
        corpus.push_back(box_smooth_atom(g, w, L / 64.0, "box_atom_" + std::to_string(i)));
    }
    for (int i = 0; i < spec.random_bandlimited; ++i) {
        // resolution-independent band so refinement pairs see the same field
        const int band = std::max(2, std::min(g.points_per_axis / 4,
                                              96 / std::max(1, spec.band_limit_divisor)));
        corpus.push_back(
            random_bandlimited(g, band, true, rng, "random_band_" + std::to_string(i)));
    }
    return corpus;
}

GridFunction fixed_band_function(const Grid& g, std::string tag) {
    GridFunction f(g, std::move(tag));
    const double w = 2.0 * std::numbers::pi / g.period;
    for (std::size_t i = 0; i < g.size(); ++i) {
        auto p = g.point(i);
        const double t1 = w * p[0], t2 = w * p[1];
        double v = std::cos(t1) + 0.5 * std::sin(2.0 * t1 + 0.4) + 0.25 * std::cos(3.0 * t1 + 0.3);
        if (g.dim == 2)
            v += 0.5 * std::cos(t1) * std::cos(2.0 * t2) + 0.35 * std::sin(t2 + 0.2) +
                 0.2 * std::sin(2.0 * t1 + 0.1) * std::sin(t2);
        f.samples[i] = cplx{v, 0.0};
    }
    return normalize_sup(std::move(f));
}

// =============================================================================
// Exponent builtins
// =============================================================================

std::string ExponentSpec::describe() const {
    auto num = [](double v) {
        std::string s = std::to_string(v);
        s.erase(s.find_last_not_of('0') + 1);
        if (!s.empty() && s.back() == '.') s.pop_back();
        return s;
    };
    if (expr == "constant") return "constant(" + num(base) + ")";
    if (expr == "sin-bump") return "sin-bump(base=" + num(base) + ",amp=" + num(amp) + ")";
    if (expr == "affine-clamped")
        return "affine-clamped(base=" + num(base) + ",slope=" + num(amp) + ",lo=" + num(lo) +
               ",hi=" + num(hi) + ")";
    if (expr == "two-level-step")
        return "two-level-step(lo=" + num(base) + ",hi=" + num(amp) + ",at=" + num(threshold) + ")";
    return expr;
}

VariableExponent make_exponent(const Grid& g, const ExponentSpec& spec) {
    const double L = g.period;
    VariableExponent p;
    if (spec.expr == "constant") {
        p = sample_exponent(g, [&](double, double) { return spec.base; }, spec.p_zero);
    } else if (spec.expr == "sin-bump") {
        p = sample_exponent(
            g,
            [&](double x, double) {
                const double s = std::sin(2.0 * std::numbers::pi * x / L);
                return spec.base + spec.amp * s * s;
            },
            spec.p_zero);
    } else if (spec.expr == "affine-clamped") {
        p = sample_exponent(
            g, [&](double x, double) { return std::clamp(spec.base + spec.amp * x, spec.lo, spec.hi); },
            spec.p_zero);
    } else if (spec.expr == "two-level-step") {
        p = sample_exponent(
            g, [&](double x, double) { return x < spec.threshold ? spec.base : spec.amp; },
            spec.p_zero);
    } else {
        throw std::invalid_argument("make_exponent: unknown builtin '" + spec.expr + "'");
    }
    p.tag = spec.describe();
    return p;
}

} // namespace vexh
