#include "vexh/lebesgue.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace vexh {

namespace {

double cell_measure(const Grid& g) {
    double w = g.spacing();
    return g.dim == 2 ? w * g.spacing() : w;
}

// Deterministic uniform in [0,1) from raw engine output.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

Modular modular(const GridFunction& f, const VariableExponent& p) {
    if (!(f.grid == p.grid)) throw std::domain_error("modular: exponent not sampled on f's grid");
    f.check_finite();
    const double w = cell_measure(f.grid);
    double acc = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double a = std::abs(f.samples[i]);
        if (p.inf_mask[i]) {
            if (a > 1.0) return Modular{std::numeric_limits<double>::infinity()};
            continue;
        }
        if (a > 0.0) acc += std::pow(a, p.values[i]);
    }
    return Modular{acc * w};
}

LuxemburgNorm luxemburg_norm(const GridFunction& f, const VariableExponent& p, double tol,
                             bool force_bisection) {
    if (!(tol > 0.0)) throw std::domain_error("luxemburg_norm: tol must be positive");
    if (!(f.grid == p.grid))
        throw std::domain_error("luxemburg_norm: exponent not sampled on f's grid");
    f.check_finite();

    const double fmax = max_abs(f);
    if (fmax == 0.0) return LuxemburgNorm{0.0, 0.0, 0.0, 0.0};

    std::vector<double> absf(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) absf[i] = std::abs(f.samples[i]);
    const double w = cell_measure(f.grid);

    auto rho = [&](double lambda) {
        const double inv = 1.0 / lambda;
        double acc = 0.0;
        for (std::size_t i = 0; i < absf.size(); ++i) {
            const double a = absf[i] * inv;
            if (p.inf_mask[i]) {
                if (a > 1.0) return std::numeric_limits<double>::infinity();
                continue;
            }
            if (a > 0.0) acc += std::pow(a, p.values[i]);
        }
        return acc * w;
    };

    if (!force_bisection && !p.has_infinity_nodes() && p.p_minus == p.p_plus) {
        // constant exponent: the norm is the classical L^q norm
        const double q = p.p_minus;
        double acc = 0.0;
        for (double a : absf)
            if (a > 0.0) acc += std::pow(a, q);
        const double value = std::pow(acc * w, 1.0 / q);
        return LuxemburgNorm{value, value, value, value > 0.0 ? rho(value) : 0.0};
    }

    // support measure for the initial guess
    std::size_t supp = 0;
    for (double a : absf)
        if (a > 0.0) ++supp;
    const double supp_measure = std::max(w * static_cast<double>(supp), w);

    double lambda = fmax * std::pow(supp_measure, 1.0 / p.p_minus);
    if (!(lambda > 0.0) || !std::isfinite(lambda)) lambda = fmax;

    double lo, hi;
    if (rho(lambda) <= 1.0) {
        hi = lambda;
        lo = lambda;
        for (int i = 0; i < 2000 && rho(lo) <= 1.0; ++i) {
            hi = lo;
            lo *= 0.5;
        }
    } else {
        lo = lambda;
        hi = lambda;
        for (int i = 0; i < 2000 && rho(hi) > 1.0; ++i) {
            lo = hi;
            hi *= 2.0;
        }
    }

    // bracketed root search on g = rho(f/.) - 1: false position with the
    // Illinois safeguard, midpoint fallback when an endpoint is infinite or
    // the secant step leaves the bracket; the bracket invariant
    // rho(f/lo) > 1 >= rho(f/hi) holds throughout
    double g_lo = rho(lo) - 1.0;
    double g_hi = rho(hi) - 1.0;
    int side = 0;
    for (int it = 0; it < 200 && (hi - lo) > tol * hi; ++it) {
        double mid;
        if (!std::isfinite(g_lo) || g_lo - g_hi == 0.0) {
            mid = 0.5 * (lo + hi);
        } else {
            mid = lo + g_lo * (hi - lo) / (g_lo - g_hi);
            const double margin = 0.01 * (hi - lo);
            if (!(mid > lo + margin) || !(mid < hi - margin)) mid = 0.5 * (lo + hi);
        }
        const double g_mid = rho(mid) - 1.0;
        if (g_mid <= 0.0) {
            hi = mid;
            g_hi = g_mid;
            if (side == -1 && std::isfinite(g_lo)) g_lo *= 0.5;
            side = -1;
        } else {
            lo = mid;
            g_lo = g_mid;
            if (side == 1) g_hi *= 0.5;
            side = 1;
        }
    }
    return LuxemburgNorm{hi, lo, hi, rho(hi)};
}

HolderPairing holder_pairing(const GridFunction& f, const GridFunction& g,
                             const VariableExponent& p) {
    if (p.p_minus < 1.0) throw std::invalid_argument("holder_pairing: requires p_minus >= 1");
    if (!(f.grid == g.grid) || !(f.grid == p.grid))
        throw std::domain_error("holder_pairing: grid mismatch");
    GridFunction prod(f.grid);
    for (std::size_t i = 0; i < f.size(); ++i)
        prod.samples[i] = cplx{std::abs(f.samples[i]) * std::abs(g.samples[i]), 0.0};
    const double lhs = quadrature(prod).real();
    const double nf = luxemburg_norm(f, p).value;
    const double ng = luxemburg_norm(g, dual_exponent(p)).value;
    const double denom = nf * ng;
    return HolderPairing{lhs, denom > 0.0 ? lhs / denom : 0.0};
}

double norm_lower_bound_by_duality(const GridFunction& f, const VariableExponent& p, int trials,
                                   std::mt19937_64& rng) {
    if (p.p_minus < 1.0)
        throw std::invalid_argument("norm_lower_bound_by_duality: requires p_minus >= 1");
    if (trials < 1) throw std::invalid_argument("norm_lower_bound_by_duality: trials >= 1");
    if (max_abs(f) == 0.0) return 0.0;
    const VariableExponent pstar = dual_exponent(p);

    auto pairing = [&](const GridFunction& g) {
        const double ng = luxemburg_norm(g, pstar).value;
        if (ng == 0.0) return 0.0;
        cplx acc{0.0, 0.0};
        for (std::size_t i = 0; i < f.size(); ++i) acc += f.samples[i] * g.samples[i];
        double w = f.grid.spacing();
        if (f.grid.dim == 2) w *= f.grid.spacing();
        return std::abs(acc) * w / ng;
    };

    // analytic near-optimizer g ~ sgn(conj f) |f|^{p(.)-1}
    GridFunction cand(f.grid);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double a = std::abs(f.samples[i]);
        if (a == 0.0) continue;
        const cplx phase = std::conj(f.samples[i]) / a;
        cand.samples[i] = phase * std::pow(a, p.values[i] - 1.0);
    }
    double best = pairing(cand);

    for (int t = 0; t < trials; ++t) {
        GridFunction g(f.grid);
        for (std::size_t i = 0; i < g.size(); ++i)
            g.samples[i] = cplx{2.0 * uniform01(rng) - 1.0, 0.0};
        best = std::max(best, pairing(g));
    }
    return best;
}

} // namespace vexh
