#include "vexh/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "vexh/characterize.hpp"
#include "vexh/parallel.hpp"

namespace vexh {

namespace {

using nlohmann::ordered_json;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

double rel_gap(double a, double b) {
    const double scale = std::max(std::fabs(a), std::fabs(b));
    return scale == 0.0 ? 0.0 : std::fabs(a - b) / scale;
}

// least-squares slope of log(res) against log(h); residuals at the round-off
// floor are clamped so a vanished residual never fails an order check
double measured_order(const std::vector<double>& hs, const std::vector<double>& res,
                      double floor = 1e-13) {
    bool all_floor = true;
    for (double r : res)
        if (r > floor) all_floor = false;
    if (all_floor) return 9.99;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const int n = static_cast<int>(hs.size());
    for (int i = 0; i < n; ++i) {
        const double x = std::log(hs[i]);
        const double y = std::log(std::max(res[i], floor));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

Grid scaled_grid(const Grid& g, double factor) {
    int n = static_cast<int>(std::lround(g.points_per_axis * factor));
    int pow2 = 8;
    while (pow2 * 2 <= n) pow2 *= 2;
    return Grid(g.dim, g.period, std::max(8, pow2));
}

std::vector<double> uniform_ladder(double t0, double dt, int levels) {
    std::vector<double> t(levels);
    for (int k = 0; k < levels; ++k) t[k] = t0 + k * dt;
    return t;
}

bool log_holder_friendly(const ExponentSpec& spec) { return spec.expr != "two-level-step"; }

// smallest composition order m with p_minus > (n-1)/(n+m-1)
int required_order(int dim, double p_minus) {
    for (int m = 1; m <= 8; ++m)
        if (p_minus > static_cast<double>(dim - 1) / static_cast<double>(dim + m - 1)) return m;
    return 8;
}

} // namespace

// =============================================================================
// Context
// =============================================================================

SuiteContext make_context(const ConfigFile& cfg, std::uint64_t seed_override, int jobs_override,
                          double grid_scale) {
    SuiteContext ctx;
    const int dim = cfg.get_int("grid", "dim", 1);
    const double period = cfg.get_double("grid", "period", dim == 1 ? 16.0 : 8.0);
    int points = cfg.get_int("grid", "points", dim == 1 ? 2048 : 128);
    Grid base(dim, period, points);
    ctx.grid = grid_scale == 1.0 ? base : scaled_grid(base, grid_scale);

    // single-exponent section: constant = <float> or expr = <named builtin>
    if (cfg.has("exponent", "constant") || cfg.has("exponent", "expr")) {
        ExponentSpec spec;
        if (cfg.has("exponent", "constant")) {
            spec.expr = "constant";
            spec.base = cfg.get_double("exponent", "constant", 2.0);
        } else {
            spec.expr = cfg.get("exponent", "expr", "constant");
            spec.base = cfg.get_double("exponent", "base", 2.0);
            spec.amp = cfg.get_double("exponent", "amp", 0.0);
            spec.lo = cfg.get_double("exponent", "lo", 0.0);
            spec.hi = cfg.get_double("exponent", "hi", 0.0);
            spec.threshold = cfg.get_double("exponent", "threshold", 0.0);
        }
        spec.p_zero = cfg.get_double("exponent", "p_zero", 0.0);
        ctx.exponent_specs.push_back(spec);
    }
    for (const auto& key : cfg.keys("exponents")) {
        const std::string val = cfg.get("exponents", key, "");
        // form: name(a,b,...)
        const auto open = val.find('(');
        ExponentSpec spec;
        std::vector<double> args;
        if (open == std::string::npos) {
            spec.expr = val;
        } else {
            spec.expr = val.substr(0, open);
            const auto close = val.find(')', open);
            if (close == std::string::npos)
                throw ConfigError("exponent spec missing ')': " + val);
            std::istringstream as(val.substr(open + 1, close - open - 1));
            std::string cell;
            while (std::getline(as, cell, ',')) args.push_back(std::stod(cell));
        }
        auto arg = [&](std::size_t i, double fallback) {
            return i < args.size() ? args[i] : fallback;
        };
        if (spec.expr == "constant") {
            spec.base = arg(0, 2.0);
            spec.p_zero = arg(1, 0.0);
        } else if (spec.expr == "sin-bump") {
            spec.base = arg(0, 2.0);
            spec.amp = arg(1, 1.0);
            spec.p_zero = arg(2, 0.0);
        } else if (spec.expr == "affine-clamped") {
            spec.base = arg(0, 2.0);
            spec.amp = arg(1, 0.05);
            spec.lo = arg(2, 1.8);
            spec.hi = arg(3, 2.4);
            spec.p_zero = arg(4, 0.0);
        } else if (spec.expr == "two-level-step") {
            spec.base = arg(0, 1.0);
            spec.amp = arg(1, 2.0);
            spec.threshold = arg(2, 0.0);
            spec.p_zero = arg(3, 0.0);
        } else {
            throw ConfigError("unknown exponent builtin: " + spec.expr);
        }
        ctx.exponent_specs.push_back(spec);
    }
    if (ctx.exponent_specs.empty()) {
        ExponentSpec c2;
        c2.expr = "constant";
        c2.base = 2.0;
        ctx.exponent_specs.push_back(c2);
    }

    ctx.corpus_spec.gaussians = cfg.get_int("corpus", "gaussians", 2);
    ctx.corpus_spec.modulated = cfg.get_int("corpus", "modulated", 2);
    ctx.corpus_spec.poisson_data = cfg.get_int("corpus", "poisson_data", 1);
    ctx.corpus_spec.box_atoms = cfg.get_int("corpus", "box_atoms", 1);
    ctx.corpus_spec.random_bandlimited = cfg.get_int("corpus", "random_bandlimited", 2);
    ctx.corpus_spec.band_limit_divisor = cfg.get_int("corpus", "band_limit_divisor", 8);
    ctx.corpus_spec.mean_zero_only = cfg.get_bool("corpus", "mean_zero_only", false);
    ctx.planted_defect = cfg.get("corpus", "planted_defect", "none");

    ctx.seed = seed_override != 0 ? seed_override
                                  : static_cast<std::uint64_t>(cfg.get_int("run", "seed", 42));
    ctx.jobs = jobs_override != 0 ? jobs_override : cfg.get_int("run", "jobs", 0);
    ctx.bisection_tol = cfg.get_double("tolerances", "bisection", 1e-12);
    if (!(ctx.bisection_tol > 0.0))
        throw ConfigError("[tolerances] bisection must be positive");
    return ctx;
}

// =============================================================================
// lebesgue suite
// =============================================================================

SuiteResult run_lebesgue_suite(const SuiteContext& ctx) {
    Timer timer;
    SuiteResult result;
    result.name = "lebesgue";
    auto fail = [&](const std::string& what) { result.failures.push_back("lebesgue: " + what); };

    const Grid& g = ctx.grid;
    const auto corpus = make_corpus(g, ctx.corpus_spec, ctx.seed);
    std::mt19937_64 rng(ctx.seed ^ 0x1eb65ULL);

    ordered_json records = ordered_json::array();
    for (const auto& spec : ctx.exponent_specs) {
        const VariableExponent p = make_exponent(g, spec);
        ordered_json erec;
        erec["exponent"] = spec.describe();
        erec["p_minus"] = p.p_minus;
        erec["p_plus"] = p.p_plus;
        erec["p_zero"] = p.p_zero;

        ordered_json frecs = ordered_json::array();
        for (const auto& f : corpus) {
            const LuxemburgNorm n = luxemburg_norm(f, p, ctx.bisection_tol);
            ordered_json fr;
            fr["tag"] = f.tag;
            fr["norm"] = n.value;
            fr["bracket_width"] = n.bracket_hi - n.bracket_lo;
            fr["modular_at_norm"] = n.modular_at_norm;
            if (max_abs(f) > 0.0 &&
                (n.modular_at_norm < 1.0 - 1e-6 || n.modular_at_norm > 1.0 + 1e-6))
                fail("modular-at-norm identity violated for " + f.tag + " / " + spec.describe());

            // homogeneity under c = 3.7
            GridFunction cf = f;
            for (cplx& z : cf.samples) z *= 3.7;
            const double ncf = luxemburg_norm(cf, p).value;
            if (rel_gap(ncf, 3.7 * n.value) > 1e-10)
                fail("homogeneity violated for " + f.tag + " / " + spec.describe());

            // constant-exponent closed form against the bisection path
            if (p.p_minus == p.p_plus) {
                const double q = p.p_minus;
                const double closed = std::pow(modular(f, p).value, 1.0 / q);
                const double bisected =
                    luxemburg_norm(f, p, ctx.bisection_tol, true).value;
                fr["closed_form_gap"] = rel_gap(bisected, closed);
                if (rel_gap(bisected, closed) > 1e-10)
                    fail("constant-exponent norm mismatch for " + f.tag);
            }

            if (p.p_minus >= 1.0 && !p.has_infinity_nodes()) {
                const double lb = norm_lower_bound_by_duality(f, p, 8, rng);
                fr["duality_lower_bound"] = lb;
                if (lb > 2.0 * n.value * (1.0 + 1e-9) || lb < 0.3 * n.value)
                    fail("duality lower bound out of [0.3,2]x norm for " + f.tag);
            }
            frecs.push_back(std::move(fr));
        }
        erec["functions"] = std::move(frecs);

        // triangle inequality and the modular-to-norm bound on random pairs
        if (p.p_minus >= 1.0) {
            for (int trial = 0; trial < 8; ++trial) {
                const auto& f = corpus[rng() % corpus.size()];
                const auto& h = corpus[rng() % corpus.size()];
                GridFunction sum = f;
                for (std::size_t i = 0; i < sum.size(); ++i) sum.samples[i] += h.samples[i];
                const double lhs = luxemburg_norm(sum, p).value;
                const double rhs = luxemburg_norm(f, p).value + luxemburg_norm(h, p).value;
                if (lhs > rhs * (1.0 + 1e-10)) fail("triangle inequality violated");

                const auto& fg = corpus[trial % corpus.size()];
                const double delta = 0.25 + 2.0 * uniform01(rng);
                GridFunction scaled = fg;
                for (cplx& z : scaled.samples) z /= delta;
                const double c = modular(scaled, p).value;
                const double bound =
                    std::max({std::pow(c, 1.0 / p.p_minus), std::pow(c, 1.0 / p.p_plus), 1.0});
                if (luxemburg_norm(fg, p).value > bound * delta * (1.0 + 1e-9))
                    fail("modular-to-norm bound violated");
            }
            // Hoelder pairing ratio <= 2 across corpus pairs
            double worst_ratio = 0.0;
            for (std::size_t a = 0; a < corpus.size(); ++a)
                for (std::size_t b = a; b < corpus.size(); ++b) {
                    const auto hp = holder_pairing(corpus[a], corpus[b], p);
                    worst_ratio = std::max(worst_ratio, hp.rhs_bound_ratio);
                }
            erec["holder_worst_ratio"] = worst_ratio;
            if (worst_ratio > 2.0 + 1e-9) fail("Hoelder ratio exceeds 2");
        }
        records.push_back(std::move(erec));
    }

    // two-level analytic bisection case (1D): f = 2 chi_[0,2), p = 1 on [0,1),
    // 2 elsewhere; modular(f/l) = 2/l + 4/l^2 = 1 at l = 1 + sqrt 5
    if (g.dim == 1) {
        VariableExponent step = sample_exponent(
            g, [](double x, double) { return (x >= 0.0 && x < 1.0) ? 1.0 : 2.0; });
        GridFunction f(g, "two_level_case");
        for (std::size_t i = 0; i < g.size(); ++i) {
            const double x = g.point(i)[0];
            f.samples[i] = (x >= 0.0 && x < 2.0) ? cplx{2.0, 0.0} : cplx{0.0, 0.0};
        }
        const double lam = luxemburg_norm(f, step).value;
        const double expected = 1.0 + std::sqrt(5.0);
        result.data["two_level_lambda"] = lam;
        result.data["two_level_expected"] = expected;
        if (std::fabs(lam - expected) > 1e-8) fail("two-level analytic Luxemburg norm mismatch");
    }

    result.data["exponents"] = std::move(records);
    result.seconds = timer.seconds();
    return result;
}

// =============================================================================
// operators suite
// =============================================================================

SuiteResult run_operators_suite(const SuiteContext& ctx) {
    Timer timer;
    SuiteResult result;
    result.name = "operators";
    auto fail = [&](const std::string& what) { result.failures.push_back("operators: " + what); };

    const Grid& g = ctx.grid;
    const auto corpus = make_corpus(g, ctx.corpus_spec, ctx.seed);
    const int n = g.dim;

    // Riesz algebra on every corpus member
    double worst_identity = 0.0, worst_commute = 0.0;
    for (const auto& f : corpus) {
        GridFunction acc(g);
        for (int j = 1; j <= n; ++j) {
            const GridFunction rj = riesz(riesz(f, RieszSymbol({j})), RieszSymbol({j}));
            for (std::size_t i = 0; i < acc.size(); ++i) acc.samples[i] += rj.samples[i];
        }
        const GridFunction mean_removed = remove_mean(f);
        for (std::size_t i = 0; i < acc.size(); ++i)
            worst_identity =
                std::max(worst_identity, std::abs(acc.samples[i] + mean_removed.samples[i]));
        if (n == 2) {
            const GridFunction a = riesz(f, RieszSymbol({1, 2}));
            const GridFunction b = riesz(f, RieszSymbol({2, 1}));
            const GridFunction c = riesz(riesz(f, RieszSymbol({1})), RieszSymbol({2}));
            worst_commute = std::max(worst_commute, max_abs_diff(a, b));
            worst_commute = std::max(worst_commute, max_abs_diff(a, c));
        }
    }
    result.data["riesz_identity_residual"] = worst_identity;
    result.data["riesz_commute_residual"] = worst_commute;
    if (worst_identity > 1e-10) fail("sum R_j^2 != -(I - mean)");
    if (worst_commute > 1e-10) fail("Riesz compositions do not commute");

    // maximal: pointwise lower bound and sublinearity spot checks
    const auto radii = default_maximal_radii(g);
    double worst_lower = 0.0;
    for (const auto& f : corpus) {
        const GridFunction mf = hl_maximal(f, radii);
        for (std::size_t i = 0; i < f.size(); ++i)
            worst_lower =
                std::max(worst_lower, std::abs(f.samples[i]) - mf.samples[i].real());
        if (&f == &corpus.front()) {
            const auto& h = corpus.back();
            GridFunction sum = f;
            for (std::size_t i = 0; i < sum.size(); ++i) sum.samples[i] += h.samples[i];
            const GridFunction msum = hl_maximal(sum, radii);
            const GridFunction mh = hl_maximal(h, radii);
            for (std::size_t i = 0; i < sum.size(); ++i)
                if (msum.samples[i].real() >
                    mf.samples[i].real() + mh.samples[i].real() + 1e-12)
                    fail("maximal operator not sublinear");
        }
    }
    result.data["maximal_lower_bound_defect"] = worst_lower;
    if (worst_lower > 1e-12) fail("Mf >= |f| violated");

    // empirical L^{p/p0} boundedness constants, refinement stability
    ordered_json cm_records = ordered_json::array();
    const Grid refined = scaled_grid(g, 2.0);
    const auto corpus_refined = make_corpus(refined, ctx.corpus_spec, ctx.seed);
    for (const auto& spec : ctx.exponent_specs) {
        if (!log_holder_friendly(spec)) continue;
        auto cm_for = [&](const Grid& gg, const std::vector<GridFunction>& cc) {
            const VariableExponent p = make_exponent(gg, spec);
            const VariableExponent ps = scale_exponent(p, p.p_zero);
            const auto rr = default_maximal_radii(gg);
            double cm = 0.0;
            for (const auto& f : cc) {
                const double nf = luxemburg_norm(f, ps).value;
                if (nf == 0.0) continue;
                cm = std::max(cm, luxemburg_norm(hl_maximal(f, rr), ps).value / nf);
            }
            return cm;
        };
        const double cm_base = cm_for(g, corpus);
        const double cm_refined = cm_for(refined, corpus_refined);
        VariableExponent p = make_exponent(g, spec);
        attach_log_holder_certificate(p);
        const LogHolderRecord rec = *p.log_holder;
        ordered_json jr;
        jr["exponent"] = spec.describe();
        jr["c_log_hat"] = rec.c_log;
        jr["c_inf_hat"] = rec.c_inf;
        jr["p_inf_hat"] = rec.p_inf;
        jr["c_m"] = cm_base;
        jr["c_m_refined"] = cm_refined;
        cm_records.push_back(std::move(jr));
        if (cm_base > 0.0 && cm_refined > 0.0 &&
            (cm_base / cm_refined > 1.25 || cm_refined / cm_base > 1.25))
            fail("maximal boundedness constant unstable under refinement for " + spec.describe());
    }
    result.data["maximal_boundedness"] = std::move(cm_records);
    result.seconds = timer.seconds();
    return result;
}

// =============================================================================
// halfspace suite
// =============================================================================

SuiteResult run_halfspace_suite(const SuiteContext& ctx) {
    Timer timer;
    SuiteResult result;
    result.name = "halfspace";
    auto fail = [&](const std::string& what) { result.failures.push_back("halfspace: " + what); };

    const Grid& g = ctx.grid;
    const int n = g.dim;
    const double L = g.period;
    const auto corpus = make_corpus(g, ctx.corpus_spec, ctx.seed);
    const GridFunction& probe = corpus.front();

    // conjugate identity: spectral path exact, kernel path gap shrinks
    {
        const double t = 4.0 * L / g.points_per_axis;  // resolvable but aliasing-visible
        const HalfSpaceField u = poisson_extend(riesz(probe, RieszSymbol({1})), {t});
        const GridFunction spec_path = u.slices[0];
        const GridFunction direct = inverse_fourier(apply_multiplier(
            fourier(probe), [t](std::array<double, 2> xi) {
                const double r = std::hypot(xi[0], xi[1]);
                return r == 0.0 ? cplx{0.0, 0.0}
                                : cplx{0.0, -xi[0] / r} * std::exp(-t * r);
            }));
        const double exact_gap = max_abs_diff(spec_path, direct);
        result.data["conjugate_spectral_gap"] = exact_gap;
        if (exact_gap > 1e-12) fail("conjugate identity not exact on the spectral path");

        auto kernel_gap = [&](const Grid& gg) {
            const GridFunction f = fixed_band_function(gg);
            const GridFunction kp = convolve(f, sample_conjugate_poisson_periodized(gg, 1, t));
            const GridFunction sp = poisson_extend(riesz(f, RieszSymbol({1})), {t}).slices[0];
            return max_abs_diff(kp, sp);
        };
        const double gap_base = kernel_gap(g);
        const double gap_coarse = kernel_gap(scaled_grid(g, 0.5));
        result.data["conjugate_kernel_gap"] = gap_base;
        result.data["conjugate_kernel_gap_coarse"] = gap_coarse;
        if (!(gap_base < gap_coarse || gap_base < 1e-13))
            fail("kernel-quadrature gap does not shrink under refinement");
        result.data["poisson_tail_mass"] = poisson_window_tail_mass(g, t);
    }

    // residual convergence orders on a 3-point ladder
    {
        std::vector<double> hs, cr_div, cr_curl, harm, grad_sym;
        for (double scale : {0.5, 1.0, 2.0}) {
            const Grid gg = scaled_grid(g, scale);
            const double h = gg.spacing();
            const GridFunction f = fixed_band_function(gg);
            const auto ladder = uniform_ladder(L / 32.0, h, 5);
            const HarmonicVector F = poisson_vector(f, ladder);
            const auto [dres, cres] = cr_residual(F);
            hs.push_back(h);
            cr_div.push_back(dres);
            cr_curl.push_back(cres);
            harm.push_back(harmonicity_residual(F.components[0]));
            const TensorField G1 = tensor_from_vector(F);
            grad_sym.push_back(symmetry_residual(gradient_tensor(G1, true)));
        }
        result.data["cr_div_residuals"] = cr_div;
        result.data["cr_curl_residuals"] = cr_curl;
        result.data["harmonicity_residuals"] = harm;
        result.data["grad_symmetry_residuals"] = grad_sym;
        const double o1 = measured_order(hs, cr_div);
        const double o2 = measured_order(hs, cr_curl);
        const double o3 = measured_order(hs, harm);
        const double o4 = measured_order(hs, grad_sym);
        result.data["orders"] = {{"cr_div", o1}, {"cr_curl", o2}, {"harmonicity", o3},
                                 {"grad_symmetry", o4}};
        if (o1 < 1.8) fail("cr_residual divergence order below 1.8");
        if (o2 < 1.8) fail("cr_residual curl order below 1.8");
        if (o3 < 1.8) fail("harmonicity_residual order below 1.8");
        if (o4 < 1.8) fail("gradient symmetry order below 1.8");
    }

    // spectral tensor residuals (rank 2, mean-zero data)
    {
        const GridFunction f0 = fixed_band_function(g);
        const auto ladder = uniform_ladder(L / 32.0, g.spacing(), 3);
        const TensorField G = poisson_tensor(f0, ladder, 2);
        const double sym = symmetry_residual(G);
        const double tr = trace_residual(G);
        result.data["tensor_symmetry_residual"] = sym;
        result.data["tensor_trace_residual"] = tr;
        if (sym > 1e-9) fail("tensor symmetry residual above 1e-9");
        if (tr > 1e-9) fail("tensor trace residual above 1e-9");
        const GridFunction u0 = semigroup_slice(G.components[0], ladder[0]);
        const GridFunction e0 = poisson_extend(f0, ladder).slices[0];
        if (max_abs_diff(u0, e0) > 1e-13) fail("<G, e0^m> != poisson_extend(f)");
    }

    // harmonic majorant sweep
    {
        const double delta = 0.05;
        std::vector<int> m_list = n == 1 ? std::vector<int>{1} : std::vector<int>{1, 2};
        // eta grid inside the admissible band for the widest-m case with p = 2
        const VariableExponent p2 = constant_exponent(g, 2.0);
        double worst = -1e300;
        for (int m : m_list) {
            const double lo = static_cast<double>(n - 1) / (n + m - 1) + delta;
            const double hi = p2.p_minus - delta;
            const std::vector<double> eta_grid{lo, 0.5 * (lo + hi), hi};
            const std::vector<double> a_grid{L / 32.0, L / 16.0};
            const std::vector<double> t_grid{L / 32.0, L / 16.0};
            const auto sec = majorant_suite(corpus, p2, {m}, eta_grid, a_grid, t_grid, ctx.jobs);
            worst = std::max(worst, sec.worst_excess);
            for (const auto& kr : sec.kint)
                if (kr.k_min > 0.0 && kr.k_max / std::max(kr.k_min, 1e-300) > 1e3)
                    fail("k_integral varies by more than 1e3 over the ladder for " + kr.tag);
        }
        result.data["majorant_worst_excess"] = worst;
        const double tol = n == 1 ? (g.points_per_axis >= 2048 ? 1e-6 : 1e-5)
                                  : (g.points_per_axis >= 256 ? 1e-4 : 1e-3);
        result.data["majorant_tolerance"] = tol;
        if (worst > tol) fail("harmonic majorant excess above tolerance");
    }

    // subharmonicity at and above the threshold
    {
        const auto ladder = uniform_ladder(L / 32.0, g.spacing(), 5);
        const HarmonicVector F = poisson_vector(probe, ladder);
        const HalfSpaceField w = F.magnitude_field();
        const double thr_rank1 = static_cast<double>(n - 1) / n;
        ordered_json sub = ordered_json::array();
        for (double eta : {std::max(thr_rank1, 0.05), std::max(thr_rank1, 0.05) + 0.2, 1.0}) {
            const auto rep = subharmonicity_check(w, eta);
            ordered_json jr;
            jr["eta"] = eta;
            jr["violation"] = rep.violation;
            sub.push_back(std::move(jr));
            const double h2 = g.spacing() * g.spacing();
            if (rep.violation > std::max(1e-8, h2)) fail("subharmonicity violation above O(h^2)");
        }
        result.data["subharmonicity_rank1"] = std::move(sub);
    }

    // planted defects must be detected
    if (ctx.planted_defect == "nonharmonic") {
        HalfSpaceField bad(g, uniform_ladder(L / 32.0, g.spacing(), 5));
        for (std::size_t k = 0; k < bad.levels(); ++k)
            for (cplx& z : bad.slices[k].samples) z = cplx{bad.t_ladder[k] * bad.t_ladder[k], 0.0};
        const double res = harmonicity_residual(bad);
        result.data["planted_nonharmonic_residual"] = res;
        fail("harmonicity_residual detected planted non-harmonic field (residual " +
             std::to_string(res) + ")");
    } else if (ctx.planted_defect == "curl") {
        const auto ladder = uniform_ladder(L / 32.0, g.spacing(), 5);
        HarmonicVector F = poisson_vector(probe, ladder);
        const double delta = 1e-3;
        for (std::size_t k = 0; k < F.components[0].levels(); ++k)
            for (std::size_t i = 0; i < g.size(); ++i)
                F.components[0].slices[k].samples[i] +=
                    delta * std::sin(2.0 * std::numbers::pi * g.point(i)[0] / L);
        const auto [dres, cres] = cr_residual(F);
        result.data["planted_curl_residual"] = cres;
        fail("cr_residual detected planted curl defect (residual " + std::to_string(cres) +
             ", divergence " + std::to_string(dres) + ")");
    }

    result.seconds = timer.seconds();
    return result;
}

// =============================================================================
// maximal suite
// =============================================================================

SuiteResult run_maximal_suite(const SuiteContext& ctx) {
    Timer timer;
    SuiteResult result;
    result.name = "maximal";
    auto fail = [&](const std::string& what) { result.failures.push_back("maximal: " + what); };

    const Grid& g = ctx.grid;
    const auto corpus = make_corpus(g, ctx.corpus_spec, ctx.seed);
    const auto t_set = default_t_set(g);
    const VariableExponent p2 = constant_exponent(g, 2.0);
    const TestFamily family = default_test_family(g.dim, p2.grand_maximal_order());
    if (!family.certified) fail("default test family failed certification");

    double worst_chain = -1e300;
    for (const auto& f : corpus) {
        const GridFunction rad = radial_maximal(f, family.members[0].kernel, t_set);
        const GridFunction nt = nontangential_maximal(f, family.members[0].kernel, t_set);
        const GridFunction grand = grand_maximal(f, family, t_set, MaximalMode::nontangential);
        for (std::size_t i = 0; i < f.size(); ++i) {
            worst_chain = std::max(worst_chain, rad.samples[i].real() - nt.samples[i].real());
            worst_chain = std::max(worst_chain, nt.samples[i].real() - grand.samples[i].real());
        }
    }
    result.data["ordering_chain_defect"] = std::max(worst_chain, 0.0);
    if (worst_chain > 1e-12) fail("ordering chain radial <= nontangential <= grand violated");

    // translation equivariance
    {
        const GridFunction& f = corpus.front();
        const GridFunction shifted = shift(f, 1, 7);
        const GridFunction a = shift(radial_maximal(f, family.members[0].kernel, t_set), 1, 7);
        const GridFunction b = radial_maximal(shifted, family.members[0].kernel, t_set);
        const double gap = max_abs_diff(a, b);
        result.data["translation_gap"] = gap;
        if (gap > 1e-10) fail("radial maximal not translation equivariant");
    }

    // Poisson cone maximal: field path agrees on shared ladders; positivity
    {
        const GridFunction& f = corpus.front();
        const GridFunction a = poisson_nt_maximal(f, t_set);
        const GridFunction b = field_nt_maximal(poisson_extend(f, t_set));
        const double gap = max_abs_diff(a, b);
        result.data["cone_path_gap"] = gap;
        if (gap > 1e-13) fail("field_nt_maximal disagrees with poisson_nt_maximal");

        GridFunction pos(g, "positive_mass");
        for (std::size_t i = 0; i < g.size(); ++i)
            pos.samples[i] = cplx{std::abs(f.samples[i]), 0.0};
        const GridFunction star = poisson_nt_maximal(pos, t_set);
        double minv = 1e300;
        for (const cplx& z : star.samples) minv = std::min(minv, z.real());
        result.data["cone_min_positive"] = minv;
        if (!(minv > 0.0)) fail("poisson_nt_maximal of nonnegative mass not strictly positive");
    }

    result.seconds = timer.seconds();
    return result;
}

// =============================================================================
// characterize suite
// =============================================================================

SuiteResult run_characterize_suite(const SuiteContext& ctx) {
    Timer timer;
    SuiteResult result;
    result.name = "characterize";
    auto fail = [&](const std::string& what) { result.failures.push_back("characterize: " + what); };

    const Grid& g = ctx.grid;
    const int n = g.dim;
    const auto corpus = make_corpus(g, ctx.corpus_spec, ctx.seed);
    const Grid g_refined = scaled_grid(g, 2.0);
    const auto corpus_refined = make_corpus(g_refined, ctx.corpus_spec, ctx.seed);

    ordered_json all = ordered_json::array();
    for (const auto& spec : ctx.exponent_specs) {
        if (spec.expr == "two-level-step") continue;  // lebesgue-only exponent
        const VariableExponent p = make_exponent(g, spec);
        const int m = required_order(n, p.p_minus);
        if (m > 4) continue;

        auto build_config = [&](const Grid& gg, double eps_step) {
            const VariableExponent pp = make_exponent(gg, spec);
            EquivalenceConfig cfg{default_test_family(gg.dim, pp.grand_maximal_order()),
                                  default_t_set(gg),
                                  gaussian_mollifier(gg.dim),
                                  {},
                                  m,
                                  true,
                                  ctx.jobs};
            const double base = gg.period / 16.0;
            for (double e = -4.0; e <= 0.0 + 1e-12; e += eps_step) {
                const double v = std::pow(2.0, e) * base;
                if (v >= 0.5 * gg.spacing()) cfg.eps_ladder.push_back(v);
            }
            return cfg;
        };

        const EquivalenceConfig cfg = build_config(g, 0.5);
        const EquivalenceReport rep = equivalence_report(corpus, p, cfg);
        ordered_json jr;
        jr["exponent"] = spec.describe();
        jr["p_minus"] = p.p_minus;
        jr["composition_order"] = m;
        jr["c_lo"] = rep.c_lo;
        jr["c_hi"] = rep.c_hi;
        jr["band_ratio"] = rep.c_hi / rep.c_lo;
        if (rep.c_hi / rep.c_lo > 10.0)
            fail("equivalence band wider than 10 for " + spec.describe());

        ordered_json fr = ordered_json::array();
        for (const auto& r : rep.records) {
            ordered_json one;
            one["tag"] = r.tag;
            one["hardy_norm"] = r.hardy_norm;
            one["budget"] = r.budget;
            one["ratio"] = r.ratio;
            if (r.budget_direct > 0.0) {
                one["budget_direct"] = r.budget_direct;
                const double q = r.budget_direct / r.budget;
                one["direct_over_ladder"] = q;
                if (q < 0.95 || q > 2.0)
                    fail("direct budget outside documented mollifier-loss band for " + r.tag);
            }
            fr.push_back(std::move(one));
        }
        jr["functions"] = std::move(fr);

        // refinement stability of the band under grid doubling
        const EquivalenceReport rep_refined =
            equivalence_report(corpus_refined, make_exponent(g_refined, spec),
                               build_config(g_refined, 0.5));
        jr["c_lo_refined"] = rep_refined.c_lo;
        jr["c_hi_refined"] = rep_refined.c_hi;
        if (rel_gap(rep.c_lo, rep_refined.c_lo) > 0.25 ||
            rel_gap(rep.c_hi, rep_refined.c_hi) > 0.25)
            fail("equivalence band unstable under refinement for " + spec.describe());

        // eps-ladder refinement stability (per-function budgets within 5%)
        const EquivalenceConfig cfg_dense = build_config(g, 0.25);
        const EquivalenceReport rep_dense = equivalence_report(corpus, p, cfg_dense);
        double worst_ladder_shift = 0.0;
        for (std::size_t i = 0; i < rep.records.size(); ++i)
            worst_ladder_shift =
                std::max(worst_ladder_shift,
                         rel_gap(rep.records[i].budget, rep_dense.records[i].budget));
        jr["ladder_refinement_shift"] = worst_ladder_shift;
        if (worst_ladder_shift > 0.05)
            fail("budgets move more than 5% under eps-ladder refinement");

        // embedding constant (p_- >= 1)
        if (p.p_minus >= 1.0) {
            double c_emb = 0.0, c_emb_refined = 0.0;
            for (std::size_t i = 0; i < corpus.size(); ++i) {
                const double r =
                    luxemburg_norm(corpus[i], p).value / rep.records[i].hardy_norm;
                c_emb = std::max(c_emb, r);
            }
            const VariableExponent pr = make_exponent(g_refined, spec);
            for (std::size_t i = 0; i < corpus_refined.size(); ++i) {
                const double r = luxemburg_norm(corpus_refined[i], pr).value /
                                 rep_refined.records[i].hardy_norm;
                c_emb_refined = std::max(c_emb_refined, r);
            }
            jr["embedding_constant"] = c_emb;
            jr["embedding_constant_refined"] = c_emb_refined;
            if (rel_gap(c_emb, c_emb_refined) > 0.25)
                fail("embedding constant unstable under refinement for " + spec.describe());
        }
        all.push_back(std::move(jr));
    }
    result.data["equivalence"] = std::move(all);
    result.seconds = timer.seconds();
    return result;
}

// =============================================================================
// CSV flattening
// =============================================================================

namespace {

void flatten_json(const std::string& prefix, const ordered_json& j,
                  std::vector<std::array<std::string, 3>>& rows) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten_json(prefix.empty() ? it.key() : prefix + "." + it.key(), it.value(), rows);
    } else if (j.is_array()) {
        std::size_t i = 0;
        for (const auto& el : j) flatten_json(prefix + "[" + std::to_string(i++) + "]", el, rows);
    } else if (j.is_number()) {
        rows.push_back({prefix, "value", j.dump()});
    }
}

} // namespace

std::vector<std::array<std::string, 3>> flatten_scalars(const SuiteResult& r) {
    std::vector<std::array<std::string, 3>> rows;
    flatten_json(r.name, r.data, rows);
    return rows;
}

} // namespace vexh
