#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "vexh/characterize.hpp"
#include "vexh/corpus.hpp"

using namespace vexh;
namespace {

GridFunction cosine_mode(const Grid& g, int k) {
    GridFunction f(g, "cos_mode");
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double x = g.point(i)[0];
        f.samples[i] = cplx{std::cos(2.0 * std::numbers::pi * k * x / g.period), 0.0};
    }
    return f;
}

} // namespace

TEST_CASE("hardy_norm_proxy: zero data, family monotonicity, L2 comparability") {
    Grid g(1, 16.0, 512);
    const VariableExponent p2 = constant_exponent(g, 2.0);
    const TestFamily fam = default_test_family(1, p2.grand_maximal_order());
    const auto t_set = default_t_set(g);

    CHECK(hardy_norm_proxy(GridFunction(g), p2, fam, t_set) == 0.0);

    const GridFunction f = fixed_band_function(g);
    const double full = hardy_norm_proxy(f, p2, fam, t_set);
    TestFamily single = fam;
    single.members.resize(1);
    CHECK(hardy_norm_proxy(f, p2, single, t_set) <= full + 1e-14);

    // comparable to ||f||_2 via the member mass scaling
    const double l2 = luxemburg_norm(f, p2).value;
    const double mass = fam.members[0].mass;
    CHECK(full >= 0.25 * mass * l2);
    CHECK(full <= 4.0 * mass * l2 / 1.0 + 4.0 * l2);  // coarse two-sided sanity
}

TEST_CASE("riesz_budget_A3: single-mode Plancherel oracle") {
    Grid g(1, 16.0, 512);
    const VariableExponent p2 = constant_exponent(g, 2.0);
    const SeparableKernel phi = gaussian_mollifier(1);
    const auto ladder = default_eps_ladder(g);
    const int k0 = 3;
    const GridFunction f = cosine_mode(g, k0);

    const double xi0 = 2.0 * std::numbers::pi * k0 / g.period;
    const double l2 = std::sqrt(g.period / 2.0);
    double expect = 0.0;
    for (double eps : ladder)
        expect = std::max(expect, 2.0 * std::exp(-0.5 * eps * eps * xi0 * xi0) * l2);
    const double got = riesz_budget_A3(f, p2, phi, ladder);
    CHECK(got == doctest::Approx(expect).epsilon(1e-9));

    // direct budget: unimodular multiplier preserves L2
    CHECK(riesz_budget_A3_direct(f, p2) == doctest::Approx(2.0 * l2).epsilon(1e-9));
    CHECK(riesz_budget_A3_direct(f, p2) >= got);

    CHECK(riesz_budget_A3(GridFunction(g), p2, phi, ladder) == 0.0);
    CHECK_THROWS(riesz_budget_A3_direct(f, constant_exponent(g, 0.9)));
    CHECK_THROWS(riesz_budget_A3(f, p2, phi, {}));
}

TEST_CASE("riesz_budget_A4: composition symbol oracle and monotonicity") {
    Grid g(1, 16.0, 512);
    const VariableExponent p2 = constant_exponent(g, 2.0);
    const SeparableKernel phi = gaussian_mollifier(1);
    const auto ladder = default_eps_ladder(g);
    const int k0 = 3;
    const GridFunction f = cosine_mode(g, k0);

    // n = 1, m = 2 terms on a mean-zero mode: {f, Hf, H^2 f = -f}, equal norms
    const double xi0 = 2.0 * std::numbers::pi * k0 / g.period;
    const double l2 = std::sqrt(g.period / 2.0);
    double expect = 0.0;
    for (double eps : ladder)
        expect = std::max(expect, 3.0 * std::exp(-0.5 * eps * eps * xi0 * xi0) * l2);
    const double a4 = riesz_budget_A4(f, p2, phi, ladder, 2);
    CHECK(a4 == doctest::Approx(expect).epsilon(1e-9));

    // A4 dominates the first-order budget, and grows with m
    CHECK(a4 >= riesz_budget_A3(f, p2, phi, ladder));
    CHECK(riesz_budget_A4(f, p2, phi, ladder, 3) >= a4 - 1e-12);

    CHECK_THROWS(riesz_budget_A4(f, p2, phi, ladder, 1));  // m >= 2 required
    // p_minus must exceed (n-1)/(n+m-1); with n=1 the threshold is 0, so probe n=2
    Grid g2(2, 8.0, 32);
    CHECK_THROWS(riesz_budget_A4(fixed_band_function(g2), constant_exponent(g2, 0.3),
                                 gaussian_mollifier(2), default_eps_ladder(g2), 2));
}

TEST_CASE("riesz_budget_A4: finite for small exponents in 2d") {
    Grid g(2, 8.0, 64);
    const VariableExponent p = constant_exponent(g, 0.45);  // in (1/3, 1/2]
    const double a4 = riesz_budget_A4(fixed_band_function(g), p, gaussian_mollifier(2),
                                      default_eps_ladder(g), 2);
    CHECK(std::isfinite(a4));
    CHECK(a4 > 0.0);
}

TEST_CASE("equivalence_report: degenerate corpus rejected, band bounded") {
    Grid g(1, 16.0, 512);
    const VariableExponent p2 = constant_exponent(g, 2.0);
    EquivalenceConfig cfg{default_test_family(1, p2.grand_maximal_order()), default_t_set(g),
                          gaussian_mollifier(1), default_eps_ladder(g), 1, true};

    CHECK_THROWS(equivalence_report({}, p2, cfg));
    CHECK_THROWS(equivalence_report({GridFunction(g)}, p2, cfg));

    const auto corpus = make_corpus(g, CorpusSpec{}, 42);
    const auto rep = equivalence_report(corpus, p2, cfg);
    CHECK(rep.records.size() == corpus.size());
    CHECK(rep.c_lo > 0.0);
    CHECK(rep.c_hi / rep.c_lo <= 10.0);
    for (const auto& r : rep.records) {
        CHECK(r.ratio == doctest::Approx(r.budget / r.hardy_norm));
        CHECK(r.budget_direct / r.budget >= 0.95);
        CHECK(r.budget_direct / r.budget <= 2.0);
    }
}

TEST_CASE("equivalence scalars are scale- and translation-invariant") {
    Grid g(1, 16.0, 256);
    const VariableExponent p2 = constant_exponent(g, 2.0);
    const TestFamily fam = default_test_family(1, p2.grand_maximal_order());
    const auto t_set = default_t_set(g);
    const SeparableKernel phi = gaussian_mollifier(1);
    const auto ladder = default_eps_ladder(g);
    const GridFunction f = fixed_band_function(g);

    const double h0 = hardy_norm_proxy(f, p2, fam, t_set);
    const double a0 = riesz_budget_A3(f, p2, phi, ladder);
    GridFunction cf = f;
    for (auto& z : cf.samples) z *= 5.0;
    CHECK(hardy_norm_proxy(cf, p2, fam, t_set) == doctest::Approx(5.0 * h0).epsilon(1e-9));
    CHECK(riesz_budget_A3(cf, p2, phi, ladder) == doctest::Approx(5.0 * a0).epsilon(1e-9));

    const GridFunction tf = shift(f, 1, 13);
    CHECK(hardy_norm_proxy(tf, p2, fam, t_set) == doctest::Approx(h0).epsilon(1e-9));
    CHECK(riesz_budget_A3(tf, p2, phi, ladder) == doctest::Approx(a0).epsilon(1e-9));

    // embedding ratio inherits both invariances
    const double e0 = embedding_check(f, p2, fam, t_set);
    CHECK(embedding_check(cf, p2, fam, t_set) == doctest::Approx(e0).epsilon(1e-9));
    CHECK(embedding_check(tf, p2, fam, t_set) == doctest::Approx(e0).epsilon(1e-9));
    CHECK_THROWS(embedding_check(GridFunction(g), p2, fam, t_set));
    CHECK_THROWS(embedding_check(f, constant_exponent(g, 0.9), fam, t_set));
}

TEST_CASE("majorant_suite: empty corpus flag and eta-grid validation") {
    Grid g(1, 16.0, 256);
    const VariableExponent p2 = constant_exponent(g, 2.0);
    const auto empty = majorant_suite({}, p2, {1}, {0.5}, {0.5}, {0.5});
    CHECK(empty.empty_corpus);

    const auto corpus = std::vector<GridFunction>{fixed_band_function(g)};
    CHECK_THROWS(majorant_suite(corpus, p2, {1}, {2.5}, {0.5}, {0.5}));  // eta > p_- - 0.05

    const auto sec = majorant_suite(corpus, p2, {1}, {0.5, 1.0}, {0.5}, {0.5, 1.0});
    CHECK(!sec.excess.empty());
    CHECK(sec.worst_excess <= 1e-5);  // desk-scale grid
    for (const auto& kr : sec.kint) {
        CHECK(kr.k_min > 0.0);
        CHECK(kr.k_max / kr.k_min < 1e3);
    }
}
