#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "vexh/kernels.hpp"

using namespace vexh;

TEST_CASE("poisson constants via half-integer gamma") {
    CHECK(poisson_constant(1) == doctest::Approx(1.0 / std::numbers::pi).epsilon(1e-15));
    CHECK(poisson_constant(2) == doctest::Approx(1.0 / (2.0 * std::numbers::pi)).epsilon(1e-15));
}

TEST_CASE("poisson kernel closed-form values") {
    // P_1(0) = C_1 * 1 / 1 = 1/pi
    CHECK(poisson_kernel(1, 1.0, {0.0, 0.0}) ==
          doctest::Approx(0.3183098861837907).epsilon(1e-14));
    // Q_1^{(1)}(1) = (1/pi) * 1 / (1 + 1) = 1/(2 pi)
    CHECK(conjugate_poisson_kernel(1, 1, 1.0, {1.0, 0.0}) ==
          doctest::Approx(1.0 / (2.0 * std::numbers::pi)).epsilon(1e-14));
    CHECK_THROWS(poisson_kernel(1, 0.0, {0.0, 0.0}));
    CHECK_THROWS(poisson_kernel(1, -1.0, {0.0, 0.0}));
    CHECK_THROWS(conjugate_poisson_kernel(2, 3, 1.0, {0.0, 0.0}));
}

TEST_CASE("periodized poisson kernels: 1d closed form and image sums") {
    Grid g(1, 16.0, 256);
    const double t = 0.5;
    const GridFunction P = sample_poisson_periodized(g, t);
    for (std::size_t i = 0; i < g.size(); i += 7) {
        const double x = g.point(i)[0];
        CHECK(P.samples[i].real() ==
              doctest::Approx(periodized_poisson_1d(16.0, t, x)).epsilon(1e-12));
        CHECK(std::fabs(P.samples[i].imag()) < 1e-14);
    }
    const GridFunction Q = sample_conjugate_poisson_periodized(g, 1, t);
    for (std::size_t i = 0; i < g.size(); i += 7) {
        const double x = g.point(i)[0];
        CHECK(Q.samples[i].real() ==
              doctest::Approx(periodized_conjugate_poisson_1d(16.0, t, x)).epsilon(1e-11));
    }
    // direct image sum cross-check (slow tail => loose tolerance)
    for (std::size_t i = 0; i < g.size(); i += 31) {
        const double x = g.point(i)[0];
        CHECK(P.samples[i].real() ==
              doctest::Approx(poisson_image_sum(1, t, {x, 0.0}, 16.0, 4000)).epsilon(1e-4));
    }
}

TEST_CASE("periodized poisson kernel: 2d image-sum cross-check and unit mass") {
    Grid g(2, 8.0, 16);
    const double t = 0.5;
    const GridFunction P = sample_poisson_periodized(g, t);
    for (std::size_t i = 0; i < g.size(); i += 13) {
        const auto p = g.point(i);
        CHECK(P.samples[i].real() ==
              doctest::Approx(poisson_image_sum(2, t, p, 8.0, 100)).epsilon(2e-4));
    }
    // unit mass over the window within 1e-6 for t <= L/8 (periodized sampling)
    Grid g64(2, 8.0, 64);
    for (double tt : {8.0 / 16.0, 8.0 / 8.0})
        CHECK(std::fabs(quadrature(sample_poisson_periodized(g64, tt)).real() - 1.0) < 1e-6);
    // raw window tail is the reported periodization diagnostic, not small
    CHECK(poisson_window_tail_mass(g64, 1.0) > 0.1);
}

TEST_CASE("separable kernels: mass and dilation") {
    const SeparableKernel moll = gaussian_mollifier(1);
    CHECK(kernel_mass(moll) == doctest::Approx(1.0).epsilon(1e-10));
    const SeparableKernel moll2 = gaussian_mollifier(2);
    CHECK(kernel_mass(moll2) == doctest::Approx(1.0).epsilon(1e-10));

    // sampled dilated kernel keeps unit mass on the grid (eps resolvable)
    Grid g(1, 16.0, 512);
    for (double eps : {0.25, 0.5, 1.0})
        CHECK(quadrature(sample_kernel(moll, g, eps)).real() ==
              doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("F_N seminorm: spectral audit matches the Hermite oracle") {
    // for the unit gaussian, d^b g(x) = (-1)^b He_b(x) g(x) (probabilists')
    const Profile1D gauss{Profile1D::Kind::gaussian, 1.0};
    const int order = 6;
    const auto table = profile_seminorm_table(gauss, order);
    for (int b = 0; b <= order; ++b) {
        for (int a = 0; a <= order; ++a) {
            double expect = 0.0;
            for (double x = -30.0; x <= 30.0; x += 1e-3) {
                // Hermite recurrence He_{k+1} = x He_k - k He_{k-1}
                double hk = 1.0, hk1 = x;
                for (int k = 1; k < b; ++k) {
                    const double next = x * hk1 - k * hk;
                    hk = hk1;
                    hk1 = next;
                }
                const double deriv = (b == 0 ? 1.0 : hk1) * std::exp(-x * x / 2.0);
                expect = std::max(expect, std::pow(std::fabs(x), a) * std::fabs(deriv));
            }
            CHECK(table[a][b] == doctest::Approx(expect).epsilon(2e-3));
        }
    }
}

TEST_CASE("default test family is certified") {
    for (int dim : {1, 2}) {
        const TestFamily fam = default_test_family(dim, dim == 1 ? 4 : 6);
        CHECK(fam.certified);
        CHECK(fam.members.size() >= 3);
        for (const auto& m : fam.members) {
            CHECK(m.seminorm <= 1.0);
            CHECK(m.seminorm > 0.9);  // normalization is tight, not vacuous
        }
        // gaussian member keeps positive mass; derivative member is odd (mass ~ 0)
        CHECK(fam.members[0].mass > 0.0);
        CHECK(std::fabs(fam.members[1].mass) < 1e-10);
    }
}
