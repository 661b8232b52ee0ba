#include "vexh/maximal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vexh/halfspace.hpp"
#include "vexh/windows.hpp"

namespace vexh {

std::vector<double> default_t_set(const Grid& g) {
    std::vector<double> ts;
    for (double t = g.spacing(); t <= g.period / 4.0 + 1e-12; t *= 2.0) ts.push_back(t);
    return ts;
}

namespace {

void max_into(std::vector<double>& best, const GridFunction& cand) {
    for (std::size_t i = 0; i < best.size(); ++i)
        best[i] = std::max(best[i], std::abs(cand.samples[i]));
}

// cone contribution at scale t: max over centers y with |x-y| < t of |slice(y)|
void cone_max_into(std::vector<double>& best, const GridFunction& slice, double t) {
    std::vector<double> a(slice.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = std::abs(slice.samples[i]);
    const auto swept = ball_window_max(slice.grid, a, t);
    for (std::size_t i = 0; i < best.size(); ++i) best[i] = std::max(best[i], swept[i]);
}

GridFunction wrap(const Grid& g, std::vector<double> v, std::string tag) {
    GridFunction out(g, std::move(tag));
    for (std::size_t i = 0; i < v.size(); ++i) out.samples[i] = cplx{v[i], 0.0};
    return out;
}

} // namespace

GridFunction radial_maximal(const GridFunction& f, const SeparableKernel& psi,
                            const std::vector<double>& t_set) {
    std::vector<double> best(f.size(), 0.0);
    for (double t : t_set) max_into(best, convolve(f, sample_kernel(psi, f.grid, t)));
    return wrap(f.grid, std::move(best), "M*_rad(" + f.tag + ")");
}

GridFunction nontangential_maximal(const GridFunction& f, const SeparableKernel& psi,
                                   const std::vector<double>& t_set) {
    std::vector<double> best(f.size(), 0.0);
    for (double t : t_set) cone_max_into(best, convolve(f, sample_kernel(psi, f.grid, t)), t);
    return wrap(f.grid, std::move(best), "M*_nt(" + f.tag + ")");
}

GridFunction grand_maximal(const GridFunction& f, const TestFamily& family,
                           const std::vector<double>& t_set, MaximalMode mode) {
    family.require_certified();
    std::vector<double> best(f.size(), 0.0);
    for (const auto& member : family.members) {
        const GridFunction m = mode == MaximalMode::radial
                                   ? radial_maximal(f, member.kernel, t_set)
                                   : nontangential_maximal(f, member.kernel, t_set);
        max_into(best, m);
    }
    return wrap(f.grid, std::move(best), "grand(" + f.tag + ")");
}

GridFunction poisson_nt_maximal(const GridFunction& f, const std::vector<double>& t_set) {
    const HalfSpaceField u = poisson_extend(f, t_set);
    std::vector<double> best(f.size(), 0.0);
    for (std::size_t k = 0; k < u.levels(); ++k) cone_max_into(best, u.slices[k], u.t_ladder[k]);
    return wrap(f.grid, std::move(best), "f*_P(" + f.tag + ")");
}

GridFunction field_nt_maximal(const HalfSpaceField& u) {
    std::vector<double> best(u.grid.size(), 0.0);
    for (std::size_t k = 0; k < u.levels(); ++k) cone_max_into(best, u.slices[k], u.t_ladder[k]);
    return wrap(u.grid, std::move(best), "u*");
}

} // namespace vexh
