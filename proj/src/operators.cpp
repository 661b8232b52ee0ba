#include "vexh/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vexh/windows.hpp"

namespace vexh {

RieszSymbol::RieszSymbol(std::vector<int> idx) : indices(std::move(idx)) {
    if (indices.empty()) throw std::domain_error("RieszSymbol: need at least one index");
    for (int j : indices)
        if (j < 1) throw std::domain_error("RieszSymbol: indices are 1-based");
}

cplx RieszSymbol::multiplier(std::array<double, 2> xi) const {
    const double r = std::hypot(xi[0], xi[1]);
    if (r == 0.0) return cplx{0.0, 0.0};
    cplx acc{1.0, 0.0};
    for (int j : indices) acc *= cplx{0.0, -xi[j - 1] / r};
    return acc;
}

GridFunction riesz(const GridFunction& f, const RieszSymbol& symbol) {
    for (int j : symbol.indices)
        if (j > f.grid.dim) throw std::domain_error("riesz: index exceeds grid dimension");
    GridFunction out = apply_multiplier(f, [&symbol](std::array<double, 2> xi) {
        return symbol.multiplier(xi);
    });
    out.tag = f.tag;
    return out;
}

std::vector<double> default_maximal_radii(const Grid& g) {
    std::vector<double> radii;
    for (double r = g.spacing(); r <= g.period / 4.0 + 1e-12; r *= 2.0) radii.push_back(r);
    return radii;
}

GridFunction hl_maximal(const GridFunction& f, const std::vector<double>& radii) {
    if (radii.empty()) throw std::invalid_argument("hl_maximal: empty radii");
    const double h = f.grid.spacing();
    for (double r : radii)
        if (r < h * (1.0 - 1e-12)) throw std::invalid_argument("hl_maximal: radius below spacing");

    std::vector<double> absf(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) absf[i] = std::abs(f.samples[i]);

    std::vector<double> best(f.size(), 0.0);
    for (double r : radii) {
        const auto averages = ball_window_mean(f.grid, absf, r);
        const auto swept = ball_window_max(f.grid, averages, r);
        for (std::size_t i = 0; i < best.size(); ++i) best[i] = std::max(best[i], swept[i]);
    }
    GridFunction out(f.grid, "M(" + f.tag + ")");
    for (std::size_t i = 0; i < best.size(); ++i) out.samples[i] = cplx{best[i], 0.0};
    return out;
}

GridFunction mollify(const GridFunction& f, const SeparableKernel& phi, double eps) {
    const double h = f.grid.spacing();
    if (eps < 0.5 * h)
        throw std::invalid_argument("mollify: eps below h/2 leaves the kernel unresolved");
    const double mass = kernel_mass(phi);
    if (std::fabs(mass - 1.0) > 1e-8)
        throw std::invalid_argument("mollify: kernel mass must be 1 within 1e-8");
    GridFunction out = convolve(f, sample_kernel(phi, f.grid, eps));
    out.tag = f.tag;
    return out;
}

} // namespace vexh
