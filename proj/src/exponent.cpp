#include "vexh/exponent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace vexh {

VariableExponent::VariableExponent(const Grid& g, std::vector<double> values_, double p_zero_opt,
                                   std::string tag_)
    : grid(g), values(std::move(values_)), inf_mask(g.size(), 0), tag(std::move(tag_)) {
    if (values.size() != g.size())
        throw std::domain_error("VariableExponent: sample count does not match grid");
    if (values.empty()) throw std::domain_error("VariableExponent: empty grid");
    p_minus = std::numeric_limits<double>::infinity();
    p_plus = 0.0;
    for (double v : values) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::domain_error("VariableExponent: exponent values must be in (0, inf)");
        p_minus = std::min(p_minus, v);
        p_plus = std::max(p_plus, v);
    }
    p_zero = p_zero_opt > 0.0 ? p_zero_opt : 0.9 * p_minus;
    validate();
}

void VariableExponent::validate() const {
    if (!(p_zero > 0.0 && p_zero < p_minus))
        throw std::domain_error("VariableExponent: p_zero must lie in (0, p_minus)");
}

bool VariableExponent::has_infinity_nodes() const {
    return std::any_of(inf_mask.begin(), inf_mask.end(), [](std::uint8_t m) { return m != 0; });
}

int VariableExponent::grand_maximal_order() const {
    return static_cast<int>(std::floor(grid.dim / p_zero)) + grid.dim + 2;
}

VariableExponent constant_exponent(const Grid& g, double q, double p_zero_opt) {
    return VariableExponent(g, std::vector<double>(g.size(), q), p_zero_opt,
                            "constant(" + std::to_string(q) + ")");
}

std::pair<double, double> essential_bounds(const VariableExponent& p) {
    if (p.values.empty()) throw std::domain_error("essential_bounds: empty grid");
    return {p.p_minus, p.p_plus};
}

VariableExponent dual_exponent(const VariableExponent& p) {
    if (p.p_minus < 1.0)
        throw std::invalid_argument("dual_exponent: requires p_minus >= 1");
    std::vector<double> dual(p.values.size());
    std::vector<std::uint8_t> mask(p.values.size(), 0);
    double finite_min = std::numeric_limits<double>::infinity();
    double finite_max = 0.0;
    for (std::size_t i = 0; i < p.values.size(); ++i) {
        const double v = p.values[i];
        if (v <= 1.0) {
            mask[i] = 1;
        } else {
            dual[i] = v / (v - 1.0);
            finite_min = std::min(finite_min, dual[i]);
            finite_max = std::max(finite_max, dual[i]);
        }
    }
    if (finite_max == 0.0) {
        finite_min = 1.0;
        finite_max = 1.0;
    }
    // stored bounds describe the finite part; infinity nodes live in the mask
    for (std::size_t i = 0; i < dual.size(); ++i)
        if (mask[i]) dual[i] = finite_max;
    VariableExponent out(p.grid, std::move(dual), 0.9 * finite_min, p.tag + "*");
    out.inf_mask = std::move(mask);
    return out;
}

VariableExponent scale_exponent(const VariableExponent& p, double s) {
    if (!(s > 0.0)) throw std::domain_error("scale_exponent: s must be positive");
    if (p.has_infinity_nodes())
        throw std::invalid_argument("scale_exponent: infinity-sentinel exponents not scalable");
    std::vector<double> v(p.values.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = p.values[i] / s;
    return VariableExponent(p.grid, std::move(v), 0.0, p.tag + "/s");
}

LogHolderRecord check_log_holder(const VariableExponent& p) {
    const std::size_t n = p.values.size();
    if (n < 2) throw std::invalid_argument("check_log_holder: need >= 2 nodes");
    const double e = std::numbers::e;
    LogHolderRecord rec;
    // p_inf_hat: value at the node of largest |x|
    std::size_t far = 0;
    double far_norm = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = p.grid.point_norm(i);
        if (r > far_norm) {
            far_norm = r;
            far = i;
        }
    }
    rec.p_inf = p.values[far];
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = p.grid.torus_distance(i, j);
            if (d <= 0.0) continue;
            const double c = std::fabs(p.values[i] - p.values[j]) * std::log(e + 1.0 / d);
            rec.c_log = std::max(rec.c_log, c);
        }
        const double r = p.grid.point_norm(i);
        rec.c_inf = std::max(rec.c_inf, std::fabs(p.values[i] - rec.p_inf) * std::log(e + r));
    }
    return rec;
}

void attach_log_holder_certificate(VariableExponent& p, std::size_t max_nodes) {
    p.log_holder = check_log_holder_subsampled(p, max_nodes);
}

LogHolderRecord check_log_holder_subsampled(const VariableExponent& p, std::size_t max_nodes) {
    if (p.grid.size() <= max_nodes) return check_log_holder(p);
    int stride = 1;
    const int N = p.grid.points_per_axis;
    auto nodes_at = [&](int s) {
        std::size_t per = static_cast<std::size_t>((N + s - 1) / s);
        return p.grid.dim == 1 ? per : per * per;
    };
    while (nodes_at(stride) > max_nodes && N / stride > 8) stride *= 2;
    const int M = N / stride;
    Grid sub(p.grid.dim, p.grid.period, M);
    // direct resample of the stored values at the strided nodes
    std::vector<double> v;
    v.reserve(sub.size());
    if (p.grid.dim == 1) {
        for (int i = 0; i < sub.points_per_axis; ++i)
            v.push_back(p.values[static_cast<std::size_t>(i) * stride]);
    } else {
        for (int i1 = 0; i1 < sub.points_per_axis; ++i1)
            for (int i2 = 0; i2 < sub.points_per_axis; ++i2)
                v.push_back(p.values[p.grid.flatten(i1 * stride, i2 * stride)]);
    }
    VariableExponent coarse(sub, std::move(v), 0.0, p.tag + "(subsampled)");
    return check_log_holder(coarse);
}

} // namespace vexh
