#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vexh/grid.hpp"

namespace vexh {

// Empirical log-Holder certificate: smallest constants making
//   |p(x)-p(y)| <= c_log / log(e + 1/|x-y|)   and
//   |p(x)-p_inf| <= c_inf / log(e + |x|)
// hold over all sampled pairs / nodes.
struct LogHolderRecord {
    double c_log = 0.0;
    double c_inf = 0.0;
    double p_inf = 0.0;
};

// =============================================================================
// VariableExponent: grid samples of p(.) with essential bounds and the p_0
// scaling exponent. Dual exponents mark p* = infinity nodes with inf_mask
// (never a float infinity); the modular treats those by the ess-sup rule.
// =============================================================================
struct VariableExponent {
    Grid grid;
    std::vector<double> values;
    std::vector<std::uint8_t> inf_mask;  // 1 where the node is the infinity sentinel
    double p_minus = 0.0;
    double p_plus = 0.0;
    double p_zero = 0.0;  // in (0, p_minus); default 0.9*p_minus
    std::optional<LogHolderRecord> log_holder;
    std::string tag;

    VariableExponent() = default;
    // p_zero_opt <= 0 selects the default 0.9*p_minus.
    VariableExponent(const Grid& g, std::vector<double> values_, double p_zero_opt = 0.0,
                     std::string tag_ = {});

    bool has_infinity_nodes() const;
    // Grand-maximal order N = floor(n/p_0) + n + 2 (> n/p_0 + n + 1).
    int grand_maximal_order() const;
    void validate() const;
};

// Sample a closed-form rule p(x) on the grid.
template <typename Fn>
VariableExponent sample_exponent(const Grid& g, Fn&& rule, double p_zero_opt = 0.0,
                                 std::string tag = {}) {
    std::vector<double> v(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        auto p = g.point(i);
        v[i] = rule(p[0], p[1]);
    }
    return VariableExponent(g, std::move(v), p_zero_opt, std::move(tag));
}

VariableExponent constant_exponent(const Grid& g, double q, double p_zero_opt = 0.0);

// ess inf / ess sup over the sampled nodes.
std::pair<double, double> essential_bounds(const VariableExponent& p);

// Pointwise dual 1/p + 1/p* = 1; p=1 nodes map to the infinity sentinel.
// Requires p_minus >= 1.
VariableExponent dual_exponent(const VariableExponent& p);

// x -> p(x)/s for the L^{p(.)/p_0} and L^{p(.)/eta} scalings. Requires s > 0.
VariableExponent scale_exponent(const VariableExponent& p, double s);

// Empirical certificate over all sampled pairs (O(N^2)); p_inf_hat is p at the
// node of largest |x|. Requires >= 2 nodes.
LogHolderRecord check_log_holder(const VariableExponent& p);

// check_log_holder on a stride-subsampled copy capped at max_nodes per axis
// total (harness-side guard for large 2D grids).
LogHolderRecord check_log_holder_subsampled(const VariableExponent& p, std::size_t max_nodes);

// Compute and store the certificate on the exponent itself.
void attach_log_holder_certificate(VariableExponent& p, std::size_t max_nodes = 4096);

} // namespace vexh
