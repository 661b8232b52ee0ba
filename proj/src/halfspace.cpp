#include "vexh/halfspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace vexh {

namespace {

GridFunction magnitude_at_impl(const std::vector<HalfSpaceField>& comps, double t) {
    GridFunction out(comps.at(0).grid);
    for (const auto& c : comps) {
        const GridFunction slice = semigroup_slice(c, t);
        for (std::size_t i = 0; i < out.size(); ++i) {
            const double a = std::abs(slice.samples[i]);
            out.samples[i] += cplx{a * a, 0.0};
        }
    }
    for (cplx& z : out.samples) z = cplx{std::sqrt(z.real()), 0.0};
    return out;
}

HalfSpaceField magnitude_field_impl(const std::vector<HalfSpaceField>& comps) {
    HalfSpaceField out(comps.at(0).grid, comps.at(0).t_ladder);
    for (std::size_t k = 0; k < out.levels(); ++k) {
        for (const auto& c : comps)
            for (std::size_t i = 0; i < out.grid.size(); ++i) {
                const double a = std::abs(c.slices[k].samples[i]);
                out.slices[k].samples[i] += cplx{a * a, 0.0};
            }
        for (cplx& z : out.slices[k].samples) z = cplx{std::sqrt(z.real()), 0.0};
    }
    return out;
}

// Enumerate multi-indices alpha in Z_+^{vars} with |alpha| = m.
void enumerate_multi_indices(int vars, int m, std::vector<int>& cur,
                             std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == vars - 1) {
        int used = 0;
        for (int v : cur) used += v;
        cur.push_back(m - used);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    int used = 0;
    for (int v : cur) used += v;
    for (int a = 0; a <= m - used; ++a) {
        cur.push_back(a);
        enumerate_multi_indices(vars, m, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> multi_indices(int vars, int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    enumerate_multi_indices(vars, m, cur, out);
    return out;
}

} // namespace

GridFunction HarmonicVector::magnitude_at(double t) const { return magnitude_at_impl(components, t); }
HalfSpaceField HarmonicVector::magnitude_field() const { return magnitude_field_impl(components); }
GridFunction TensorField::magnitude_at(double t) const { return magnitude_at_impl(components, t); }
HalfSpaceField TensorField::magnitude_field() const { return magnitude_field_impl(components); }

std::size_t TensorField::flatten(const std::vector<int>& tuple) const {
    if (static_cast<int>(tuple.size()) != rank) throw std::domain_error("TensorField: bad tuple rank");
    std::size_t flat = 0;
    for (int j : tuple) {
        if (j < 0 || j > dim) throw std::domain_error("TensorField: index out of range");
        flat = flat * (dim + 1) + static_cast<std::size_t>(j);
    }
    return flat;
}

std::vector<int> TensorField::unflatten(std::size_t flat) const {
    std::vector<int> tuple(rank, 0);
    for (int i = rank - 1; i >= 0; --i) {
        tuple[i] = static_cast<int>(flat % (dim + 1));
        flat /= (dim + 1);
    }
    return tuple;
}

// =============================================================================
// Poisson extensions
// =============================================================================

HalfSpaceField poisson_extend(const GridFunction& f, const std::vector<double>& t_ladder) {
    HalfSpaceField out(f.grid, t_ladder);
    out.semigroup_coeff = fourier(f);
    for (std::size_t k = 0; k < out.levels(); ++k) {
        out.slices[k] = semigroup_slice(out, out.t_ladder[k]);
        out.slices[k].tag = f.tag;
    }
    return out;
}

HalfSpaceField poisson_extend_quadrature(const GridFunction& f,
                                         const std::vector<double>& t_ladder) {
    HalfSpaceField out(f.grid, t_ladder);
    for (std::size_t k = 0; k < out.levels(); ++k) {
        out.slices[k] = convolve(f, sample_poisson_periodized(f.grid, t_ladder[k]));
        out.slices[k].tag = f.tag;
    }
    return out;
}

HarmonicVector poisson_vector(const GridFunction& f, const std::vector<double>& t_ladder) {
    if (t_ladder.size() < 3)
        throw std::invalid_argument("poisson_vector: need >= 3 t levels");
    HarmonicVector F;
    F.components.push_back(poisson_extend(f, t_ladder));
    if (!F.components[0].uniform_ladder())
        throw std::invalid_argument("poisson_vector: uniform t ladder required");
    for (int j = 1; j <= f.grid.dim; ++j)
        F.components.push_back(poisson_extend(riesz(f, RieszSymbol({j})), t_ladder));
    return F;
}

TensorField poisson_tensor(const GridFunction& f, const std::vector<double>& t_ladder, int m,
                           std::size_t max_bytes) {
    if (m < 1) throw std::domain_error("poisson_tensor: rank must be >= 1");
    const int n = f.grid.dim;
    std::size_t count = 1;
    for (int i = 0; i < m; ++i) count *= static_cast<std::size_t>(n + 1);
    const std::size_t bytes = count * t_ladder.size() * f.grid.size() * sizeof(cplx);
    if (bytes > max_bytes)
        throw std::length_error("poisson_tensor: component budget exceeds memory cap");

    TensorField G;
    G.rank = m;
    G.dim = n;
    G.components.reserve(count);
    const Spectrum base = fourier(f);
    for (std::size_t flat = 0; flat < count; ++flat) {
        G.components.emplace_back(f.grid, t_ladder);
        HalfSpaceField& comp = G.components.back();
        // decode tuple and build the composed multiplier (index 0 slots are identity)
        std::vector<int> tuple(m, 0);
        std::size_t rem = flat;
        for (int i = m - 1; i >= 0; --i) {
            tuple[i] = static_cast<int>(rem % (n + 1));
            rem /= (n + 1);
        }
        Spectrum c = apply_multiplier(base, [&tuple](std::array<double, 2> xi) {
            const double r = std::hypot(xi[0], xi[1]);
            cplx acc{1.0, 0.0};
            for (int j : tuple) {
                if (j == 0) continue;
                if (r == 0.0) return cplx{0.0, 0.0};
                acc *= cplx{0.0, -xi[j - 1] / r};
            }
            return acc;
        });
        comp.semigroup_coeff = std::move(c);
        for (std::size_t k = 0; k < comp.levels(); ++k)
            comp.slices[k] = semigroup_slice(comp, comp.t_ladder[k]);
    }
    return G;
}

TensorField tensor_from_vector(const HarmonicVector& F) {
    TensorField G;
    G.rank = 1;
    G.dim = F.grid().dim;
    G.components = F.components;
    return G;
}

// =============================================================================
// Residuals
// =============================================================================

std::pair<double, double> cr_residual(const HarmonicVector& F) {
    const int n = F.grid().dim;
    if (static_cast<int>(F.components.size()) != n + 1)
        throw std::domain_error("cr_residual: component count mismatch");
    const std::size_t K = F.components[0].levels();
    if (K < 3) throw std::invalid_argument("cr_residual: need >= 3 t levels");

    // d u_j / d x_k for all j, k (axis 0 = t)
    std::vector<std::vector<HalfSpaceField>> d(n + 1);
    for (int j = 0; j <= n; ++j)
        for (int k = 0; k <= n; ++k) d[j].push_back(central_difference(F.components[j], k));

    double div_res = 0.0, curl_res = 0.0;
    for (std::size_t lvl = 1; lvl + 1 < K; ++lvl) {
        for (std::size_t x = 0; x < F.grid().size(); ++x) {
            cplx div{0.0, 0.0};
            for (int j = 0; j <= n; ++j) div += d[j][j].slices[lvl].samples[x];
            div_res = std::max(div_res, std::abs(div));
            for (int j = 0; j <= n; ++j)
                for (int k = j + 1; k <= n; ++k) {
                    const cplx curl =
                        d[j][k].slices[lvl].samples[x] - d[k][j].slices[lvl].samples[x];
                    curl_res = std::max(curl_res, std::abs(curl));
                }
        }
    }
    return {div_res, curl_res};
}

namespace {

// Visit the interior discrete (n+1)-Laplacian of a field.
template <typename Fn>
void for_each_interior_laplacian(const HalfSpaceField& u, Fn&& fn) {
    const std::size_t K = u.levels();
    if (K < 3) throw std::invalid_argument("laplacian: need >= 3 t levels");
    const double dt = u.ladder_step();
    const Grid& g = u.grid;
    const int N = g.points_per_axis;
    const double inv_dt2 = 1.0 / (dt * dt);
    const double inv_h2 = 1.0 / (g.spacing() * g.spacing());
    for (std::size_t lvl = 1; lvl + 1 < K; ++lvl) {
        const auto& lo = u.slices[lvl - 1].samples;
        const auto& mid = u.slices[lvl].samples;
        const auto& hi = u.slices[lvl + 1].samples;
        if (g.dim == 1) {
            for (int i = 0; i < N; ++i) {
                cplx lap = (hi[i] - 2.0 * mid[i] + lo[i]) * inv_dt2;
                lap += (mid[(i + 1) % N] - 2.0 * mid[i] + mid[(i + N - 1) % N]) * inv_h2;
                fn(lvl, static_cast<std::size_t>(i), lap);
            }
        } else {
            for (int i1 = 0; i1 < N; ++i1)
                for (int i2 = 0; i2 < N; ++i2) {
                    const std::size_t c = g.flatten(i1, i2);
                    cplx lap = (hi[c] - 2.0 * mid[c] + lo[c]) * inv_dt2;
                    lap += (mid[g.flatten((i1 + 1) % N, i2)] - 2.0 * mid[c] +
                            mid[g.flatten((i1 + N - 1) % N, i2)]) *
                           inv_h2;
                    lap += (mid[g.flatten(i1, (i2 + 1) % N)] - 2.0 * mid[c] +
                            mid[g.flatten(i1, (i2 + N - 1) % N)]) *
                           inv_h2;
                    fn(lvl, c, lap);
                }
        }
    }
}

} // namespace

double harmonicity_residual(const HalfSpaceField& u) {
    double res = 0.0;
    for_each_interior_laplacian(
        u, [&res](std::size_t, std::size_t, cplx lap) { res = std::max(res, std::abs(lap)); });
    return res;
}

double symmetry_residual(const TensorField& G) {
    double res = 0.0;
    const std::size_t count = G.components.size();
    for (std::size_t flat = 0; flat < count; ++flat) {
        auto tuple = G.unflatten(flat);
        auto sorted = tuple;
        std::sort(sorted.begin(), sorted.end());
        const std::size_t rep = G.flatten(sorted);
        if (rep == flat) continue;
        const auto& a = G.components[flat];
        const auto& b = G.components[rep];
        for (std::size_t k = 0; k < a.levels(); ++k)
            res = std::max(res, max_abs_diff(a.slices[k], b.slices[k]));
    }
    return res;
}

double trace_residual(const TensorField& G) {
    if (G.rank < 2) throw std::domain_error("trace_residual: rank >= 2 required");
    const int n = G.dim;
    double res = 0.0;
    // loop over trailing tuples (j_3..j_m)
    std::size_t trailing = 1;
    for (int i = 2; i < G.rank; ++i) trailing *= static_cast<std::size_t>(n + 1);
    const std::size_t K = G.components[0].levels();
    const std::size_t nodes = G.grid().size();
    for (std::size_t tail = 0; tail < trailing; ++tail) {
        for (std::size_t k = 0; k < K; ++k) {
            for (std::size_t x = 0; x < nodes; ++x) {
                cplx acc{0.0, 0.0};
                for (int j = 0; j <= n; ++j) {
                    const std::size_t flat =
                        (static_cast<std::size_t>(j) * (n + 1) + static_cast<std::size_t>(j)) *
                            trailing +
                        tail;
                    acc += G.components[flat].slices[k].samples[x];
                }
                res = std::max(res, std::abs(acc));
            }
        }
    }
    return res;
}

TensorField gradient_tensor(const TensorField& G, bool force_finite_difference) {
    TensorField out;
    out.rank = G.rank + 1;
    out.dim = G.dim;
    out.components.reserve(G.components.size() * (G.dim + 1));
    for (const auto& comp : G.components) {
        const bool spectral = comp.semigroup_coeff.has_value() && !force_finite_difference;
        for (int j = 0; j <= G.dim; ++j)
            out.components.push_back(spectral ? spectral_derivative(comp, j)
                                              : central_difference(comp, j));
    }
    return out;
}

HalfSpaceField grad_m_magnitude(const HalfSpaceField& u, int m) {
    if (m < 0) throw std::domain_error("grad_m_magnitude: m must be >= 0");
    const int vars = u.grid.dim + 1;
    if (m == 0) {
        HalfSpaceField out(u.grid, u.t_ladder);
        for (std::size_t k = 0; k < u.levels(); ++k) out.slices[k] = abs(u.slices[k]);
        return out;
    }
    const bool spectral = u.semigroup_coeff.has_value();
    if (!spectral && static_cast<int>(u.levels()) < 2 * m + 1)
        throw std::invalid_argument("grad_m_magnitude: need >= 2m+1 t levels for differences");

    HalfSpaceField acc(u.grid, u.t_ladder);
    for (const auto& alpha : multi_indices(vars, m)) {
        HalfSpaceField d = u;
        for (int axis = 0; axis < vars; ++axis)
            for (int rep = 0; rep < alpha[axis]; ++rep)
                d = spectral ? spectral_derivative(d, axis) : central_difference(d, axis);
        // multinomial weight m!/alpha! makes this the Frobenius norm of the
        // m-th derivative tensor (mixed partials counted with multiplicity);
        // the subharmonicity threshold is sharp for that norm only
        double weight = 1.0;
        for (int i = 2; i <= m; ++i) weight *= i;
        for (int axis = 0; axis < vars; ++axis)
            for (int i = 2; i <= alpha[axis]; ++i) weight /= i;
        for (std::size_t k = 0; k < acc.levels(); ++k)
            for (std::size_t i = 0; i < acc.grid.size(); ++i) {
                const double a = std::abs(d.slices[k].samples[i]);
                acc.slices[k].samples[i] += cplx{weight * a * a, 0.0};
            }
    }
    for (std::size_t k = 0; k < acc.levels(); ++k)
        for (cplx& z : acc.slices[k].samples) z = cplx{std::sqrt(z.real()), 0.0};
    return acc;
}

SubharmonicityReport subharmonicity_check(const HalfSpaceField& w, double eta, double floor) {
    for (const auto& s : w.slices)
        for (const cplx& z : s.samples)
            if (z.real() < 0.0 || std::fabs(z.imag()) > 1e-14 * (1.0 + std::fabs(z.real())))
                throw std::domain_error("subharmonicity_check: field must be nonnegative");
    HalfSpaceField v(w.grid, w.t_ladder);
    for (std::size_t k = 0; k < w.levels(); ++k) v.slices[k] = pow_abs(w.slices[k], eta);

    SubharmonicityReport rep;
    rep.laplacian_min = std::numeric_limits<double>::infinity();
    for_each_interior_laplacian(v, [&](std::size_t lvl, std::size_t node, cplx lap) {
        if (w.slices[lvl].samples[node].real() <= floor) return;
        const double val = lap.real();
        if (val < rep.laplacian_min) {
            rep.laplacian_min = val;
            rep.where_node = node;
            rep.where_level = lvl;
        }
    });
    if (!std::isfinite(rep.laplacian_min)) rep.laplacian_min = 0.0;  // nothing above the floor
    rep.violation = std::max(0.0, -rep.laplacian_min);
    return rep;
}

// =============================================================================
// Harmonic majorant machinery
// =============================================================================

namespace {

double majorant_check_impl(const std::vector<HalfSpaceField>& comps, int rank, double eta, double a,
                           double t_probe) {
    const Grid& g = comps.at(0).grid;
    const int n = g.dim;
    const double threshold = static_cast<double>(n - 1) / static_cast<double>(n + rank - 1);
    if (!(eta > 0.0) || eta < threshold - 1e-12)
        throw std::invalid_argument("majorant_check: eta out of admissible range");
    const double h = g.spacing();
    const double cap = g.period / 8.0;
    if (a < h * (1.0 - 1e-12) || a > cap * (1.0 + 1e-12) || t_probe < h * (1.0 - 1e-12) ||
        t_probe > cap * (1.0 + 1e-12))
        throw std::invalid_argument("majorant_check: a, t_probe must lie in [h, L/8]");

    const GridFunction mag_a = magnitude_at_impl(comps, a);
    const GridFunction mag_ta = magnitude_at_impl(comps, t_probe + a);
    GridFunction w = pow_abs(mag_a, eta);
    Spectrum s = fourier(w);
    s = apply_multiplier(s, [t_probe](std::array<double, 2> xi) {
        return std::exp(-t_probe * std::hypot(xi[0], xi[1]));
    });
    const GridFunction conv = inverse_fourier(s);

    double excess = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < mag_ta.size(); ++i) {
        const double rhs_base = std::max(conv.samples[i].real(), 0.0);
        const double rhs = std::pow(rhs_base, 1.0 / eta);
        excess = std::max(excess, mag_ta.samples[i].real() - rhs);
    }
    return excess;
}

double k_integral_impl(const std::vector<HalfSpaceField>& comps, double eta, double q, double a,
                       double t, double p_minus) {
    if (!(q > 1.0) || !(q < p_minus / eta))
        throw std::invalid_argument("k_integral: q must lie in (1, p_minus/eta)");
    const Grid& g = comps.at(0).grid;
    const GridFunction mag = magnitude_at_impl(comps, t + a);
    GridFunction integrand(g);
    for (std::size_t i = 0; i < mag.size(); ++i) {
        const double r = g.point_norm(i);
        const double num = std::pow(mag.samples[i].real(), eta * q);
        integrand.samples[i] = cplx{num / std::pow(r + 1.0 + t, g.dim + 1), 0.0};
    }
    return quadrature(integrand).real();
}

} // namespace

double majorant_check(const HarmonicVector& F, double eta, double a, double t_probe) {
    return majorant_check_impl(F.components, 1, eta, a, t_probe);
}

double majorant_check(const TensorField& G, double eta, double a, double t_probe) {
    return majorant_check_impl(G.components, G.rank, eta, a, t_probe);
}

double k_integral(const HarmonicVector& F, double eta, double q, double a, double t,
                  double p_minus) {
    return k_integral_impl(F.components, eta, q, a, t, p_minus);
}

double k_integral(const TensorField& G, double eta, double q, double a, double t, double p_minus) {
    return k_integral_impl(G.components, eta, q, a, t, p_minus);
}

} // namespace vexh
