#include "vexh/characterize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "vexh/operators.hpp"
#include "vexh/parallel.hpp"

namespace vexh {

std::vector<double> default_eps_ladder(const Grid& g) {
    std::vector<double> eps;
    const double base = g.period / 16.0;
    const double floor = 0.5 * g.spacing();  // mollify's resolvable range
    for (double e = -4.0; e <= 0.0 + 1e-12; e += 0.5) {
        const double v = std::pow(2.0, e) * base;
        if (v >= floor) eps.push_back(v);
    }
    return eps;
}

double hardy_norm_proxy(const GridFunction& f, const VariableExponent& p, const TestFamily& family,
                        const std::vector<double>& t_set) {
    family.require_certified();
    const GridFunction gm = grand_maximal(f, family, t_set, MaximalMode::radial);
    return luxemburg_norm(gm, p).value;
}

double riesz_budget_A3(const GridFunction& f, const VariableExponent& p, const SeparableKernel& phi,
                       const std::vector<double>& eps_ladder) {
    if (eps_ladder.empty()) throw std::invalid_argument("riesz_budget_A3: empty eps ladder");
    const int n = f.grid.dim;
    std::vector<GridFunction> parts;
    parts.push_back(f);
    for (int j = 1; j <= n; ++j) parts.push_back(riesz(f, RieszSymbol({j})));
    double budget = 0.0;
    for (double eps : eps_ladder) {
        double sum = 0.0;
        for (const auto& g : parts) sum += luxemburg_norm(mollify(g, phi, eps), p).value;
        budget = std::max(budget, sum);
    }
    return budget;
}

double riesz_budget_A3_direct(const GridFunction& f, const VariableExponent& p) {
    if (p.p_minus < 1.0)
        throw std::invalid_argument("riesz_budget_A3_direct: requires p_minus >= 1");
    double sum = luxemburg_norm(f, p).value;
    for (int j = 1; j <= f.grid.dim; ++j)
        sum += luxemburg_norm(riesz(f, RieszSymbol({j})), p).value;
    return sum;
}

namespace {

// all (j_1..j_k) in {1..n}^k for k = 1..m
std::vector<std::vector<int>> composition_tuples(int n, int m) {
    std::vector<std::vector<int>> out;
    for (int k = 1; k <= m; ++k) {
        std::vector<int> tuple(k, 1);
        while (true) {
            out.push_back(tuple);
            int pos = k - 1;
            while (pos >= 0 && tuple[pos] == n) tuple[pos--] = 1;
            if (pos < 0) break;
            ++tuple[pos];
        }
    }
    return out;
}

} // namespace

double riesz_budget_A4(const GridFunction& f, const VariableExponent& p, const SeparableKernel& phi,
                       const std::vector<double>& eps_ladder, int m) {
    if (m < 2) throw std::invalid_argument("riesz_budget_A4: m >= 2 required");
    const int n = f.grid.dim;
    const double threshold = static_cast<double>(n - 1) / static_cast<double>(n + m - 1);
    if (!(p.p_minus > threshold))
        throw std::invalid_argument("riesz_budget_A4: requires p_minus > (n-1)/(n+m-1)");
    if (eps_ladder.empty()) throw std::invalid_argument("riesz_budget_A4: empty eps ladder");

    std::vector<GridFunction> parts;
    parts.push_back(f);
    for (const auto& tuple : composition_tuples(n, m)) parts.push_back(riesz(f, RieszSymbol(tuple)));
    double budget = 0.0;
    for (double eps : eps_ladder) {
        double sum = 0.0;
        for (const auto& g : parts) sum += luxemburg_norm(mollify(g, phi, eps), p).value;
        budget = std::max(budget, sum);
    }
    return budget;
}

EquivalenceReport equivalence_report(const std::vector<GridFunction>& corpus,
                                     const VariableExponent& p, const EquivalenceConfig& config) {
    if (corpus.empty()) throw std::invalid_argument("equivalence_report: empty corpus");
    for (const auto& f : corpus)
        if (max_abs(f) == 0.0)
            throw std::invalid_argument("equivalence_report: zero corpus member (ratios undefined)");
    EquivalenceReport rep;
    rep.records.resize(corpus.size());
    parallel_for(corpus.size(), config.jobs, [&](std::size_t i) {
        const GridFunction& f = corpus[i];
        FunctionRecord rec;
        rec.tag = f.tag;
        rec.hardy_norm = hardy_norm_proxy(f, p, config.family, config.t_set);
        rec.budget = config.composition_order >= 2
                         ? riesz_budget_A4(f, p, config.phi, config.eps_ladder,
                                           config.composition_order)
                         : riesz_budget_A3(f, p, config.phi, config.eps_ladder);
        if (config.include_direct && p.p_minus >= 1.0)
            rec.budget_direct = riesz_budget_A3_direct(f, p);
        rec.ratio = rec.budget / rec.hardy_norm;
        rep.records[i] = std::move(rec);
    });
    rep.c_lo = std::numeric_limits<double>::infinity();
    rep.c_hi = 0.0;
    for (const auto& rec : rep.records) {
        rep.c_lo = std::min(rep.c_lo, rec.ratio);
        rep.c_hi = std::max(rep.c_hi, rec.ratio);
    }
    return rep;
}

double embedding_check(const GridFunction& f, const VariableExponent& p, const TestFamily& family,
                       const std::vector<double>& t_set) {
    if (p.p_minus < 1.0) throw std::invalid_argument("embedding_check: requires p_minus >= 1");
    if (max_abs(f) == 0.0) throw std::invalid_argument("embedding_check: zero f is degenerate");
    return luxemburg_norm(f, p).value / hardy_norm_proxy(f, p, family, t_set);
}

MajorantSection majorant_suite(const std::vector<GridFunction>& corpus, const VariableExponent& p,
                               const std::vector<int>& m_list, const std::vector<double>& eta_grid,
                               const std::vector<double>& a_grid, const std::vector<double>& t_grid,
                               int jobs) {
    MajorantSection sec;
    if (corpus.empty()) {
        sec.empty_corpus = true;
        return sec;
    }
    const int n = p.grid.dim;
    const double delta = 0.05;
    for (int m : m_list) {
        const double lo = static_cast<double>(n - 1) / static_cast<double>(n + m - 1) + delta;
        const double hi = p.p_minus - delta;
        for (double eta : eta_grid)
            if (eta < lo - 1e-12 || eta > hi + 1e-12)
                throw std::invalid_argument("majorant_suite: eta grid out of admissible range");
    }
    sec.worst_excess = -std::numeric_limits<double>::infinity();
    std::vector<MajorantSection> partial(corpus.size());
    parallel_for(corpus.size(), jobs, [&](std::size_t ci) {
        const GridFunction& f = corpus[ci];
        MajorantSection& sec = partial[ci];
        sec.worst_excess = -std::numeric_limits<double>::infinity();
        for (int m : m_list) {
            const double h = p.grid.spacing();
            const std::vector<double> ladder{h, 2.0 * h, 3.0 * h};
            HarmonicVector F;
            TensorField G;
            const bool vector_case = (m == 1);
            if (vector_case)
                F = poisson_vector(f, ladder);
            else
                G = poisson_tensor(f, ladder, m);
            for (double eta : eta_grid) {
                for (double a : a_grid)
                    for (double t : t_grid) {
                        MajorantRecord rec;
                        rec.tag = f.tag;
                        rec.rank = m;
                        rec.eta = eta;
                        rec.a = a;
                        rec.t = t;
                        rec.max_excess = vector_case ? majorant_check(F, eta, a, t)
                                                     : majorant_check(G, eta, a, t);
                        sec.worst_excess = std::max(sec.worst_excess, rec.max_excess);
                        sec.excess.push_back(std::move(rec));
                    }
                const double q = std::min(2.0, 0.5 * (1.0 + p.p_minus / eta));
                for (double a : a_grid) {
                    KIntegralRecord kr;
                    kr.tag = f.tag;
                    kr.rank = m;
                    kr.eta = eta;
                    kr.q = q;
                    kr.a = a;
                    kr.k_min = std::numeric_limits<double>::infinity();
                    kr.k_max = 0.0;
                    for (double t : t_grid) {
                        const double v = vector_case ? k_integral(F, eta, q, a, t, p.p_minus)
                                                     : k_integral(G, eta, q, a, t, p.p_minus);
                        kr.k_min = std::min(kr.k_min, v);
                        kr.k_max = std::max(kr.k_max, v);
                    }
                    sec.kint.push_back(std::move(kr));
                }
            }
        }
    });
    for (auto& part : partial) {
        sec.worst_excess = std::max(sec.worst_excess, part.worst_excess);
        for (auto& r : part.excess) sec.excess.push_back(std::move(r));
        for (auto& r : part.kint) sec.kint.push_back(std::move(r));
    }
    return sec;
}

} // namespace vexh
