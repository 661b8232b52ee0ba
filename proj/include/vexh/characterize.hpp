#pragma once

#include <string>
#include <vector>

#include "vexh/exponent.hpp"
#include "vexh/halfspace.hpp"
#include "vexh/lebesgue.hpp"
#include "vexh/maximal.hpp"

namespace vexh {

// Default mollification ladder {2^-4, 2^-3.5, ..., 2^0} * (L/16).
std::vector<double> default_eps_ladder(const Grid& g);

// ||grand_maximal(f)||_{p(.)} — the H^{p(.)} norm proxy (radial mode).
double hardy_norm_proxy(const GridFunction& f, const VariableExponent& p, const TestFamily& family,
                        const std::vector<double>& t_set);

// max over eps of ||f*phi_eps||_{p(.)} + sum_j ||R_j(f)*phi_eps||_{p(.)}.
double riesz_budget_A3(const GridFunction& f, const VariableExponent& p, const SeparableKernel& phi,
                       const std::vector<double>& eps_ladder);

// ||f||_{p(.)} + sum_j ||R_j f||_{p(.)} (no mollifier); requires p_minus >= 1.
double riesz_budget_A3_direct(const GridFunction& f, const VariableExponent& p);

// Order-<=m composition budget; requires m >= 2 and p_minus > (n-1)/(n+m-1).
double riesz_budget_A4(const GridFunction& f, const VariableExponent& p, const SeparableKernel& phi,
                       const std::vector<double>& eps_ladder, int m);

struct EquivalenceConfig {
    TestFamily family;
    std::vector<double> t_set;
    SeparableKernel phi;
    std::vector<double> eps_ladder;
    int composition_order = 1;   // 1 -> A3 budgets, >= 2 -> A4 budgets
    bool include_direct = true;  // also compute the p_- >= 1 direct budget
    int jobs = 0;                // corpus-parallel workers (0 = hardware)
};

struct FunctionRecord {
    std::string tag;
    double hardy_norm = 0.0;
    double budget = 0.0;         // A3 or A4 over the eps ladder
    double budget_direct = 0.0;  // Eq-(1.3)-style budget, 0 when skipped
    double ratio = 0.0;          // budget / hardy_norm
};

struct EquivalenceReport {
    std::vector<FunctionRecord> records;
    double c_lo = 0.0;
    double c_hi = 0.0;
};

// Per-function ratios and the observed equivalence band; rejects corpora with
// a zero member.
EquivalenceReport equivalence_report(const std::vector<GridFunction>& corpus,
                                     const VariableExponent& p, const EquivalenceConfig& config);

// ||f||_{p(.)} / hardy_norm_proxy(f); requires p_minus >= 1, nonzero f.
double embedding_check(const GridFunction& f, const VariableExponent& p, const TestFamily& family,
                       const std::vector<double>& t_set);

struct MajorantRecord {
    std::string tag;
    int rank = 1;
    double eta = 0.0, a = 0.0, t = 0.0;
    double max_excess = 0.0;
};

struct KIntegralRecord {
    std::string tag;
    int rank = 1;
    double eta = 0.0, q = 0.0, a = 0.0;
    double k_min = 0.0, k_max = 0.0;  // over the t grid
};

struct MajorantSection {
    std::vector<MajorantRecord> excess;
    std::vector<KIntegralRecord> kint;
    double worst_excess = 0.0;
    bool empty_corpus = false;
};

// Runs majorant_check and k_integral over the product grid; eta_grid must lie
// inside [(n-1)/(n+m-1)+0.05, p_minus-0.05] for every m in m_list.
MajorantSection majorant_suite(const std::vector<GridFunction>& corpus, const VariableExponent& p,
                               const std::vector<int>& m_list, const std::vector<double>& eta_grid,
                               const std::vector<double>& a_grid, const std::vector<double>& t_grid,
                               int jobs = 0);

} // namespace vexh
