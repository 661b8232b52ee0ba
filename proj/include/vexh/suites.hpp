#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "vexh/config.hpp"
#include "vexh/corpus.hpp"

namespace vexh {

struct SuiteContext {
    Grid grid;
    std::vector<ExponentSpec> exponent_specs;
    CorpusSpec corpus_spec;
    std::uint64_t seed = 42;
    int jobs = 0;
    std::string planted_defect = "none";  // none | nonharmonic | curl
    double bisection_tol = 1e-12;
};

struct SuiteResult {
    std::string name;
    nlohmann::ordered_json data;
    std::vector<std::string> failures;
    double seconds = 0.0;
};

SuiteResult run_lebesgue_suite(const SuiteContext& ctx);
SuiteResult run_operators_suite(const SuiteContext& ctx);
SuiteResult run_halfspace_suite(const SuiteContext& ctx);
SuiteResult run_maximal_suite(const SuiteContext& ctx);
SuiteResult run_characterize_suite(const SuiteContext& ctx);

// Build a SuiteContext from a parsed config (applies grid_scale to N_g).
SuiteContext make_context(const ConfigFile& cfg, std::uint64_t seed_override, int jobs_override,
                          double grid_scale);

// Flat per-function scalar rows for the CSV sidecar ("tag,metric,value").
std::vector<std::array<std::string, 3>> flatten_scalars(const SuiteResult& r);

} // namespace vexh
