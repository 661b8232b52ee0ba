#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "vexh/exponent.hpp"
#include "vexh/grid.hpp"

namespace vexh {

// =============================================================================
// Deterministic corpus generation (seed fixed => byte-identical corpus).
// =============================================================================
struct CorpusSpec {
    int gaussians = 2;
    int modulated = 2;
    int poisson_data = 1;
    int box_atoms = 1;
    int random_bandlimited = 2;
    int band_limit_divisor = 8;  // random members use modes up to N/divisor
    bool mean_zero_only = false; // restrict to cancellative members (small-p suites)
};

std::vector<GridFunction> make_corpus(const Grid& g, const CorpusSpec& spec, std::uint64_t seed);

// Individual generators (normalized to unit sup norm).
GridFunction gaussian_packet(const Grid& g, double center1, double center2, double sigma,
                             std::string tag);
GridFunction modulated_gaussian(const Grid& g, double center1, double center2, double sigma,
                                double freq, std::string tag);
GridFunction poisson_data(const Grid& g, double t, int shift_cells, std::string tag);
GridFunction box_smooth_atom(const Grid& g, double halfwidth, double smoothing, std::string tag);
GridFunction random_bandlimited(const Grid& g, int band, bool zero_mean, std::mt19937_64& rng,
                                std::string tag);

GridFunction remove_mean(const GridFunction& f);

// Fixed closed-form band-limited member (identical across resolutions, mean
// zero); the workhorse of refinement studies.
GridFunction fixed_band_function(const Grid& g, std::string tag = "fixed_band");

// =============================================================================
// Exponent builtins (External Interface of the exponent module)
// =============================================================================
struct ExponentSpec {
    std::string expr = "constant";  // constant | affine-clamped | sin-bump | two-level-step
    double base = 2.0;
    double amp = 0.0;        // sin-bump amplitude / affine slope / step high level
    double lo = 0.0;         // affine clamp low
    double hi = 0.0;         // affine clamp high
    double threshold = 0.0;  // step location along x_1
    double p_zero = 0.0;     // 0 selects the default 0.9*p_minus

    std::string describe() const;  // echoed verbatim into reports
};

VariableExponent make_exponent(const Grid& g, const ExponentSpec& spec);

// Deterministic uniform double in [0,1) from the raw engine stream.
double uniform01(std::mt19937_64& rng);

} // namespace vexh
