#pragma once

#include <vector>

#include "vexh/grid.hpp"

namespace vexh {

// Sliding max over periodic windows |offset| <= halfwidth (monotone deque).
std::vector<double> periodic_window_max(const std::vector<double>& a, int halfwidth);

// Circular windowed sums around every center from a 1D array (prefix sums).
std::vector<double> periodic_window_sum(const std::vector<double>& a, int halfwidth);

// Integer half-widths of a discrete ball: dx admitted iff (dx^2+dy^2) < rr^2.
int ball_row_halfwidth(double rr, int dy);

// max over grid-node offsets d with |d|*h < radius of values[x + d] (periodic,
// Euclidean metric; dim 1 or 2). values is flattened on g.
std::vector<double> ball_window_max(const Grid& g, const std::vector<double>& values, double radius);

// mean over grid-node offsets d with |d|*h < radius of values[x + d].
std::vector<double> ball_window_mean(const Grid& g, const std::vector<double>& values, double radius);

} // namespace vexh
