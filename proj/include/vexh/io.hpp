#pragma once

#include <string>

#include "vexh/grid.hpp"
#include "vexh/halfspace.hpp"

namespace vexh {

// CSV with header x_1[,x_2],re,im.
void write_grid_function_csv(const GridFunction& f, const std::string& path);
GridFunction read_grid_function_csv(const Grid& g, const std::string& path);

// One CSV per t slice plus a manifest JSON listing t values and file names.
// Returns the manifest path. `basename` is the file stem inside `dir`.
std::string write_half_space_field(const HalfSpaceField& u, const std::string& dir,
                                   const std::string& basename);

// Tensor components written as G_<j1>...<jm>_t<k>.csv inside `dir`, plus a
// manifest JSON; returns the manifest path.
std::string write_tensor_field(const TensorField& G, const std::string& dir,
                               const std::string& basename);

} // namespace vexh
