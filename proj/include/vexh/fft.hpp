#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace vexh::fft {

using cplx = std::complex<double>;

constexpr bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// In-place radix-2 complex transform over contiguous data.
// Forward uses kernel e^{-2*pi*i*jk/n}; inverse uses e^{+...} and divides by n.
void transform(cplx* data, std::size_t n, bool inverse);

// Same transform over a strided slice data[0], data[stride], ...
void transform_strided(cplx* data, std::size_t n, std::size_t stride, bool inverse,
                       std::vector<cplx>& scratch);

} // namespace vexh::fft
