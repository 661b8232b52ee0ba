#include "vexh/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vexh::fft {

namespace {

void bit_reverse_permute(cplx* a, std::size_t n) {
    std::size_t j = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (i < j) std::swap(a[i], a[j]);
        std::size_t bit = n >> 1;
        while (j & bit) {
            j ^= bit;
            bit >>= 1;
        }
        j |= bit;
    }
}

} // namespace

void transform(cplx* a, std::size_t n, bool inverse) {
    if (!is_power_of_two(n)) throw std::domain_error("fft: size must be a power of two");
    if (n == 1) return;
    bit_reverse_permute(a, n);
    const double sign = inverse ? 1.0 : -1.0;
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
        const cplx wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            cplx w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const cplx u = a[i + k];
                const cplx v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
    if (inverse) {
        const double inv = 1.0 / static_cast<double>(n);
        for (std::size_t i = 0; i < n; ++i) a[i] *= inv;
    }
}

void transform_strided(cplx* data, std::size_t n, std::size_t stride, bool inverse,
                       std::vector<cplx>& scratch) {
    if (stride == 1) {
        transform(data, n, inverse);
        return;
    }
    scratch.resize(n);
    for (std::size_t i = 0; i < n; ++i) scratch[i] = data[i * stride];
    transform(scratch.data(), n, inverse);
    for (std::size_t i = 0; i < n; ++i) data[i * stride] = scratch[i];
}

} // namespace vexh::fft
