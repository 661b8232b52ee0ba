#include "vexh/windows.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace vexh {

std::vector<double> periodic_window_max(const std::vector<double>& a, int halfwidth) {
    const int N = static_cast<int>(a.size());
    if (halfwidth < 0) throw std::domain_error("periodic_window_max: negative halfwidth");
    if (halfwidth == 0) return a;
    if (2 * halfwidth + 1 >= N) {
        const double m = *std::max_element(a.begin(), a.end());
        return std::vector<double>(a.size(), m);
    }
    // extended copy [N-w .. N-1] + a + [0 .. w-1]; window length 2w+1
    const int w = halfwidth;
    std::vector<double> ext(N + 2 * w);
    for (int i = 0; i < N + 2 * w; ++i) ext[i] = a[((i - w) % N + N) % N];
    std::vector<double> out(N);
    std::deque<int> dq;
    const int win = 2 * w + 1;
    for (int i = 0; i < N + 2 * w; ++i) {
        while (!dq.empty() && ext[dq.back()] <= ext[i]) dq.pop_back();
        dq.push_back(i);
        if (dq.front() <= i - win) dq.pop_front();
        if (i >= win - 1) out[i - win + 1] = ext[dq.front()];
    }
    return out;
}

std::vector<double> periodic_window_sum(const std::vector<double>& a, int halfwidth) {
    const int N = static_cast<int>(a.size());
    if (halfwidth < 0) throw std::domain_error("periodic_window_sum: negative halfwidth");
    const int w = halfwidth;
    std::vector<double> out(N, 0.0);
    if (2 * w + 1 >= N) {
        double total = 0.0;
        for (double v : a) total += v;
        std::fill(out.begin(), out.end(), total);
        return out;
    }
    std::vector<double> prefix(N + 1, 0.0);
    for (int i = 0; i < N; ++i) prefix[i + 1] = prefix[i] + a[i];
    auto range_sum = [&](int lo, int hi) {  // inclusive indices, may wrap
        lo = ((lo % N) + N) % N;
        hi = ((hi % N) + N) % N;
        if (lo <= hi) return prefix[hi + 1] - prefix[lo];
        return (prefix[N] - prefix[lo]) + prefix[hi + 1];
    };
    for (int c = 0; c < N; ++c) out[c] = range_sum(c - w, c + w);
    return out;
}

int ball_row_halfwidth(double rr, int dy) {
    const double rem = rr * rr - static_cast<double>(dy) * dy;
    if (rem <= 0.0) return -1;  // row not in the ball
    int k = static_cast<int>(std::floor(std::sqrt(rem)));
    while (k >= 0 && static_cast<double>(k) * k + static_cast<double>(dy) * dy >= rr * rr) --k;
    return k;
}

std::vector<double> ball_window_max(const Grid& g, const std::vector<double>& values, double radius) {
    const int N = g.points_per_axis;
    const double rr = radius / g.spacing();
    if (g.dim == 1) {
        const int w = std::max(0, ball_row_halfwidth(rr, 0));
        return periodic_window_max(values, w);
    }
    const int wmax = static_cast<int>(std::ceil(rr));
    std::vector<double> out(values.size(), -std::numeric_limits<double>::infinity());
    std::vector<double> row(N), rowmax;
    for (int dy = -wmax; dy <= wmax; ++dy) {
        const int wx = ball_row_halfwidth(rr, dy);
        if (wx < 0) continue;
        for (int i1 = 0; i1 < N; ++i1) {
            const int src = ((i1 + dy) % N + N) % N;
            for (int i2 = 0; i2 < N; ++i2) row[i2] = values[g.flatten(src, i2)];
            rowmax = periodic_window_max(row, std::min(wx, N / 2));
            double* dst = out.data() + g.flatten(i1, 0);
            for (int i2 = 0; i2 < N; ++i2) dst[i2] = std::max(dst[i2], rowmax[i2]);
        }
    }
    return out;
}

std::vector<double> ball_window_mean(const Grid& g, const std::vector<double>& values, double radius) {
    const int N = g.points_per_axis;
    const double rr = radius / g.spacing();
    if (g.dim == 1) {
        const int w = std::max(0, ball_row_halfwidth(rr, 0));
        auto sums = periodic_window_sum(values, w);
        const double count = std::min(2 * w + 1, N);
        for (double& v : sums) v /= count;
        return sums;
    }
    const int wmax = static_cast<int>(std::ceil(rr));
    std::vector<double> out(values.size(), 0.0);
    std::vector<double> row(N), rowsum;
    double count = 0.0;
    for (int dy = -wmax; dy <= wmax; ++dy) {
        const int wx = ball_row_halfwidth(rr, dy);
        if (wx < 0) continue;
        count += std::min(2 * wx + 1, N);
        for (int i1 = 0; i1 < N; ++i1) {
            const int src = ((i1 + dy) % N + N) % N;
            for (int i2 = 0; i2 < N; ++i2) row[i2] = values[g.flatten(src, i2)];
            rowsum = periodic_window_sum(row, std::min(wx, N / 2));
            double* dst = out.data() + g.flatten(i1, 0);
            for (int i2 = 0; i2 < N; ++i2) dst[i2] += rowsum[i2];
        }
    }
    for (double& v : out) v /= count;
    return out;
}

} // namespace vexh
