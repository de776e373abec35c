#include "cfc/convolution.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace cfc {

namespace {

using u64 = std::uint64_t;

void check(std::size_t fs, std::size_t gs, int n)
{
    if (n < 0 || n > 30 || fs != (std::size_t(1) << n) || gs != fs)
        throw std::invalid_argument("subset convolution: table sizes must be 2^n, n <= 30");
}

// in-place zeta (sum over subsets) or Möbius on a table with `stride` values per set
void zeta(std::vector<u64>& t, int n, std::size_t stride, bool inverse)
{
    std::size_t N = std::size_t(1) << n;
    for (int b = 0; b < n; ++b)
        for (std::size_t x = 0; x < N; ++x)
            if (x >> b & 1) {
                u64* dst = &t[x * stride];
                const u64* src = &t[(x ^ (std::size_t(1) << b)) * stride];
                for (std::size_t k = 0; k < stride; ++k)
                    dst[k] = inverse ? dst[k] - src[k] : dst[k] + src[k];
            }
}

} // namespace

std::vector<std::int64_t> subset_convolution_ring(const std::vector<std::int64_t>& f,
                                                  const std::vector<std::int64_t>& g, int n)
{
    check(f.size(), g.size(), n);
    std::size_t N = std::size_t(1) << n, R = n + 1;
    std::vector<u64> fr(N * R, 0), gr(N * R, 0), h(N * R, 0);
    for (std::size_t x = 0; x < N; ++x) {
        int k = std::popcount(x);
        fr[x * R + k] = static_cast<u64>(f[x]);
        gr[x * R + k] = static_cast<u64>(g[x]);
    }
    zeta(fr, n, R, false);
    zeta(gr, n, R, false);
    for (std::size_t x = 0; x < N; ++x)
        for (std::size_t k = 0; k < R; ++k) {
            u64 s = 0;
            for (std::size_t i = 0; i <= k; ++i)
                s += fr[x * R + i] * gr[x * R + k - i];
            h[x * R + k] = s;
        }
    zeta(h, n, R, true);
    std::vector<std::int64_t> out(N);
    for (std::size_t x = 0; x < N; ++x)
        out[x] = static_cast<std::int64_t>(h[x * R + std::popcount(x)]);
    return out;
}

std::vector<std::int64_t> subset_convolution_maxsum(const std::vector<std::int64_t>& f,
                                                    const std::vector<std::int64_t>& g, int n)
{
    check(f.size(), g.size(), n);
    std::size_t N = std::size_t(1) << n, R = n + 1;
    auto range = [](const std::vector<std::int64_t>& t, std::int64_t& lo) {
        lo = 0;
        std::int64_t hi = 0;
        bool any = false;
        for (auto v : t)
            if (v != NEG_INF) {
                lo = any ? std::min(lo, v) : v;
                hi = any ? std::max(hi, v) : v;
                any = true;
            }
        return any ? static_cast<std::size_t>(hi - lo) + 1 : 0;
    };
    std::int64_t flo, glo;
    std::size_t fd = range(f, flo), gd = range(g, glo);
    std::vector<std::int64_t> out(N, NEG_INF);
    if (!fd || !gd)
        return out;
    std::size_t hd = fd + gd - 1;

    // layout: [set][rank][degree]
    std::vector<u64> fr(N * R * fd, 0), gr(N * R * gd, 0);
    for (std::size_t x = 0; x < N; ++x) {
        int k = std::popcount(x);
        if (f[x] != NEG_INF)
            fr[(x * R + k) * fd + static_cast<std::size_t>(f[x] - flo)] = 1;
        if (g[x] != NEG_INF)
            gr[(x * R + k) * gd + static_cast<std::size_t>(g[x] - glo)] = 1;
    }
    zeta(fr, n, R * fd, false);
    zeta(gr, n, R * gd, false);
    std::vector<u64> h(N * R * hd, 0);
    for (std::size_t x = 0; x < N; ++x)
        for (std::size_t k = 0; k < R; ++k) {
            u64* dst = &h[(x * R + k) * hd];
            for (std::size_t i = 0; i <= k; ++i) {
                const u64* a = &fr[(x * R + i) * fd];
                const u64* b = &gr[(x * R + k - i) * gd];
                for (std::size_t p = 0; p < fd; ++p) {
                    if (!a[p])
                        continue;
                    for (std::size_t q = 0; q < gd; ++q)
                        dst[p + q] += a[p] * b[q];
                }
            }
        }
    zeta(h, n, R * hd, true);
    for (std::size_t x = 0; x < N; ++x) {
        const u64* c = &h[(x * R + std::popcount(x)) * hd];
        for (std::size_t d = hd; d-- > 0;)
            if (c[d]) {
                out[x] = flo + glo + static_cast<std::int64_t>(d);
                break;
            }
    }
    return out;
}

} // namespace cfc
