#include "ternary/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numeric>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ternary::kernels {
namespace {

std::int64_t isqrt64(std::int64_t n) {
    if (n < 0)
        return -1;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

// Scans one z-slice in ascending y; for each (y, z) at most one |x| can
// solve, so the first hit is the slice minimum under (y, x) order.
std::optional<Triple> scan_slice(std::int64_t a, std::int64_t b, std::int64_t c,
                                 const WitnessBox& box, std::int64_t z) {
    const std::int64_t cz2 = c * z * z;
    for (std::int64_t y = 0; y <= box.by; ++y) {
        const std::int64_t r = b * y * y + cz2;
        if (r % a != 0)
            continue;
        const std::int64_t t = -(r / a);
        if (t < 0)
            continue;
        const std::int64_t x = isqrt64(t);
        if (x * x != t || x > box.bx)
            continue;
        if (x == 0 && y == 0 && z == 0)
            continue;
        if (std::gcd(std::gcd(x, y), z) != 1)
            continue;
        return Triple{x, y, z};
    }
    return std::nullopt;
}

} // namespace

std::optional<Triple> witness_search_serial(std::int64_t a, std::int64_t b,
                                            std::int64_t c, const WitnessBox& box) {
    for (std::int64_t z = 0; z <= box.bz; ++z)
        if (auto hit = scan_slice(a, b, c, box, z))
            return hit;
    return std::nullopt;
}

std::optional<Triple> witness_search_parallel(std::int64_t a, std::int64_t b,
                                              std::int64_t c, const WitnessBox& box) {
#ifndef _OPENMP
    return witness_search_serial(a, b, c, box);
#else
    std::atomic<std::int64_t> best_z{box.bz + 1};
    std::optional<Triple> best;
    std::mutex best_mutex;

    #pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t z = 0; z <= box.bz; ++z) {
        if (z >= best_z.load(std::memory_order_relaxed))
            continue;
        if (auto hit = scan_slice(a, b, c, box, z)) {
            std::lock_guard<std::mutex> lock(best_mutex);
            if (!best || z < (*best)[2]) {
                best = hit;
                best_z.store(z, std::memory_order_relaxed);
            }
        }
    }
    return best;
#endif
}

namespace {

struct ResidueTables {
    std::vector<std::uint8_t> any;  // some z has c z^2 = r (mod q)
    std::vector<std::uint8_t> unit; // some z with p not dividing z
    std::vector<std::int64_t> by2;  // b y^2 mod q
    std::vector<std::uint8_t> yunit;
};

std::int64_t reduce(std::int64_t x, std::int64_t q) {
    x %= q;
    return x < 0 ? x + q : x;
}

ResidueTables build_tables(std::int64_t b, std::int64_t c, std::int64_t p,
                           std::int64_t q) {
    ResidueTables t;
    t.any.assign(static_cast<std::size_t>(q), 0);
    t.unit.assign(static_cast<std::size_t>(q), 0);
    t.by2.resize(static_cast<std::size_t>(q));
    t.yunit.resize(static_cast<std::size_t>(q));
    for (std::int64_t z = 0; z < q; ++z) {
        const std::int64_t r = (c * ((z * z) % q)) % q;
        t.any[static_cast<std::size_t>(r)] = 1;
        if (z % p != 0)
            t.unit[static_cast<std::size_t>(r)] = 1;
        t.by2[static_cast<std::size_t>(z)] = (b * ((z * z) % q)) % q;
        t.yunit[static_cast<std::size_t>(z)] = z % p != 0 ? 1 : 0;
    }
    return t;
}

bool scan_x_range(std::int64_t a, std::int64_t p, std::int64_t q,
                  const ResidueTables& t, std::int64_t x_begin, std::int64_t x_end) {
    for (std::int64_t x = x_begin; x < x_end; ++x) {
        const std::int64_t ax2 = (a * ((x * x) % q)) % q;
        const bool xu = x % p != 0;
        for (std::int64_t y = 0; y < q; ++y) {
            std::int64_t s = ax2 + t.by2[static_cast<std::size_t>(y)];
            if (s >= q)
                s -= q;
            s = s == 0 ? 0 : q - s; // target residue for c z^2
            if (xu || t.yunit[static_cast<std::size_t>(y)]) {
                if (t.any[static_cast<std::size_t>(s)])
                    return true;
            } else if (t.unit[static_cast<std::size_t>(s)]) {
                return true;
            }
        }
    }
    return false;
}

} // namespace

bool mod_pk_search_serial(std::int64_t a, std::int64_t b, std::int64_t c,
                          std::int64_t p, std::int64_t q) {
    a = reduce(a, q);
    const ResidueTables t = build_tables(reduce(b, q), reduce(c, q), p, q);
    return scan_x_range(a, p, q, t, 0, q);
}

bool mod_pk_search_parallel(std::int64_t a, std::int64_t b, std::int64_t c,
                            std::int64_t p, std::int64_t q) {
#ifndef _OPENMP
    return mod_pk_search_serial(a, b, c, p, q);
#else
    a = reduce(a, q);
    const ResidueTables t = build_tables(reduce(b, q), reduce(c, q), p, q);
    std::atomic<bool> found{false};
    const std::int64_t chunk = std::max<std::int64_t>(64, q / 256);

    #pragma omp parallel for schedule(dynamic)
    for (std::int64_t x0 = 0; x0 < q; x0 += chunk) {
        if (found.load(std::memory_order_relaxed))
            continue;
        if (scan_x_range(a, p, q, t, x0, std::min(q, x0 + chunk)))
            found.store(true, std::memory_order_relaxed);
    }
    return found.load();
#endif
}

} // namespace ternary::kernels
