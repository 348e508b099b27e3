#include "ternary/solver.hpp"

#include "ternary/errors.hpp"
#include "ternary/kernels.hpp"

#include <limits>
#include <stdexcept>

namespace mp = boost::multiprecision;

namespace ternary {
namespace {

// Fallback scan in arbitrary precision, same enumeration order as the
// int64 kernels.
std::optional<Solution> witness_search_big(const TernaryForm& f, const Int& bx,
                                           const Int& by, const Int& bz) {
    for (Int z = 0; z <= bz; ++z) {
        const Int cz2 = f.c * z * z;
        for (Int y = 0; y <= by; ++y) {
            const Int r = f.b * y * y + cz2;
            if (r % f.a != 0)
                continue;
            const Int t = -(r / f.a);
            if (t < 0)
                continue;
            const Int x = mp::sqrt(t);
            if (x * x != t || x > bx)
                continue;
            if (x == 0 && y == 0 && z == 0)
                continue;
            if (gcd(gcd(x, y), z) != 1)
                continue;
            return Solution{x, y, z};
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<Solution> find_witness(const TernaryForm& f, const BoundScale& scale,
                                     std::uint64_t budget) {
    require_normalized(f);
    if (scale.num < 1 || scale.den < 1)
        throw std::invalid_argument("find_witness: bound scale must be positive");

    const Int bx = isqrt_ceil(mp::abs(f.b * f.c)) * scale.num / scale.den;
    const Int by = isqrt_ceil(mp::abs(f.c * f.a)) * scale.num / scale.den;
    const Int bz = isqrt_ceil(mp::abs(f.a * f.b)) * scale.num / scale.den;

    const Int box = (2 * bx + 1) * (2 * by + 1) * (2 * bz + 1);
    if (box > budget)
        throw budget_exceeded("find_witness: search box of " + box.str() +
                              " candidates exceeds budget");

    // the equation only sees squares, so the first witness in
    // (|z|,|y|,|x|,signs) order is componentwise nonnegative
    const Int max_term = mp::abs(f.a) * (bx + 1) * (bx + 1) +
                         mp::abs(f.b) * (by + 1) * (by + 1) +
                         mp::abs(f.c) * (bz + 1) * (bz + 1);
    if (!fits_int64(max_term * 4) || !fits_int64(f.a) || !fits_int64(f.b) ||
        !fits_int64(f.c))
        return witness_search_big(f, bx, by, bz);

    const kernels::WitnessBox kbox{bx.convert_to<std::int64_t>(),
                                   by.convert_to<std::int64_t>(),
                                   bz.convert_to<std::int64_t>()};
    const auto a = f.a.convert_to<std::int64_t>();
    const auto b = f.b.convert_to<std::int64_t>();
    const auto c = f.c.convert_to<std::int64_t>();

    const bool parallel = (kbox.by + 1) * (kbox.bz + 1) >= 1 << 16;
    const auto hit = parallel ? kernels::witness_search_parallel(a, b, c, kbox)
                              : kernels::witness_search_serial(a, b, c, kbox);
    if (!hit)
        return std::nullopt;
    return Solution{Int((*hit)[0]), Int((*hit)[1]), Int((*hit)[2])};
}

bool verify_solution(const TernaryForm& f, const Solution& s) {
    if (s.x == 0 && s.y == 0 && s.z == 0)
        return false;
    return f.a * s.x * s.x + f.b * s.y * s.y + f.c * s.z * s.z == 0;
}

Solution pull_back(const Transform& t, const Solution& s) {
    Solution out{t.mx * s.x, t.my * s.y, t.mz * s.z};
    Int g = gcd(gcd(out.x, out.y), out.z);
    if (g > 1) {
        out.x /= g;
        out.y /= g;
        out.z /= g;
    }
    return out;
}

} // namespace ternary
