#include "ternary/arith.hpp"

#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>

namespace mp = boost::multiprecision;

namespace ternary {
namespace {

constexpr std::int64_t trial_division_cutoff = 1'000'000;

// Witnesses proving n < 3,317,044,064,679,887,385,961,981 composite or prime.
constexpr int mr_bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
constexpr int mr_extra_bases[] = {41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

bool mr_composite(const Int& n, const Int& base, const Int& d, unsigned r) {
    Int x = mp::powm(base % n, d, n);
    if (x == 1 || x == n - 1)
        return false;
    for (unsigned i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n - 1)
            return false;
    }
    return true;
}

// Brent's cycle-finding rho. n odd, composite, not a prime power of a
// trial-division prime. Deterministic: polynomial offsets are tried in order.
Int pollard_brent(const Int& n) {
    for (Int c = 1;; ++c) {
        Int y = 2, g = 1, q = 1, x = 0, ys = 0;
        std::uint64_t r = 1;
        const std::uint64_t batch = 128;
        while (g == 1) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i)
                y = (y * y + c) % n;
            std::uint64_t k = 0;
            while (k < r && g == 1) {
                ys = y;
                const std::uint64_t lim = std::min(batch, r - k);
                for (std::uint64_t i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = (q * mp::abs(x - y)) % n;
                }
                g = gcd(q, n);
                k += lim;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one step at a time
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                g = gcd(mp::abs(x - ys), n);
            }
        }
        if (g != n)
            return g;
    }
}

void factor_into(const Int& m, std::map<Int, unsigned>& powers) {
    if (m == 1)
        return;
    if (is_prime(m)) {
        ++powers[m];
        return;
    }
    Int d = pollard_brent(m);
    factor_into(d, powers);
    factor_into(m / d, powers);
}

Int modular_inverse(const Int& a, const Int& m) {
    // extended Euclid; requires gcd(a, m) = 1, m >= 1
    Int old_r = a, r = m, old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1 && old_r != -1)
        throw std::invalid_argument("modular_inverse: arguments not coprime");
    if (old_r == -1)
        old_s = -old_s;
    return mod_floor(old_s, m);
}

} // namespace

Int Factorization::value() const {
    Int v = sign;
    for (const auto& [p, e] : factors)
        v *= mp::pow(p, e);
    return v;
}

Int gcd(const Int& m, const Int& n) {
    return mp::gcd(mp::abs(m), mp::abs(n));
}

Int mod_floor(const Int& x, const Int& m) {
    if (m < 1)
        throw std::invalid_argument("mod_floor: modulus must be positive");
    Int r = x % m;
    if (r < 0)
        r += m;
    return r;
}

Int mod_pow(const Int& base, const Int& exp, const Int& modulus) {
    if (modulus < 1)
        throw std::invalid_argument("mod_pow: modulus must be >= 1");
    if (exp < 0)
        throw std::invalid_argument("mod_pow: exponent must be nonnegative");
    if (modulus == 1)
        return 0;
    return mp::powm(mod_floor(base, modulus), exp, modulus);
}

bool is_prime(const Int& n) {
    if (n < 2)
        return false;
    for (int p : mr_bases) {
        if (n == p)
            return true;
        if (n % p == 0)
            return false;
    }
    Int d = n - 1;
    unsigned r = 0;
    while (d % 2 == 0) {
        d >>= 1;
        ++r;
    }
    for (int base : mr_bases)
        if (mr_composite(n, base, d, r))
            return false;
    static const Int deterministic_limit("3317044064679887385961981");
    if (n >= deterministic_limit)
        for (int base : mr_extra_bases)
            if (mr_composite(n, base, d, r))
                return false;
    return true;
}

Factorization factorize(const Int& n) {
    if (n == 0)
        throw std::invalid_argument("factorize: zero cannot be factored");
    Factorization out;
    out.sign = n < 0 ? -1 : 1;
    Int m = mp::abs(n);
    std::map<Int, unsigned> powers;
    auto strip = [&](const Int& d) {
        while (m % d == 0) {
            m /= d;
            ++powers[d];
        }
    };
    strip(2);
    strip(3);
    for (Int d = 5; d <= trial_division_cutoff && d * d <= m; d += 6) {
        strip(d);
        strip(d + 2);
    }
    if (m > 1) {
        if (m <= Int(trial_division_cutoff) * trial_division_cutoff)
            ++powers[m]; // below the cutoff squared the cofactor is prime
        else
            factor_into(m, powers);
    }
    out.factors.assign(powers.begin(), powers.end());
    return out;
}

std::pair<Int, Int> squarefree_decompose(const Int& n) {
    if (n == 0)
        throw std::invalid_argument("squarefree_decompose: n must be nonzero");
    Factorization fac = factorize(n);
    Int s = 1, f = fac.sign;
    for (const auto& [p, e] : fac.factors) {
        if (e / 2 > 0)
            s *= mp::pow(p, e / 2);
        if (e % 2 == 1)
            f *= p;
    }
    return {s, f};
}

std::optional<Int> sqrt_mod_prime(const Int& a, const Int& p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("sqrt_mod_prime: p must be an odd prime");
    const Int a0 = mod_floor(a, p);
    if (a0 == 0)
        return Int(0);
    if (mod_pow(a0, (p - 1) / 2, p) != 1)
        return std::nullopt;

    Int root;
    if (p % 4 == 3) {
        root = mod_pow(a0, (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks
        Int q = p - 1;
        unsigned s = 0;
        while (q % 2 == 0) {
            q >>= 1;
            ++s;
        }
        Int z = 2;
        while (mod_pow(z, (p - 1) / 2, p) != p - 1)
            ++z;
        Int c = mod_pow(z, q, p);
        Int t = mod_pow(a0, q, p);
        root = mod_pow(a0, (q + 1) / 2, p);
        unsigned m = s;
        while (t != 1) {
            unsigned i = 0;
            Int tt = t;
            while (tt != 1) {
                tt = (tt * tt) % p;
                ++i;
            }
            Int b = c;
            for (unsigned j = 0; j + i + 1 < m; ++j)
                b = (b * b) % p;
            root = (root * b) % p;
            c = (b * b) % p;
            t = (t * c) % p;
            m = i;
        }
    }
    Int mirror = p - root;
    return root < mirror ? root : mirror;
}

Int crt_combine(const std::vector<Int>& residues, const std::vector<Int>& moduli) {
    if (residues.empty() || residues.size() != moduli.size())
        throw std::invalid_argument("crt_combine: need equal-length nonempty lists");
    for (const Int& m : moduli)
        if (m < 1)
            throw std::invalid_argument("crt_combine: moduli must be positive");
    for (std::size_t i = 0; i < moduli.size(); ++i)
        for (std::size_t j = i + 1; j < moduli.size(); ++j)
            if (gcd(moduli[i], moduli[j]) != 1)
                throw std::invalid_argument("crt_combine: moduli must be pairwise coprime");

    Int x = mod_floor(residues[0], moduli[0]);
    Int big = moduli[0];
    for (std::size_t i = 1; i < moduli.size(); ++i) {
        const Int& m = moduli[i];
        if (m == 1)
            continue;
        Int target = mod_floor(residues[i], m);
        Int inv = modular_inverse(mod_floor(big, m), m);
        Int t = mod_floor((target - x) * inv, m);
        x += big * t;
        big *= m;
    }
    return x;
}

Int isqrt_ceil(const Int& n) {
    if (n <= 0)
        return 0;
    Int r = mp::sqrt(n);
    if (r * r < n)
        ++r;
    return r;
}

bool fits_int64(const Int& x) {
    return x >= std::numeric_limits<std::int64_t>::min() &&
           x <= std::numeric_limits<std::int64_t>::max();
}

} // namespace ternary
