#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace ternary {

// All public entry points take arbitrary-precision integers; hot search
// loops fast-path machine words internally.
using Int = boost::multiprecision::cpp_int;

/// Prime factorization of a nonzero integer: sign * prod(prime^exponent),
/// primes strictly increasing.
struct Factorization {
    int sign = 1; // -1 or +1
    std::vector<std::pair<Int, unsigned>> factors;

    /// Reconstructs the factored integer.
    Int value() const;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// gcd of |m| and |n|; gcd(0,0) = 0.
Int gcd(const Int& m, const Int& n);

/// Canonical representative of x modulo m in [0, m). Requires m >= 1.
Int mod_floor(const Int& x, const Int& m);

/// base^exp mod modulus. Requires modulus >= 1 and exp >= 0.
Int mod_pow(const Int& base, const Int& exp, const Int& modulus);

/// Deterministic Miller-Rabin for anything below 3.3e24; the same fixed
/// witness set (extended) is used beyond that, where it is heuristic.
bool is_prime(const Int& n);

/// Factors n != 0 by trial division up to 10^6 and Brent's rho for larger
/// cofactors. Output is deterministic for equal inputs.
Factorization factorize(const Int& n);

/// Writes n = s^2 * f with f squarefree and sign(f) = sign(n); returns (s, f).
std::pair<Int, Int> squarefree_decompose(const Int& n);

/// Smallest square root of a modulo an odd prime p, when one exists.
/// Uses the p = 3 (mod 4) shortcut, Tonelli-Shanks otherwise; ties break
/// to min(r, p-r). Returns nullopt for non-residues.
std::optional<Int> sqrt_mod_prime(const Int& a, const Int& p);

/// Unique r in [0, prod(moduli)) with r = residues[i] (mod moduli[i]).
/// Moduli must be positive and pairwise coprime; lists nonempty with
/// matching lengths.
Int crt_combine(const std::vector<Int>& residues, const std::vector<Int>& moduli);

/// Smallest s >= 0 with s*s >= n (0 for n <= 0).
Int isqrt_ceil(const Int& n);

/// True when x fits in a signed 64-bit word.
bool fits_int64(const Int& x);

} // namespace ternary
