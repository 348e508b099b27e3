#pragma once

#include "ternary/arith.hpp"

#include <string>

namespace ternary {

/// Shared codomain of the Legendre, Jacobi and Hilbert symbols. Hilbert
/// symbols never take the value zero; Legendre/Jacobi are zero exactly
/// when the arguments share a factor.
enum class SymbolValue : int {
    minus_one = -1,
    zero = 0,
    plus_one = 1,
};

constexpr SymbolValue operator*(SymbolValue a, SymbolValue b) {
    return static_cast<SymbolValue>(static_cast<int>(a) * static_cast<int>(b));
}

constexpr SymbolValue& operator*=(SymbolValue& a, SymbolValue b) {
    a = a * b;
    return a;
}

constexpr int to_int(SymbolValue s) { return static_cast<int>(s); }

/// Validating conversion from {-1, 0, +1}.
SymbolValue symbol_from_int(int v);

/// A place of Q: the real place or a finite place attached to a verified
/// prime. Ordered with the real place first, then primes ascending.
class Place {
public:
    static Place real();
    static Place finite(Int p); // rejects composites

    bool is_real() const { return real_; }
    bool is_finite() const { return !real_; }
    const Int& prime() const; // finite places only

    std::string str() const; // "real" or "p=<prime>"

    friend bool operator==(const Place& lhs, const Place& rhs);
    friend bool operator<(const Place& lhs, const Place& rhs);

private:
    Place(bool real, Int p) : real_(real), p_(std::move(p)) {}

    bool real_;
    Int p_;
};

/// Legendre symbol (m/p) for an odd prime p, via Euler's criterion.
SymbolValue legendre_symbol(const Int& m, const Int& p);

/// Jacobi symbol (a/n) for positive odd n, evaluated factorization-free
/// by the reciprocity reduction loop.
SymbolValue jacobi_symbol(const Int& a, const Int& n);

/// Hilbert symbol (m,n)_v for nonzero m, n: +1 iff m x^2 + n y^2 = 1 is
/// solvable over the completion at v. Never zero.
SymbolValue hilbert_symbol(const Int& m, const Int& n, const Place& v);

} // namespace ternary
