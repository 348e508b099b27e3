#include "ternary/symbols.hpp"

#include <stdexcept>
#include <utility>

namespace ternary {
namespace {

constexpr SymbolValue plus = SymbolValue::plus_one;
constexpr SymbolValue minus = SymbolValue::minus_one;

// (u,2)_2 for odd u: +1 iff u = 1,7 (mod 8).
SymbolValue unit_two_symbol(const Int& u) {
    Int r = mod_floor(u, 8);
    return (r == 1 || r == 7) ? plus : minus;
}

// (u,w)_2 for odd u,w: -1 iff u = w = 3 (mod 4).
SymbolValue odd_pair_symbol(const Int& u, const Int& w) {
    return (mod_floor(u, 4) == 3 && mod_floor(w, 4) == 3) ? minus : plus;
}

// Strips the p-part of x, keeping only the valuation's parity: square
// factors are absorbed since (m, n^2)_p = 1.
std::pair<bool, Int> valuation_parity(Int x, const Int& p) {
    unsigned v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return {(v & 1u) != 0, std::move(x)};
}

} // namespace

SymbolValue symbol_from_int(int v) {
    if (v < -1 || v > 1)
        throw std::invalid_argument("symbol_from_int: value must be -1, 0 or +1");
    return static_cast<SymbolValue>(v);
}

Place Place::real() { return Place(true, Int(0)); }

Place Place::finite(Int p) {
    if (!is_prime(p))
        throw std::invalid_argument("Place::finite: not a prime");
    return Place(false, std::move(p));
}

const Int& Place::prime() const {
    if (real_)
        throw std::logic_error("Place::prime: real place has no prime");
    return p_;
}

std::string Place::str() const {
    return real_ ? "real" : "p=" + p_.str();
}

bool operator==(const Place& lhs, const Place& rhs) {
    return lhs.real_ == rhs.real_ && lhs.p_ == rhs.p_;
}

bool operator<(const Place& lhs, const Place& rhs) {
    if (lhs.real_ != rhs.real_)
        return lhs.real_; // real place sorts first
    return lhs.p_ < rhs.p_;
}

SymbolValue legendre_symbol(const Int& m, const Int& p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("legendre_symbol: p must be an odd prime");
    // Euler's criterion: m^((p-1)/2) is 0, 1 or p-1 mod p
    Int r = mod_pow(m, (p - 1) / 2, p);
    if (r == 0)
        return SymbolValue::zero;
    return r == 1 ? plus : minus;
}

SymbolValue jacobi_symbol(const Int& a, const Int& n) {
    if (n < 1 || n % 2 == 0)
        throw std::invalid_argument("jacobi_symbol: n must be a positive odd integer");
    Int top = mod_floor(a, n);
    Int bottom = n;
    int sign = 1;
    while (top != 0) {
        while (top % 2 == 0) {
            top /= 2;
            Int r = bottom % 8;
            if (r == 3 || r == 5)
                sign = -sign;
        }
        std::swap(top, bottom);
        if (top % 4 == 3 && bottom % 4 == 3)
            sign = -sign; // reciprocity flip
        top %= bottom;
    }
    if (bottom != 1)
        return SymbolValue::zero;
    return sign == 1 ? plus : minus;
}

SymbolValue hilbert_symbol(const Int& m, const Int& n, const Place& v) {
    if (m == 0 || n == 0)
        throw std::invalid_argument("hilbert_symbol: arguments must be nonzero");
    if (v.is_real())
        return (m < 0 && n < 0) ? minus : plus;

    const Int& p = v.prime();
    auto [alpha, u] = valuation_parity(m, p);
    auto [beta, w] = valuation_parity(n, p);

    if (p == 2) {
        if (!alpha && !beta)
            return odd_pair_symbol(u, w);
        if (alpha && beta) {
            // (2u, 2w)_2 = (2u, -uw)_2, then split off the factor of 2
            Int uw = -u * w;
            return unit_two_symbol(uw) * odd_pair_symbol(u, uw);
        }
        return unit_two_symbol(alpha ? w : u) * odd_pair_symbol(u, w);
    }

    // odd p; units never make the Legendre symbol vanish here
    if (!alpha && !beta)
        return plus;
    if (alpha && beta)
        return legendre_symbol(-u * w, p); // (pu, pw)_p = (pu, -uw)_p
    return legendre_symbol(alpha ? w : u, p);
}

} // namespace ternary
