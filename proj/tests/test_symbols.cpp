#include "ternary/symbols.hpp"

#include "ternary/hasse.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

using namespace ternary;

namespace {

std::vector<Int> primes_below(int bound) {
    std::vector<Int> out;
    for (int n = 2; n < bound; ++n)
        if (is_prime(n))
            out.push_back(n);
    return out;
}

} // namespace

TEST_CASE("symbol type") {
    CHECK(to_int(SymbolValue::plus_one * SymbolValue::minus_one) == -1);
    CHECK(to_int(SymbolValue::minus_one * SymbolValue::minus_one) == 1);
    CHECK(to_int(SymbolValue::zero * SymbolValue::minus_one) == 0);
    CHECK(symbol_from_int(-1) == SymbolValue::minus_one);
    CHECK_THROWS_AS(symbol_from_int(2), std::invalid_argument);
}

TEST_CASE("places") {
    Place r = Place::real();
    Place p2 = Place::finite(2);
    Place p3 = Place::finite(3);
    CHECK(r.is_real());
    CHECK(p2.is_finite());
    CHECK(p2.prime() == 2);
    CHECK(r < p2);
    CHECK(p2 < p3);
    CHECK(r == Place::real());
    CHECK_FALSE(p2 == p3);
    CHECK(r.str() == "real");
    CHECK(p3.str() == "p=3");
    CHECK_THROWS_AS(Place::finite(4), std::invalid_argument);
    CHECK_THROWS_AS(Place::finite(1), std::invalid_argument);
    CHECK_THROWS_AS(Place::real().prime(), std::logic_error);
}

TEST_CASE("legendre_symbol") {
    CHECK(legendre_symbol(14, 7) == SymbolValue::zero);
    CHECK(legendre_symbol(2, 7) == SymbolValue::plus_one);
    CHECK(legendre_symbol(2, 3) == SymbolValue::minus_one);
    CHECK(legendre_symbol(-1, 5) == SymbolValue::plus_one);
    CHECK_THROWS_AS(legendre_symbol(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(legendre_symbol(1, 15), std::invalid_argument);
}

TEST_CASE("jacobi_symbol examples") {
    CHECK(jacobi_symbol(5, 1) == SymbolValue::plus_one);
    CHECK(jacobi_symbol(2, 15) == SymbolValue::plus_one);
    CHECK(jacobi_symbol(-1, 7) == SymbolValue::minus_one);
    CHECK(jacobi_symbol(0, 1) == SymbolValue::plus_one);
    CHECK(jacobi_symbol(0, 9) == SymbolValue::zero);
    CHECK(jacobi_symbol(3, 9) == SymbolValue::zero);
    CHECK_THROWS_AS(jacobi_symbol(1, 4), std::invalid_argument);
    CHECK_THROWS_AS(jacobi_symbol(1, -3), std::invalid_argument);
    CHECK_THROWS_AS(jacobi_symbol(1, 0), std::invalid_argument);
}

TEST_CASE("jacobi agrees with legendre at odd primes") {
    int mismatches = 0;
    for (const Int& p : primes_below(2000)) {
        if (p == 2)
            continue;
        for (Int a = -1999; a < 2000; ++a)
            if (jacobi_symbol(a, p) != legendre_symbol(a, p))
                ++mismatches;
    }
    CHECK(mismatches == 0);
}

TEST_CASE("jacobi matches the definitional Legendre product") {
    // acceptance sweeps the full range; this keeps a fast slice in the unit suite
    int mismatches = 0;
    for (Int n = 1; n <= 301; n += 2) {
        Factorization fac = factorize(n);
        for (Int a = -60; a <= 60; ++a) {
            SymbolValue expect = SymbolValue::plus_one;
            for (const auto& [p, e] : fac.factors)
                for (unsigned i = 0; i < e; ++i)
                    expect *= legendre_symbol(a, p);
            if (jacobi_symbol(a, n) != expect)
                ++mismatches;
        }
    }
    CHECK(mismatches == 0);
}

TEST_CASE("hilbert_symbol examples") {
    CHECK(hilbert_symbol(5, 9, Place::finite(7)) == SymbolValue::plus_one);
    CHECK(hilbert_symbol(3, 3, Place::finite(2)) == SymbolValue::minus_one);
    CHECK(hilbert_symbol(3, 2, Place::finite(2)) == SymbolValue::minus_one);
    CHECK(hilbert_symbol(2, 5, Place::finite(5)) == SymbolValue::minus_one);
    CHECK(hilbert_symbol(-1, -1, Place::real()) == SymbolValue::minus_one);
    CHECK(hilbert_symbol(-1, 7, Place::real()) == SymbolValue::plus_one);
    CHECK_THROWS_AS(hilbert_symbol(0, 3, Place::real()), std::invalid_argument);
    CHECK_THROWS_AS(hilbert_symbol(3, 0, Place::finite(2)), std::invalid_argument);
}

TEST_CASE("hilbert symmetry, square absorption, bilinearity") {
    std::mt19937_64 rng(23);
    auto draw = [&](int bound) {
        Int v = Int(rng() % bound) + 1;
        return (rng() & 1) ? v : -v;
    };
    const Place places[] = {Place::real(), Place::finite(2), Place::finite(3),
                            Place::finite(5), Place::finite(7)};
    for (int trial = 0; trial < 400; ++trial) {
        Int k = draw(500), m = draw(500), n = draw(500);
        const Place& v = places[rng() % 5];
        CHECK(hilbert_symbol(m, n, v) == hilbert_symbol(n, m, v));
        Int sq = draw(12);
        CHECK(hilbert_symbol(m, n * sq * sq, v) == hilbert_symbol(m, n, v));
        CHECK(hilbert_symbol(k, m * n, v) ==
              hilbert_symbol(k, m, v) * hilbert_symbol(k, n, v));
        CHECK(hilbert_symbol(m, m, v) == hilbert_symbol(m, -1, v));
    }
}

namespace {

// A modulus of p^3 (p^6 for p = 2) separates the symbol from its oracle for
// squarefree arguments; square parts of the valuations need extra depth
// before a spurious residue solution stops lifting.
unsigned oracle_depth(const Int& m, const Int& n, const Int& p) {
    auto half_valuation = [&p](Int x) {
        unsigned v = 0;
        x = x < 0 ? -x : x;
        while (x % p == 0) {
            x /= p;
            ++v;
        }
        return v / 2;
    };
    unsigned base = p == 2 ? 6 : 3;
    return base + 2 * std::max(half_valuation(m), half_valuation(n));
}

} // namespace

TEST_CASE("hilbert matches the mod-p^k solvability oracle (small slice)") {
    // full |m|,|n| <= 30 with p up to 13 runs in the acceptance suite
    int mismatches = 0;
    for (const Int& p : {Int(2), Int(3), Int(5), Int(7)}) {
        Place v = Place::finite(p);
        for (Int m = -20; m <= 20; ++m) {
            if (m == 0)
                continue;
            for (Int n = -20; n <= 20; ++n) {
                if (n == 0)
                    continue;
                bool symbol = hilbert_symbol(m, n, v) == SymbolValue::plus_one;
                bool oracle = solvable_mod_prime_power(TernaryForm(m, n, -1), p,
                                                       oracle_depth(m, n, p));
                if (symbol != oracle)
                    ++mismatches;
            }
        }
    }
    CHECK(mismatches == 0);
}

TEST_CASE("hilbert product formula over all places") {
    std::mt19937_64 rng(29);
    int failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        Int m = Int(rng() % 10'000) + 1;
        Int n = Int(rng() % 10'000) + 1;
        if (rng() & 1)
            m = -m;
        if (rng() & 1)
            n = -n;
        SymbolValue prod = hilbert_symbol(m, n, Place::real());
        prod *= hilbert_symbol(m, n, Place::finite(2));
        for (const auto& [p, e] : factorize(m * n).factors)
            if (p != 2)
                prod *= hilbert_symbol(m, n, Place::finite(p));
        if (prod != SymbolValue::plus_one)
            ++failures;
    }
    CHECK(failures == 0);
}
