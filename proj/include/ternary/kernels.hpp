#pragma once

#include <array>
#include <cstdint>
#include <optional>

// Machine-word search kernels behind find_witness and
// solvable_mod_prime_power. Each kernel has a serial reference
// implementation and an OpenMP variant that must produce identical
// results; tests and the benchmark target compare the two.
namespace ternary::kernels {

struct WitnessBox {
    std::int64_t bx, by, bz; // inclusive bounds on |x|, |y|, |z|
};

using Triple = std::array<std::int64_t, 3>;

// First primitive (x,y,z) >= 0 with a x^2 + b y^2 + c z^2 = 0 in
// lexicographic (z, y, x) order, scanning the whole box. Caller guarantees
// every partial sum fits in int64.
std::optional<Triple> witness_search_serial(std::int64_t a, std::int64_t b,
                                            std::int64_t c, const WitnessBox& box);
std::optional<Triple> witness_search_parallel(std::int64_t a, std::int64_t b,
                                              std::int64_t c, const WitnessBox& box);

// True iff a x^2 + b y^2 + c z^2 = 0 (mod q) has a solution with not all
// of x, y, z divisible by p, for q = p^k. Enumerates (x,y) pairs with the
// z coordinate resolved through residue tables.
bool mod_pk_search_serial(std::int64_t a, std::int64_t b, std::int64_t c,
                          std::int64_t p, std::int64_t q);
bool mod_pk_search_parallel(std::int64_t a, std::int64_t b, std::int64_t c,
                            std::int64_t p, std::int64_t q);

} // namespace ternary::kernels
