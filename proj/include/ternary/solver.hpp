#pragma once

#include "ternary/hasse.hpp"

#include <cstdint>
#include <optional>

namespace ternary {

/// Nonzero primitive integer solution of a ternary form.
struct Solution {
    Int x, y, z;

    friend bool operator==(const Solution&, const Solution&) = default;
};

/// Per-variable multipliers mapping a solution of a normalized form back to
/// a solution of the form it was derived from (after gcd reduction).
struct Transform {
    Int mx = 1, my = 1, mz = 1;

    friend bool operator==(const Transform&, const Transform&) = default;
};

/// Positive rational scale applied to the witness search box.
struct BoundScale {
    Int num = 1;
    Int den = 1;

    friend bool operator==(const BoundScale&, const BoundScale&) = default;
};

inline constexpr std::uint64_t default_witness_budget = 1'000'000'000;

/// Exhaustive witness search over |x| <= ceil(sqrt|bc|)*s, |y| <=
/// ceil(sqrt|ca|)*s, |z| <= ceil(sqrt|ab|)*s for a normalized form.
/// Returns the first primitive solution in lexicographic (|z|,|y|,|x|,signs)
/// order, or nullopt when the box holds none. Refuses boxes larger than the
/// iteration budget.
std::optional<Solution> find_witness(const TernaryForm& f,
                                     const BoundScale& scale = {},
                                     std::uint64_t budget = default_witness_budget);

/// True iff s is nonzero and evaluates the form to exactly zero.
bool verify_solution(const TernaryForm& f, const Solution& s);

/// Applies the transform and divides out the gcd.
Solution pull_back(const Transform& t, const Solution& s);

} // namespace ternary
