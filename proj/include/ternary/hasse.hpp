#pragma once

#include "ternary/symbols.hpp"

#include <cstdint>
#include <vector>

namespace ternary {

/// Diagonal ternary form a*x^2 + b*y^2 + c*z^2 with nonzero coefficients.
struct TernaryForm {
    Int a, b, c;

    TernaryForm(Int a_, Int b_, Int c_); // rejects zero coefficients

    const Int& coeff(int i) const; // 0 -> a, 1 -> b, 2 -> c

    friend bool operator==(const TernaryForm&, const TernaryForm&) = default;
};

/// Coefficients squarefree and pairwise coprime.
bool is_normalized(const TernaryForm& f);
void require_normalized(const TernaryForm& f);

/// Local solvability verdict at one place: solvable iff the Hasse
/// invariant matches the reference symbol (-1,-1)_v.
struct LocalVerdict {
    Place place;
    SymbolValue hasse;
    SymbolValue reference;
    bool solvable;

    friend bool operator==(const LocalVerdict&, const LocalVerdict&) = default;
};

/// Hasse invariant S_v(f) = (a,-1)(b,-1)(c,-1)(a,b)(b,c)(c,a), all Hilbert
/// symbols at v.
SymbolValue hasse_invariant(const TernaryForm& f, const Place& v);

/// Verdict at a single place; at the real place this is equivalent to the
/// coefficients not sharing a sign.
LocalVerdict locally_solvable(const TernaryForm& f, const Place& v);

/// The places that can obstruct a normalized form: the real place, 2, and
/// every odd prime dividing abc. Sorted and deduplicated.
std::vector<Place> relevant_places(const TernaryForm& f);

/// One verdict per relevant place; the form is everywhere locally solvable
/// iff every verdict is.
std::vector<LocalVerdict> local_report(const TernaryForm& f);

inline constexpr std::uint64_t default_mod_search_budget = 100'000'000;

/// Exhaustive oracle: true iff a*x^2 + b*y^2 + c*z^2 = 0 (mod p^k) has a
/// solution with not all of x, y, z divisible by p. Enumerates (x, y)
/// pairs z-last against precomputed residue tables; refuses searches whose
/// candidate count exceeds the budget.
bool solvable_mod_prime_power(const TernaryForm& f, const Int& p, unsigned k,
                              std::uint64_t budget = default_mod_search_budget);

} // namespace ternary
