#pragma once

#include "ternary/hasse.hpp"
#include "ternary/solver.hpp"

#include <array>
#include <optional>
#include <vector>

namespace ternary {

/// Equivalent squarefree, pairwise-coprime form plus the variable
/// multipliers that pull its solutions back to the original form.
struct NormalizedForm {
    TernaryForm form;
    Transform transform;

    friend bool operator==(const NormalizedForm&, const NormalizedForm&) = default;
};

/// Legendre symbol of the target at one odd prime of a modulus.
struct PrimeCondition {
    Int prime;
    SymbolValue symbol;

    friend bool operator==(const PrimeCondition&, const PrimeCondition&) = default;
};

/// Quadratic-residue condition for one coefficient: target is -bc, -ca or
/// -ab and must be a residue modulo every odd prime of |modulus|. When the
/// condition holds, witness d satisfies d^2 = target (mod odd part).
struct ModulusCondition {
    Int modulus;
    Int target;
    std::vector<PrimeCondition> primes;
    std::optional<Int> witness;
    bool holds = false;

    friend bool operator==(const ModulusCondition&, const ModulusCondition&) = default;
};

struct ConditionBReport {
    ModulusCondition mod_a, mod_b, mod_c;
    bool holds = false;

    friend bool operator==(const ConditionBReport&, const ConditionBReport&) = default;
};

/// Full audit trail of one decision. The two routes (sign/residue
/// conditions vs per-place local analysis) are both recorded and must
/// agree; any witness solves the ORIGINAL input form.
struct DecisionReport {
    TernaryForm input;
    NormalizedForm normalized;
    std::array<int, 3> permutation; // arranged.coeff(i) = normalized.form.coeff(permutation[i])
    TernaryForm arranged;           // normalized with an even coefficient rotated into slot c
    bool condition_a = false;
    ConditionBReport condition_b;
    std::vector<LocalVerdict> local;
    bool solvable = false;
    std::optional<Solution> witness;

    friend bool operator==(const DecisionReport&, const DecisionReport&) = default;
};

/// Reduces (a,b,c) to an equivalent squarefree pairwise-coprime form:
/// square parts are absorbed into the other two variables' multipliers and
/// a prime shared by two coefficients migrates onto the third.
NormalizedForm normalize(const Int& a, const Int& b, const Int& c);

/// True iff the coefficients do not all share one sign.
bool condition_a(const TernaryForm& f);

/// -bc, -ca, -ab must be quadratic residues modulo a, b, c respectively.
/// Only odd primes constrain; moduli 1 and 2 are vacuous. Requires a
/// normalized form.
ConditionBReport condition_b(const TernaryForm& f);

/// All-odd obstruction class: a = b = c (mod 4) with common residue 1 or 3.
/// Requires a normalized all-odd form.
bool exception_class_odd(const TernaryForm& f);

/// One-even obstruction class: with the even coefficient 2c' rotated into
/// slot c, membership of (c' mod 4, a mod 8, b mod 8) in the obstruction
/// tables. Requires a normalized form with exactly one even coefficient.
bool exception_class_even(const TernaryForm& f);

/// Product of the Jacobi-symbol factorizations of the three residue
/// conditions, with signs canonicalized to a < 0, b < 0, c > 0 by negating
/// the equation and rotating the positive coefficient into slot c. Equals
/// +1 whenever the residue conditions hold. Requires a normalized form of
/// mixed signs.
SymbolValue condition_b_jacobi_product(const TernaryForm& f);

struct DecideOptions {
    bool search_witness = true;
    BoundScale bound_scale{};
    std::uint64_t witness_budget = default_witness_budget;
};

/// Full decision: normalize, evaluate both routes, check they agree, and
/// attach a verified witness (pulled back through the normalization) when
/// solvable and requested. Throws internal_error if the routes disagree.
DecisionReport decide(const Int& a, const Int& b, const Int& c,
                      const DecideOptions& opts = {});

} // namespace ternary
