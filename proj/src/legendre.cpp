#include "ternary/legendre.hpp"

#include "ternary/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace mp = boost::multiprecision;

namespace ternary {
namespace {

// Obstruction classes (a mod 8, b mod 8) for one even coefficient 2c',
// keyed by c' mod 4.
constexpr std::pair<int, int> even_table_c1[] = {
    {1, 1}, {1, 3}, {3, 1}, {3, 7}, {5, 5}, {5, 7}, {7, 3}, {7, 5}};
constexpr std::pair<int, int> even_table_c3[] = {
    {1, 3}, {1, 5}, {3, 1}, {3, 3}, {5, 1}, {5, 7}, {7, 5}, {7, 7}};

int even_index(const TernaryForm& f) {
    for (int i = 0; i < 3; ++i)
        if (f.coeff(i) % 2 == 0)
            return i;
    return -1;
}

// Cyclic rotation moving index i into the last slot.
std::array<int, 3> rotation_to_last(int i) {
    switch (i) {
    case 0: return {1, 2, 0};
    case 1: return {2, 0, 1};
    default: return {0, 1, 2};
    }
}

TernaryForm apply_permutation(const TernaryForm& f, const std::array<int, 3>& perm) {
    return TernaryForm(f.coeff(perm[0]), f.coeff(perm[1]), f.coeff(perm[2]));
}

Int odd_part(Int x) {
    while (x % 2 == 0)
        x /= 2;
    return x;
}

ModulusCondition modulus_condition(const Int& modulus, const Int& target) {
    ModulusCondition out;
    out.modulus = modulus;
    out.target = target;
    out.holds = true;
    for (const auto& [p, e] : factorize(mp::abs(modulus)).factors) {
        if (p == 2)
            continue; // every residue is a square mod 2
        SymbolValue s = legendre_symbol(target, p);
        out.primes.push_back({p, s});
        if (s != SymbolValue::plus_one)
            out.holds = false;
    }
    if (out.holds) {
        std::vector<Int> roots, primes;
        for (const auto& pc : out.primes) {
            roots.push_back(*sqrt_mod_prime(target, pc.prime));
            primes.push_back(pc.prime);
        }
        out.witness = primes.empty() ? Int(0) : crt_combine(roots, primes);
    }
    return out;
}

} // namespace

NormalizedForm normalize(const Int& a, const Int& b, const Int& c) {
    TernaryForm input(a, b, c); // validates nonzero
    Int coeffs[3] = {a, b, c};
    Transform t;
    Int* mult[3] = {&t.mx, &t.my, &t.mz};

    for (bool changed = true; changed;) {
        changed = false;
        // absorb square parts; s^2 in one coefficient scales the other two variables
        for (int i = 0; i < 3; ++i) {
            auto [s, rest] = squarefree_decompose(coeffs[i]);
            if (s != 1) {
                coeffs[i] = rest;
                *mult[(i + 1) % 3] *= s;
                *mult[(i + 2) % 3] *= s;
                changed = true;
            }
        }
        // a prime shared by two coefficients migrates to the third
        for (int i = 0; i < 3; ++i) {
            int j = (i + 1) % 3, k = (i + 2) % 3;
            Int g = gcd(coeffs[i], coeffs[j]);
            if (g > 1) {
                Int p = factorize(g).factors.front().first;
                coeffs[i] /= p;
                coeffs[j] /= p;
                coeffs[k] *= p;
                *mult[k] *= p;
                changed = true;
            }
        }
    }
    return {TernaryForm(coeffs[0], coeffs[1], coeffs[2]), t};
}

bool condition_a(const TernaryForm& f) {
    bool pos = f.a > 0 || f.b > 0 || f.c > 0;
    bool neg = f.a < 0 || f.b < 0 || f.c < 0;
    return pos && neg;
}

ConditionBReport condition_b(const TernaryForm& f) {
    require_normalized(f);
    ConditionBReport r;
    r.mod_a = modulus_condition(f.a, -f.b * f.c);
    r.mod_b = modulus_condition(f.b, -f.c * f.a);
    r.mod_c = modulus_condition(f.c, -f.a * f.b);
    r.holds = r.mod_a.holds && r.mod_b.holds && r.mod_c.holds;
    return r;
}

bool exception_class_odd(const TernaryForm& f) {
    require_normalized(f);
    if (even_index(f) != -1)
        throw std::invalid_argument("exception_class_odd: coefficients must all be odd");
    Int ra = mod_floor(f.a, 4), rb = mod_floor(f.b, 4), rc = mod_floor(f.c, 4);
    return ra == rb && rb == rc;
}

bool exception_class_even(const TernaryForm& f) {
    require_normalized(f);
    int e = even_index(f);
    if (e == -1)
        throw std::invalid_argument(
            "exception_class_even: needs exactly one even coefficient");
    TernaryForm g = apply_permutation(f, rotation_to_last(e));
    // squarefree, so the even coefficient is 2c' with c' odd
    Int cp = g.c / 2;
    const int ka = mod_floor(g.a, 8).convert_to<int>();
    const int kb = mod_floor(g.b, 8).convert_to<int>();
    const auto& table = mod_floor(cp, 4) == 1 ? even_table_c1 : even_table_c3;
    return std::find(std::begin(table), std::end(table), std::pair{ka, kb}) !=
           std::end(table);
}

SymbolValue condition_b_jacobi_product(const TernaryForm& f) {
    require_normalized(f);
    Int v[3] = {f.a, f.b, f.c};
    int positives = (v[0] > 0) + (v[1] > 0) + (v[2] > 0);
    if (positives == 0 || positives == 3)
        throw std::domain_error(
            "condition_b_jacobi_product: coefficients must have mixed signs");
    if (positives == 2)
        for (Int& x : v)
            x = -x; // negating the equation leaves solutions unchanged
    int pos = v[0] > 0 ? 0 : v[1] > 0 ? 1 : 2;
    auto perm = rotation_to_last(pos);

    // canonical case a < 0, b < 0, c > 0: the three residue conditions read
    // (m2 m3 / m1), (m1 m3 / m2), (-m1 m2 / m3) with m1 = -a, m2 = -b, m3 = c,
    // each taken modulo the odd part of its modulus
    Int m1 = -v[perm[0]], m2 = -v[perm[1]], m3 = v[perm[2]];
    Int o1 = odd_part(m1), o2 = odd_part(m2), o3 = odd_part(m3);
    return jacobi_symbol(m2, o1) * jacobi_symbol(m3, o1) * jacobi_symbol(m1, o2) *
           jacobi_symbol(m3, o2) * jacobi_symbol(-1, o3) * jacobi_symbol(m1, o3) *
           jacobi_symbol(m2, o3);
}

DecisionReport decide(const Int& a, const Int& b, const Int& c,
                      const DecideOptions& opts) {
    TernaryForm input(a, b, c);
    NormalizedForm norm = normalize(a, b, c);

    // rotate an even coefficient into slot c for the report
    int e = even_index(norm.form);
    std::array<int, 3> perm = rotation_to_last(e == -1 ? 2 : e);
    TernaryForm arranged = apply_permutation(norm.form, perm);

    bool cond_a = condition_a(arranged);
    ConditionBReport cond_b = condition_b(arranged);
    std::vector<LocalVerdict> local = local_report(arranged);

    const bool theorem_route = cond_a && cond_b.holds;
    const bool local_route =
        std::all_of(local.begin(), local.end(),
                    [](const LocalVerdict& v) { return v.solvable; });
    if (theorem_route != local_route)
        throw internal_error("decide: sign/residue route and local route disagree on (" +
                             a.str() + "," + b.str() + "," + c.str() + ")");

    std::optional<Solution> witness;
    if (theorem_route && opts.search_witness) {
        if (auto w = find_witness(arranged, opts.bound_scale, opts.witness_budget)) {
            Solution in_norm{0, 0, 0};
            Int parts[3] = {w->x, w->y, w->z};
            Int unperm[3];
            for (int i = 0; i < 3; ++i)
                unperm[perm[i]] = parts[i];
            in_norm = {unperm[0], unperm[1], unperm[2]};
            Solution pulled = pull_back(norm.transform, in_norm);
            if (!verify_solution(input, pulled))
                throw internal_error("decide: witness fails verification against input");
            witness = pulled;
        }
    }

    return DecisionReport{std::move(input), std::move(norm),     perm,
                          std::move(arranged), cond_a,           std::move(cond_b),
                          std::move(local),    theorem_route,    std::move(witness)};
}

} // namespace ternary
