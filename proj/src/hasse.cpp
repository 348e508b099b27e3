#include "ternary/hasse.hpp"

#include "ternary/errors.hpp"
#include "ternary/kernels.hpp"

#include <stdexcept>
#include <utility>

namespace ternary {

TernaryForm::TernaryForm(Int a_, Int b_, Int c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    if (a == 0 || b == 0 || c == 0)
        throw std::invalid_argument("TernaryForm: coefficients must be nonzero");
}

const Int& TernaryForm::coeff(int i) const {
    switch (i) {
    case 0: return a;
    case 1: return b;
    default: return c;
    }
}

bool is_normalized(const TernaryForm& f) {
    if (gcd(f.a, f.b) != 1 || gcd(f.b, f.c) != 1 || gcd(f.c, f.a) != 1)
        return false;
    for (int i = 0; i < 3; ++i)
        if (squarefree_decompose(f.coeff(i)).first != 1)
            return false;
    return true;
}

void require_normalized(const TernaryForm& f) {
    if (!is_normalized(f))
        throw std::invalid_argument(
            "form must be squarefree with pairwise coprime coefficients");
}

SymbolValue hasse_invariant(const TernaryForm& f, const Place& v) {
    return hilbert_symbol(f.a, -1, v) * hilbert_symbol(f.b, -1, v) *
           hilbert_symbol(f.c, -1, v) * hilbert_symbol(f.a, f.b, v) *
           hilbert_symbol(f.b, f.c, v) * hilbert_symbol(f.c, f.a, v);
}

LocalVerdict locally_solvable(const TernaryForm& f, const Place& v) {
    SymbolValue s = hasse_invariant(f, v);
    SymbolValue ref = hilbert_symbol(-1, -1, v);
    return {v, s, ref, s == ref};
}

std::vector<Place> relevant_places(const TernaryForm& f) {
    require_normalized(f);
    std::vector<Place> places;
    places.push_back(Place::real());
    places.push_back(Place::finite(2));
    for (const auto& [p, e] : factorize(f.a * f.b * f.c).factors)
        if (p != 2)
            places.push_back(Place::finite(p));
    return places; // factor list is ascending, so already sorted
}

std::vector<LocalVerdict> local_report(const TernaryForm& f) {
    std::vector<LocalVerdict> verdicts;
    for (const Place& v : relevant_places(f))
        verdicts.push_back(locally_solvable(f, v));
    return verdicts;
}

bool solvable_mod_prime_power(const TernaryForm& f, const Int& p, unsigned k,
                              std::uint64_t budget) {
    if (!is_prime(p))
        throw std::invalid_argument("solvable_mod_prime_power: p must be prime");
    if (k < 1)
        throw std::invalid_argument("solvable_mod_prime_power: k must be >= 1");

    Int q = 1;
    for (unsigned i = 0; i < k; ++i)
        q *= p;

    // candidate count: q^2 (x,y) pairs plus the residue tables
    Int iterations = q * q + 3 * q;
    if (iterations > budget || q > (Int(1) << 26))
        throw budget_exceeded("solvable_mod_prime_power: search exceeds budget");

    const auto qq = q.convert_to<std::int64_t>();
    const auto pp = p.convert_to<std::int64_t>();
    const auto a = mod_floor(f.a, q).convert_to<std::int64_t>();
    const auto b = mod_floor(f.b, q).convert_to<std::int64_t>();
    const auto c = mod_floor(f.c, q).convert_to<std::int64_t>();

    if (qq >= 512)
        return kernels::mod_pk_search_parallel(a, b, c, pp, qq);
    return kernels::mod_pk_search_serial(a, b, c, pp, qq);
}

} // namespace ternary
