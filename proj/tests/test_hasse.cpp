#include "ternary/hasse.hpp"

#include "ternary/errors.hpp"

#include <doctest.h>

#include <random>

using namespace ternary;

TEST_CASE("TernaryForm rejects zero coefficients") {
    CHECK_THROWS_AS(TernaryForm(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(TernaryForm(1, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(TernaryForm(1, 1, 0), std::invalid_argument);
    TernaryForm f(1, 2, -3);
    CHECK(f.coeff(0) == 1);
    CHECK(f.coeff(1) == 2);
    CHECK(f.coeff(2) == -3);
}

TEST_CASE("is_normalized") {
    CHECK(is_normalized(TernaryForm(1, 1, -1)));
    CHECK(is_normalized(TernaryForm(2, 3, -5)));
    CHECK_FALSE(is_normalized(TernaryForm(4, 1, -1)));  // square part
    CHECK_FALSE(is_normalized(TernaryForm(2, 2, -3)));  // shared prime
    CHECK_FALSE(is_normalized(TernaryForm(6, 10, 15))); // pairwise shared primes
}

TEST_CASE("hasse_invariant examples") {
    CHECK(hasse_invariant(TernaryForm(1, 1, 1), Place::finite(3)) ==
          SymbolValue::plus_one);
    CHECK(hasse_invariant(TernaryForm(1, 1, 1), Place::finite(2)) ==
          SymbolValue::plus_one);
    CHECK(hasse_invariant(TernaryForm(3, 3, 3), Place::finite(2)) ==
          SymbolValue::plus_one);
    CHECK(hasse_invariant(TernaryForm(1, 1, -3), Place::finite(3)) ==
          SymbolValue::minus_one);
}

TEST_CASE("locally_solvable examples") {
    LocalVerdict at3 = locally_solvable(TernaryForm(1, 1, -3), Place::finite(3));
    CHECK_FALSE(at3.solvable);
    CHECK(at3.reference == SymbolValue::plus_one);
    CHECK(at3.hasse == SymbolValue::minus_one);

    CHECK(locally_solvable(TernaryForm(1, 1, -2), Place::finite(2)).solvable);
    CHECK_FALSE(locally_solvable(TernaryForm(1, 1, 1), Place::real()).solvable);
    CHECK(locally_solvable(TernaryForm(1, 1, -1), Place::real()).solvable);
}

TEST_CASE("real-place verdict is exactly the mixed-sign test") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        Int a = Int(rng() % 50) + 1, b = Int(rng() % 50) + 1, c = Int(rng() % 50) + 1;
        if (rng() & 1) a = -a;
        if (rng() & 1) b = -b;
        if (rng() & 1) c = -c;
        TernaryForm f(a, b, c);
        bool mixed = !((a > 0 && b > 0 && c > 0) || (a < 0 && b < 0 && c < 0));
        CHECK(locally_solvable(f, Place::real()).solvable == mixed);
    }
}

TEST_CASE("relevant_places") {
    auto places = relevant_places(TernaryForm(1, 1, -1));
    REQUIRE(places.size() == 2);
    CHECK(places[0] == Place::real());
    CHECK(places[1] == Place::finite(2));

    places = relevant_places(TernaryForm(1, 1, -3));
    REQUIRE(places.size() == 3);
    CHECK(places[2] == Place::finite(3));

    places = relevant_places(TernaryForm(2, 3, -5));
    REQUIRE(places.size() == 4);
    CHECK(places[1] == Place::finite(2));
    CHECK(places[2] == Place::finite(3));
    CHECK(places[3] == Place::finite(5));

    CHECK_THROWS_AS(relevant_places(TernaryForm(4, 1, -1)), std::invalid_argument);
    CHECK_THROWS_AS(relevant_places(TernaryForm(2, 2, -3)), std::invalid_argument);
}

TEST_CASE("local_report examples") {
    auto all_solvable = [](const std::vector<LocalVerdict>& vs) {
        for (const auto& v : vs)
            if (!v.solvable)
                return false;
        return true;
    };

    CHECK(all_solvable(local_report(TernaryForm(1, 1, -2))));
    CHECK(all_solvable(local_report(TernaryForm(2, 3, -5))));

    auto report = local_report(TernaryForm(1, 1, -3));
    CHECK_FALSE(all_solvable(report));
    for (const auto& v : report) {
        if (v.place == Place::finite(3))
            CHECK_FALSE(v.solvable);
        if (v.place == Place::finite(2))
            CHECK_FALSE(v.solvable);
        if (v.place == Place::real())
            CHECK(v.solvable);
    }
}

TEST_CASE("solvable_mod_prime_power examples") {
    CHECK(solvable_mod_prime_power(TernaryForm(1, 1, -1), 2, 6));
    CHECK_FALSE(solvable_mod_prime_power(TernaryForm(1, 1, -3), 3, 3));
    CHECK(solvable_mod_prime_power(TernaryForm(1, 1, 1), 5, 3));
    CHECK_THROWS_AS(solvable_mod_prime_power(TernaryForm(1, 1, 1), 4, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(solvable_mod_prime_power(TernaryForm(1, 1, 1), 5, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(solvable_mod_prime_power(TernaryForm(1, 1, 1), 101, 3),
                    budget_exceeded);
    // a custom budget admits moderately larger searches
    CHECK(solvable_mod_prime_power(TernaryForm(1, 1, -1), 101, 2, 200'000'000));
}

TEST_CASE("local verdicts match the exhaustive oracle up to 25") {
    // exhaustive where the oracle is cheap (p <= 13); places at 17, 19 and
    // 23 cost a ~10^8-pair scan each when unsolvable and are sampled
    std::vector<TernaryForm> triples;
    for (Int a = -25; a <= 25; ++a) {
        if (a == 0)
            continue;
        for (Int b = -25; b <= 25; ++b) {
            if (b == 0)
                continue;
            for (Int c = -25; c <= 25; ++c) {
                if (c == 0)
                    continue;
                TernaryForm f(a, b, c);
                if (is_normalized(f))
                    triples.push_back(f);
            }
        }
    }

    long mismatches = 0, checked = 0, expensive_checked = 0;
    std::mt19937_64 rng(61);
    for (const TernaryForm& f : triples) {
        for (const Place& v : relevant_places(f)) {
            if (v.is_real())
                continue;
            bool expensive = v.prime() > 13;
            if (expensive && rng() % 20 != 0)
                continue;
            unsigned k = v.prime() == 2 ? 6 : 3;
            bool verdict = locally_solvable(f, v).solvable;
            // p = 23 scans 23^6 + 3*23^3 candidates, past the default budget
            bool oracle = solvable_mod_prime_power(f, v.prime(), k, 200'000'000);
            if (verdict != oracle)
                ++mismatches;
            ++checked;
            if (expensive)
                ++expensive_checked;
        }
    }
    CHECK(mismatches == 0);
    CHECK(checked > 30'000);
    CHECK(expensive_checked > 100); // the sample reaches 17, 19 and 23
}

TEST_CASE("odd primes away from the coefficients never obstruct") {
    const TernaryForm forms[] = {TernaryForm(1, 1, -3), TernaryForm(2, 3, -5),
                                 TernaryForm(7, -11, 13), TernaryForm(-1, -1, 1)};
    for (const auto& f : forms)
        for (const Int& p : {Int(29), Int(31), Int(97)}) {
            if (f.a * f.b * f.c % p == 0)
                continue;
            LocalVerdict v = locally_solvable(f, Place::finite(p));
            CHECK(v.hasse == SymbolValue::plus_one);
            CHECK(v.reference == SymbolValue::plus_one);
            CHECK(v.solvable);
        }
}

TEST_CASE("hasse product over relevant places is trivial") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 200; ++trial) {
        Int a = Int(rng() % 30) + 1, b = Int(rng() % 30) + 1, c = Int(rng() % 30) + 1;
        if (rng() & 1) a = -a;
        if (rng() & 1) b = -b;
        if (rng() & 1) c = -c;
        TernaryForm f(a, b, c);
        if (!is_normalized(f))
            continue;
        SymbolValue prod = SymbolValue::plus_one;
        for (const Place& v : relevant_places(f))
            prod *= hasse_invariant(f, v);
        CHECK(prod == SymbolValue::plus_one);
    }
}
