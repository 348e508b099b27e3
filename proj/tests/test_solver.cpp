#include "ternary/solver.hpp"

#include "ternary/errors.hpp"
#include "ternary/legendre.hpp"

#include <doctest.h>

#include <random>

using namespace ternary;

TEST_CASE("find_witness examples") {
    CHECK(find_witness(TernaryForm(1, 1, -2)) == Solution{1, 1, 1});
    CHECK_FALSE(find_witness(TernaryForm(1, 1, -3)).has_value());
    CHECK(find_witness(TernaryForm(2, 3, -5)) == Solution{1, 1, 1});
    CHECK(find_witness(TernaryForm(1, 1, -1)) == Solution{1, 0, 1});
    CHECK_THROWS_AS(find_witness(TernaryForm(4, 1, -1)), std::invalid_argument);
}

TEST_CASE("find_witness bound scale") {
    // shrinking the box below the solution makes the honest answer 'absent'
    CHECK_FALSE(find_witness(TernaryForm(1, 1, -2), BoundScale{1, 3}).has_value());
    CHECK(find_witness(TernaryForm(1, 1, -2), BoundScale{3, 1}) == Solution{1, 1, 1});
    CHECK_THROWS_AS(find_witness(TernaryForm(1, 1, -2), BoundScale{0, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(find_witness(TernaryForm(1, 1, -2), BoundScale{1, -2}),
                    std::invalid_argument);
}

TEST_CASE("find_witness budget") {
    CHECK_THROWS_AS(find_witness(TernaryForm(Int("99999989"), 1, Int("-99999971"))),
                    budget_exceeded);
    // tiny explicit budget trips on desk-scale inputs too
    CHECK_THROWS_AS(find_witness(TernaryForm(2, 3, -5), BoundScale{}, 10),
                    budget_exceeded);
}

TEST_CASE("verify_solution") {
    CHECK(verify_solution(TernaryForm(1, 1, -2), Solution{1, 1, 1}));
    CHECK_FALSE(verify_solution(TernaryForm(1, 1, -2), Solution{0, 0, 0}));
    CHECK(verify_solution(TernaryForm(1, 1, -1), Solution{3, 4, 5}));
    CHECK_FALSE(verify_solution(TernaryForm(1, 1, -1), Solution{1, 1, 1}));
    CHECK(verify_solution(TernaryForm(1, 1, -1), Solution{-3, 4, -5}));
}

TEST_CASE("pull_back") {
    CHECK(pull_back(Transform{1, 1, 1}, Solution{1, 1, 1}) == Solution{1, 1, 1});
    CHECK(pull_back(Transform{1, 2, 2}, Solution{1, 0, 1}) == Solution{1, 0, 2});
    CHECK(pull_back(Transform{2, 2, 2}, Solution{1, 1, 1}) == Solution{1, 1, 1});
}

TEST_CASE("normalize + find_witness + pull_back verifies on the original") {
    const Int inputs[][3] = {
        {4, 1, -1}, {2, 2, -1}, {8, 1, -1}, {12, 15, -7}, {9, 2, -2}, {50, 3, -2}};
    for (const auto& in : inputs) {
        NormalizedForm norm = normalize(in[0], in[1], in[2]);
        REQUIRE(is_normalized(norm.form));
        auto w = find_witness(norm.form);
        REQUIRE(w.has_value());
        Solution pulled = pull_back(norm.transform, *w);
        CHECK(verify_solution(TernaryForm(in[0], in[1], in[2]), pulled));
        CHECK(gcd(gcd(pulled.x, pulled.y), pulled.z) == 1);
    }
}

TEST_CASE("witnesses are sound and primitive") {
    std::vector<Int> values;
    for (Int v = 1; v <= 10; ++v)
        if (squarefree_decompose(v).first == 1) {
            values.push_back(v);
            values.push_back(-v);
        }
    int found = 0;
    for (const Int& a : values)
        for (const Int& b : values) {
            if (gcd(a, b) != 1)
                continue;
            for (const Int& c : values) {
                if (gcd(a, c) != 1 || gcd(b, c) != 1)
                    continue;
                auto w = find_witness(TernaryForm(a, b, c));
                if (!w)
                    continue;
                ++found;
                CHECK(verify_solution(TernaryForm(a, b, c), *w));
                CHECK(gcd(gcd(w->x, w->y), w->z) == 1);
                CHECK(w->x >= 0);
                CHECK(w->y >= 0);
                CHECK(w->z >= 0);
            }
        }
    CHECK(found > 100); // the sweep must actually exercise the solvable path
}
