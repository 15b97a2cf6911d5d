/* Copyright 2026 The tropseq Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tropseq/index_sets.hpp"
#include "tropseq/plucker.hpp"
#include "tropseq/poly_oracle.hpp"
#include "tropseq/representation.hpp"
#include "tropseq/sweep.hpp"

using namespace tropseq;

namespace {

SparsePoly random_poly(std::mt19937_64& rng, int vars, int terms) {
    std::uniform_int_distribution<int> coef(-3, 3), expo(0, 2);
    SparsePoly p(vars);
    for (int a = 0; a < terms; ++a) {
        ExponentVector m(static_cast<std::size_t>(vars));
        for (auto& e : m) e = expo(rng);
        p.add_term(m, coef(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("sparse polynomial arithmetic") {
    const auto x = SparsePoly::variable(2, 0);
    const auto y = SparsePoly::variable(2, 1);
    const auto one = SparsePoly::constant(2, 1);
    const auto p = (x + y) * (x - y);
    CHECK(p == x * x - y * y);
    CHECK(exact_divide(p, x + y) == x - y);
    CHECK_THROWS_AS(exact_divide(x * x + one, x), std::domain_error);
    CHECK((x - x).is_zero());
    CHECK(p.to_string() == "-1*z2^2 +1*z1^2");
}

TEST_CASE("cofactor and Bareiss determinants agree") {
    std::mt19937_64 rng(99);
    for (int size = 1; size <= 4; ++size) {
        for (int trial = 0; trial < 15; ++trial) {
            PolyMatrix A(static_cast<std::size_t>(size));
            for (auto& row : A)
                for (int c = 0; c < size; ++c) row.push_back(random_poly(rng, 3, 2));
            CHECK(determinant_cofactor(A, 3) == determinant_bareiss(A, 3));
        }
    }
}

TEST_CASE("Table 1 minors") {
    const auto S = parse_steps(2, 4, "1.2;1.2");
    const PsiOrder order(S);
    CHECK(minor_polynomial(S, {1, 2}).to_string() == "+1");
    CHECK(lowest_term_valuation(minor_polynomial(S, {3, 4}), order) == ExponentVector{1, 0, 0, 1});
    CHECK(lowest_term_valuation(minor_polynomial(S, {2, 4}), S) == ExponentVector{1, 0, 0, 0});
    CHECK_THROWS_AS(lowest_term_valuation(SparsePoly(4), order), InputError);
}

TEST_CASE("representation tables equal minor coefficients") {
    for (int n = 4; n <= 5; ++n)
        for (const auto& S : enumerate_iterated_sequences(2, n)) CHECK(compare_with_oracle(S).ok());
    for (int n = 4; n <= 6; ++n)
        for (const auto& S : sample_iterated_sequences(3, n, 8, 17 + static_cast<std::uint64_t>(n)))
            CHECK(compare_with_oracle(S).ok());
}

TEST_CASE("Pluecker relations vanish on generic minors") {
    for (int k = 2; k <= 3; ++k) {
        for (const auto& S : sample_iterated_sequences(k, 6, 3, 8)) {
            const auto minors = minor_polynomials(S);
            const auto relations = plucker_relations(k, 6);
            CHECK(!relations.empty());
            for (const auto& R : relations)
                CHECK(evaluate_relation(R, minors, 6, SparsePoly(S.d())).is_zero());
        }
    }
}

TEST_CASE("valuation is additive on products") {
    std::mt19937_64 rng(7);
    for (const auto& S : sample_iterated_sequences(2, 6, 10, 3)) {
        const auto minors = minor_polynomials(S);
        const PsiOrder order(S);
        std::uniform_int_distribution<std::size_t> pick(0, minors.size() - 1);
        for (int trial = 0; trial < 10; ++trial) {
            const auto& f = minors[pick(rng)];
            const auto& g = minors[pick(rng)];
            auto sum = lowest_term_valuation(f, order);
            const auto vg = lowest_term_valuation(g, order);
            for (std::size_t t = 0; t < sum.size(); ++t) sum[t] += vg[t];
            CHECK(lowest_term_valuation(f * g, order) == sum);
        }
    }
}
