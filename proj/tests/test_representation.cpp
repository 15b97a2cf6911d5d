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

#include <optional>
#include <set>

#include "tropseq/index_sets.hpp"
#include "tropseq/linalg.hpp"
#include "tropseq/representation.hpp"

using namespace tropseq;

namespace {

// Every m in {0,1}^d, applied one at a time; the Psi-minimum is taken by hand.
std::optional<ExponentVector> brute_force_valuation(const IteratedSequence& seq, const IndexTuple& J) {
    const PsiOrder order(seq);
    std::optional<ExponentVector> best;
    const int d = seq.d();
    for (std::uint32_t bits = 0; bits < (1u << d); ++bits) {
        ExponentVector m(static_cast<std::size_t>(d));
        for (int t = 0; t < d; ++t) m[static_cast<std::size_t>(t)] = (bits >> t) & 1;
        if (apply_monomial(m, seq).coefficient(J) == 0) continue;
        if (!best || order(m, *best)) best = m;
    }
    return best;
}

}  // namespace

TEST_CASE("root operators on wedges") {
    const auto e12 = WedgeVector::highest_weight(2);
    CHECK(e12 == WedgeVector::basis({1, 2}));
    // f_{1,3}(e1 ^ e2) = e3 ^ e2 = -e2 ^ e3
    CHECK(apply_root_operator({1, 3}, e12) == WedgeVector::basis({2, 3}, -1));
    // f_{2,3}(e1 ^ e2) = e1 ^ e3
    CHECK(apply_root_operator({2, 3}, e12) == WedgeVector::basis({1, 3}));
    // f_{3,4} kills e1 ^ e2
    CHECK(apply_root_operator({3, 4}, e12).is_zero());
    // f_{1,2}(e1 ^ e2) = e2 ^ e2 = 0
    CHECK(apply_root_operator({1, 2}, e12).is_zero());
}

TEST_CASE("root operators are nilpotent of order two on fundamental wedges") {
    for (int k = 1; k <= 3; ++k) {
        for (const auto& J : plucker_indices(k, 5)) {
            const auto w = WedgeVector::basis(J);
            for (int i = 1; i <= 5; ++i)
                for (int j = i + 1; j <= 5; ++j)
                    CHECK(apply_root_operator({i, j}, apply_root_operator({i, j}, w)).is_zero());
        }
    }
}

TEST_CASE("Table 1: valuations for S") {
    const auto S = parse_steps(2, 4, "1.2;1.2");
    const auto M = weighting_matrix(S);
    CHECK(M.column({1, 2}) == ExponentVector{0, 0, 0, 0});
    CHECK(M.column({1, 3}) == ExponentVector{0, 0, 0, 1});
    CHECK(M.column({2, 3}) == ExponentVector{0, 0, 1, 0});
    CHECK(M.column({1, 4}) == ExponentVector{0, 1, 0, 0});
    CHECK(M.column({2, 4}) == ExponentVector{1, 0, 0, 0});
    CHECK(M.column({3, 4}) == ExponentVector{1, 0, 0, 1});
}

TEST_CASE("Table 1: valuations for S'") {
    const auto S = parse_steps(2, 4, "3.2;1.2");
    const auto M = weighting_matrix(S);
    CHECK(M.column({1, 2}) == ExponentVector{0, 0, 0, 0});
    CHECK(M.column({1, 3}) == ExponentVector{0, 0, 0, 1});
    CHECK(M.column({2, 3}) == ExponentVector{0, 0, 1, 0});
    CHECK(M.column({1, 4}) == ExponentVector{1, 0, 0, 1});
    CHECK(M.column({2, 4}) == ExponentVector{1, 0, 1, 0});
    CHECK(M.column({3, 4}) == ExponentVector{0, 1, 1, 0});
}

TEST_CASE("the pruned expansion matches the brute-force valuation") {
    for (int n = 4; n <= 5; ++n) {
        for (const auto& S : enumerate_iterated_sequences(2, n)) {
            for (const auto& J : plucker_indices(2, n)) {
                const auto expected = brute_force_valuation(S, J);
                REQUIRE(expected.has_value());
                CHECK(valuation_plucker(S, J) == *expected);
            }
        }
    }
    for (const auto& S : sample_iterated_sequences(3, 5, 10, 11))
        for (const auto& J : plucker_indices(3, 5)) CHECK(valuation_plucker(S, J) == *brute_force_valuation(S, J));
}

TEST_CASE("lowering expansion respects weights") {
    for (const auto& S : sample_iterated_sequences(2, 6, 20, 5)) {
        for (const auto& [m, w] : lowering_expansion(S)) {
            CHECK(w == apply_monomial(m, S));
            for (const auto& [J, c] : w.terms()) CHECK(root_weight(m, S) == lowering_weight(J, 2, 6));
        }
    }
}

TEST_CASE("valuations are 0/1, distinct and of full rank") {
    for (int n = 3; n <= 6; ++n) {
        for (const auto& S : enumerate_iterated_sequences(2, n)) {
            const auto M = weighting_matrix(S);
            std::set<ExponentVector> cols(M.columns.begin(), M.columns.end());
            CHECK(cols.size() == M.columns.size());
            for (const auto& c : M.columns)
                for (int x : c) CHECK((x == 0 || x == 1));
            CHECK(integer_rank(M.rows()) == 2 * (n - 2));
            CHECK(M.column({1, 2}) == ExponentVector(static_cast<std::size_t>(S.d()), 0));
        }
    }
}

TEST_CASE("integer rank") {
    CHECK(integer_rank(std::vector<std::vector<int>>{}) == 0);
    CHECK(integer_rank(std::vector<std::vector<int>>{{1, 2}, {2, 4}}) == 1);
    CHECK(integer_rank(std::vector<std::vector<int>>{{0, 1, 0}, {0, 0, 1}, {0, 1, 1}}) == 2);
    CHECK(integer_rank(std::vector<std::vector<int>>{{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}) == 3);
}
