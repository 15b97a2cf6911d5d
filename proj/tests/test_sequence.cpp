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
#include <set>

#include "tropseq/index_sets.hpp"
#include "tropseq/sequence.hpp"

using namespace tropseq;

TEST_CASE("roots of the Table 1 sequences") {
    const auto S = parse_steps(2, 4, "1.2;1.2");
    REQUIRE(S.d() == 4);
    CHECK(S.root(0) == PositiveRoot{1, 4});
    CHECK(S.root(1) == PositiveRoot{2, 4});
    CHECK(S.root(2) == PositiveRoot{1, 3});
    CHECK(S.root(3) == PositiveRoot{2, 3});
    CHECK(S.root(0).height() == 3);
    CHECK(S.steps_string() == "1.2;1.2");
    CHECK(S.to_string() == "k=2 n=4 steps=1.2;1.2");

    const auto Sp = parse_steps(2, 0, "3.2;1.2");
    CHECK(Sp.n() == 4);
    CHECK(Sp.root(0) == PositiveRoot{3, 4});
}

TEST_CASE("layout for k=3") {
    const auto S = parse_steps(3, 5, "4.1.2;3.1.2");
    CHECK(S.d() == 6);
    CHECK(S.block_offset(5) == 0);
    CHECK(S.block_offset(4) == 3);
    CHECK(S.step_at_level(4) == Step{3, 1, 2});
    CHECK(S.truncated().to_string() == "k=3 n=4 steps=3.1.2");
}

TEST_CASE("invalid sequences are rejected") {
    CHECK_THROWS_AS(parse_steps(2, 4, "1.1;1.2"), InputError);
    CHECK_THROWS_AS(parse_steps(2, 4, "4.2;1.2"), InputError);
    CHECK_THROWS_AS(parse_steps(2, 4, "1.2"), InputError);
    CHECK_THROWS_AS(parse_steps(2, 4, "1.2;1.3"), InputError);
    CHECK_THROWS_AS(parse_steps(2, 4, "1.x;1.2"), InputError);
    CHECK_THROWS_AS(parse_steps(2, 4, ""), InputError);
    CHECK_THROWS_AS(parse_steps(2, 4, "1.2.3;1.2"), InputError);
    CHECK_THROWS_AS(parse_sequence("{\"k\":2}"), InputError);
    CHECK_THROWS_AS(parse_sequence("k=2 bogus"), InputError);
}

TEST_CASE("text and JSON round trips") {
    const auto S = parse_steps(2, 6, "4.5;2.3;2.3;1.2");
    CHECK(parse_sequence(S.to_string()) == S);
    CHECK(parse_sequence(sequence_to_json(S)) == S);
    CHECK(sequence_to_json(S) == R"({"k":2,"n":6,"steps":[[4,5],[2,3],[2,3],[1,2]]})");
}

TEST_CASE("enumeration counts") {
    CHECK(count_iterated_sequences(3) == 2);
    CHECK(count_iterated_sequences(4) == 12);
    CHECK(count_iterated_sequences(5) == 144);
    CHECK(count_iterated_sequences(6) == 2880);
    CHECK(count_iterated_sequences(7) == 86400);
    for (int n = 3; n <= 6; ++n) {
        const auto all = enumerate_iterated_sequences(2, n);
        CHECK(all.size() == count_iterated_sequences(n));
        std::set<std::string> distinct;
        for (const auto& s : all) distinct.insert(s.steps_string());
        CHECK(distinct.size() == all.size());
    }
}

TEST_CASE("indexed access agrees with the odometer") {
    for (int n = 3; n <= 5; ++n) {
        std::set<std::string> by_index;
        for (std::uint64_t i = 0; i < count_iterated_sequences(n); ++i)
            by_index.insert(iterated_sequence_at(n, i).steps_string());
        std::set<std::string> walked;
        for_each_iterated_sequence(n, [&](const IteratedSequence& s) { walked.insert(s.steps_string()); });
        CHECK(by_index == walked);
    }
    CHECK_THROWS_AS(iterated_sequence_at(4, 12), InputError);
}

TEST_CASE("sampling is seeded") {
    const auto a = sample_iterated_sequences(3, 6, 20, 42);
    const auto b = sample_iterated_sequences(3, 6, 20, 42);
    CHECK(a == b);
    for (const auto& s : a) CHECK(s.d() == 9);
}

TEST_CASE("psi order on examples") {
    const auto S = parse_steps(2, 4, "1.2;1.2");
    const PsiOrder order(S);
    // heights 3, 2, 2, 1
    CHECK(order.weight(std::vector<int>{1, 0, 0, 1}) == 4);
    CHECK(order(std::vector<int>{0, 0, 0, 1}, std::vector<int>{0, 0, 1, 0}));
    // equal weight: lexicographically larger is smaller
    CHECK(order(std::vector<int>{0, 1, 0, 0}, std::vector<int>{0, 0, 1, 0}));
    CHECK(psi_compare(std::vector<int>{1, 0, 0, 0}, std::vector<int>{0, 1, 0, 1}, S) == std::strong_ordering::less);
    CHECK_THROWS_AS(order.weight(std::vector<int>{1, 0}), InputError);
}

TEST_CASE("psi order axioms on random vectors") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> entry(0, 2);
    const auto S = parse_steps(2, 6, "4.5;2.3;2.3;1.2");
    const PsiOrder order(S);
    auto draw = [&] {
        std::vector<int> v(static_cast<std::size_t>(S.d()));
        for (auto& x : v) x = entry(rng);
        return v;
    };
    for (int trial = 0; trial < 3000; ++trial) {
        const auto a = draw(), b = draw(), c = draw();
        const auto ab = order.compare(a, b);
        CHECK((ab == 0) == (a == b));
        CHECK(order.compare(b, a) == (0 <=> ab));
        if (order(a, b) && order(b, c)) CHECK(order(a, c));
        // Adding a common vector preserves the order.
        std::vector<int> ac(a), bc(b);
        for (std::size_t t = 0; t < a.size(); ++t) ac[t] += c[t], bc[t] += c[t];
        CHECK(order.compare(ac, bc) == ab);
    }
}

TEST_CASE("index sets") {
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(3, 5) == 0);
    const auto I = plucker_indices(2, 4);
    REQUIRE(I.size() == 6);
    CHECK(I.front() == IndexTuple{1, 2});
    CHECK(I[3] == IndexTuple{2, 3});
    for (int k = 1; k <= 4; ++k) {
        const auto all = plucker_indices(k, 7);
        for (std::size_t a = 0; a < all.size(); ++a) CHECK(index_position(all[a], 7) == a);
    }
    CHECK(index_label({3, 4}) == "3.4");
    CHECK(index_compact({3, 4}) == "34");
    CHECK_FALSE(is_strictly_increasing({2, 2}));
}
