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
// Positive roots of type A, iterated root sequences for Grassmannians and the
// height-weighted reverse lexicographic order on exponent vectors.

#ifndef TROPSEQ_SEQUENCE_HPP
#define TROPSEQ_SEQUENCE_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropseq {

/// Raised for malformed user input (bad sequences, trees, dimensions).
/// The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The root eps_i - eps_j with i < j (1-based). Its root operator f_{i,j}
/// sends e_i to e_j.
struct PositiveRoot {
    int i = 0;
    int j = 0;

    constexpr int height() const noexcept { return j - i; }
    friend constexpr bool operator==(const PositiveRoot&, const PositiveRoot&) = default;
};

inline constexpr int height(const PositiveRoot& root) noexcept { return root.height(); }

/// Exponent of the t-th listed root sits at coordinate t (0-based here).
using ExponentVector = std::vector<int>;

/// A step is the ordered tuple (i_1, ..., i_k) attached to one level l.
using Step = std::vector<int>;

/// Root sequence built level by level: for l = n down to k+1 the block
/// (eps_{i_1} - eps_l, ..., eps_{i_k} - eps_l). The level-(k+1) block is
/// restricted to a permutation of [k].
class IteratedSequence {
public:
    int k() const noexcept { return k_; }
    int n() const noexcept { return n_; }
    /// Number of roots, k(n-k).
    int d() const noexcept { return static_cast<int>(roots_.size()); }

    const std::vector<PositiveRoot>& roots() const noexcept { return roots_; }
    const PositiveRoot& root(int t) const { return roots_.at(static_cast<std::size_t>(t)); }

    /// Steps in level-descending order: steps()[0] belongs to level n.
    const std::vector<Step>& steps() const noexcept { return steps_; }
    const Step& step_at_level(int level) const;

    /// Position of the first root of the level-l block.
    int block_offset(int level) const { return (n_ - level) * k_; }

    /// Drops the level-n block: the iterated sequence for Gr(k, n-1).
    IteratedSequence truncated() const;

    /// `4.5;2.3;2.3;1.2`
    std::string steps_string() const;
    /// `k=2 n=6 steps=4.5;2.3;2.3;1.2`
    std::string to_string() const;

    friend bool operator==(const IteratedSequence&, const IteratedSequence&) = default;

private:
    friend IteratedSequence build_iterated_sequence(int k, int n, std::vector<Step> steps);
    IteratedSequence() = default;

    int k_ = 0;
    int n_ = 0;
    std::vector<Step> steps_;
    std::vector<PositiveRoot> roots_;
};

/// Validates the step data and lays out the roots. Throws InputError on a
/// repeated index, an index outside [l-1], a wrong step count or a base step
/// that is not a permutation of [k].
IteratedSequence build_iterated_sequence(int k, int n, std::vector<Step> steps);

/// Parses `4.5;2.3;2.3;1.2`. n is inferred as k + (number of steps) when
/// n <= 0.
IteratedSequence parse_steps(int k, int n, const std::string& steps);

/// Parses either the text form `k=2 n=6 steps=4.5;2.3;2.3;1.2` or the JSON form
/// {"k":2,"n":6,"steps":[[4,5],[2,3],[2,3],[1,2]]}.
IteratedSequence parse_sequence(const std::string& text);

std::string sequence_to_json(const IteratedSequence& seq);

/// Psi_S(m) = sum_t m_t * height(beta_t). Throws InputError on length mismatch.
std::int64_t psi_weight(std::span<const int> m, const IteratedSequence& seq);

/// Height-weighted reverse lexicographic order: a precedes b iff
/// Psi(a) < Psi(b), or the weights tie and a >_lex b.
std::strong_ordering psi_compare(std::span<const int> a, std::span<const int> b,
                                 const IteratedSequence& seq);

/// Comparator object caching the root heights of one sequence.
class PsiOrder {
public:
    explicit PsiOrder(const IteratedSequence& seq);
    explicit PsiOrder(std::vector<int> heights) : heights_(std::move(heights)) {}

    std::int64_t weight(std::span<const int> m) const;
    std::strong_ordering compare(std::span<const int> a, std::span<const int> b) const;
    bool operator()(std::span<const int> a, std::span<const int> b) const {
        return compare(a, b) == std::strong_ordering::less;
    }
    int dimension() const noexcept { return static_cast<int>(heights_.size()); }

private:
    std::vector<int> heights_;
};

// Enumeration (k = 2 only) ---------------------------------------------------

/// Number of iterated Gr(2,n) sequences with PBW base:
/// prod_{l=3}^{n} (l-1)(l-2).
std::uint64_t count_iterated_sequences(int n);

/// The sequence with the given mixed-radix index in enumeration order
/// (level-n step is the most significant digit).
IteratedSequence iterated_sequence_at(int n, std::uint64_t index);

void for_each_iterated_sequence(int n, const std::function<void(const IteratedSequence&)>& visit);
std::vector<IteratedSequence> enumerate_iterated_sequences(int k, int n);

/// Uniformly random iterated sequence for any k (base is a random permutation
/// of [k]).
IteratedSequence random_iterated_sequence(int k, int n, std::mt19937_64& rng);

/// Seeded uniform draws with replacement; deterministic for fixed
/// (k, n, sample, seed).
std::vector<IteratedSequence> sample_iterated_sequences(int k, int n, std::size_t sample,
                                                        std::uint64_t seed);

}  // namespace tropseq

#endif  // TROPSEQ_SEQUENCE_HPP
