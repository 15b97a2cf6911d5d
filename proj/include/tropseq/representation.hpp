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
// Action of lowering operators f_{i,j} on the fundamental representation
// Lambda^k C^n and the valuation of Pluecker coordinates it induces.

#ifndef TROPSEQ_REPRESENTATION_HPP
#define TROPSEQ_REPRESENTATION_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include "tropseq/exact.hpp"
#include "tropseq/sequence.hpp"

namespace tropseq {

/// Finite integer combination of basis wedges e_{j_1} ^ ... ^ e_{j_k}, keyed
/// by strictly increasing index tuples. Zero coefficients are never stored.
class WedgeVector {
public:
    using Terms = std::map<IndexTuple, Integer>;

    WedgeVector() = default;

    /// e_{J}; J must be strictly increasing.
    static WedgeVector basis(const IndexTuple& J, const Integer& coefficient = 1);
    /// e_1 ^ ... ^ e_k.
    static WedgeVector highest_weight(int k);

    /// Adds coefficient * e_J for a sorted J, dropping the entry if it cancels.
    void add(const IndexTuple& J, const Integer& coefficient);

    Integer coefficient(const IndexTuple& J) const;
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    std::string to_string() const;

    friend bool operator==(const WedgeVector&, const WedgeVector&) = default;

private:
    Terms terms_;
};

/// Leibniz action f(a ^ b ^ ...) = f(a) ^ b ^ ... + a ^ f(b) ^ ... + ..., with
/// f_{i,j} e_i = e_j and f_{i,j} e_l = 0 otherwise. Results are re-sorted with
/// the sign of the sorting permutation.
WedgeVector apply_root_operator(const PositiveRoot& root, const WedgeVector& w);

/// f_{beta_1}^{m_1} ... f_{beta_d}^{m_d} (e_1 ^ ... ^ e_k), rightmost factor
/// first. Exponents >= 2 are applied repeatedly (and annihilate).
WedgeVector apply_monomial(std::span<const int> m, const IteratedSequence& seq);

/// Every m in {0,1}^d with f^m(e_1 ^ ... ^ e_k) != 0, mapped to that vector.
/// Computed by a depth-first walk from beta_d back to beta_1 that prunes as
/// soon as a partial product vanishes.
std::map<ExponentVector, WedgeVector> lowering_expansion(const IteratedSequence& seq);

/// m -> coefficient of e_J in f^m(e_1 ^ ... ^ e_k), nonzero entries only.
using CoefficientTable = std::map<ExponentVector, Integer>;

CoefficientTable coefficient_table(const IteratedSequence& seq, const IndexTuple& J);
/// Tables for every J in plucker_indices(k, n), in lexicographic order.
std::vector<CoefficientTable> coefficient_tables(const IteratedSequence& seq);

/// sum_t m_t beta_t as a vector in Z^n (0-based coordinates).
std::vector<int> root_weight(std::span<const int> m, const IteratedSequence& seq);
/// (eps_1 + ... + eps_k) - sum_{j in J} eps_j.
std::vector<int> lowering_weight(const IndexTuple& J, int k, int n);

/// The Psi-minimal m whose monomial reaches e_J with nonzero coefficient.
/// Throws std::domain_error when no such m exists.
ExponentVector valuation_plucker(const IteratedSequence& seq, const IndexTuple& J);

/// Columns are valuation images of the Pluecker coordinates, in lexicographic
/// order of the index tuples; rows are sequence positions.
struct WeightingMatrix {
    int k = 0;
    int n = 0;
    int d = 0;
    std::vector<IndexTuple> labels;
    std::vector<ExponentVector> columns;

    int entry(int row, int col) const {
        return columns.at(static_cast<std::size_t>(col)).at(static_cast<std::size_t>(row));
    }
    const ExponentVector& column(const IndexTuple& J) const;
    std::vector<std::vector<int>> rows() const;
};

WeightingMatrix weighting_matrix(const IteratedSequence& seq);

}  // namespace tropseq

#endif  // TROPSEQ_REPRESENTATION_HPP
