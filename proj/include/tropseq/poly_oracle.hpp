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
// Independent route to the valuation: Pluecker coordinates as minors of the
// product of root subgroup elements (1 + z_t f_{beta_t}), expanded exactly.

#ifndef TROPSEQ_POLY_ORACLE_HPP
#define TROPSEQ_POLY_ORACLE_HPP

#include <map>
#include <string>
#include <vector>

#include "tropseq/exact.hpp"
#include "tropseq/sequence.hpp"

namespace tropseq {

/// Polynomial in z_1..z_d with integer coefficients. Exponent keys have
/// length d; zero coefficients are never stored.
class SparsePoly {
public:
    using Terms = std::map<ExponentVector, Integer>;

    explicit SparsePoly(int num_vars = 0) : num_vars_(num_vars) {}

    static SparsePoly constant(int num_vars, const Integer& c);
    /// z_{var+1} (var is 0-based).
    static SparsePoly variable(int num_vars, int var);

    int num_vars() const noexcept { return num_vars_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Integer coefficient(const ExponentVector& m) const;

    void add_term(const ExponentVector& m, const Integer& c);

    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
    SparsePoly operator-() const;

    /// Exact quotient a / b. Throws std::domain_error if b does not divide a.
    friend SparsePoly exact_divide(const SparsePoly& a, const SparsePoly& b);

    /// `+1*z1*z4 -1*z2*z3`, terms sorted ascending in the given order.
    std::string to_string(const PsiOrder& order) const;
    /// Same, sorted by exponent vector (lexicographic).
    std::string to_string() const;

    friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

private:
    int num_vars_;
    Terms terms_;
};

/// n x n matrix of polynomials, lower unitriangular when built from a sequence.
class GenericMatrix {
public:
    GenericMatrix(int n, int num_vars);

    int size() const noexcept { return n_; }
    /// 1-based row/column access.
    const SparsePoly& at(int row, int col) const;
    SparsePoly& at(int row, int col);

private:
    int n_;
    std::vector<SparsePoly> entries_;
};

/// prod_{t=1..d} (1 + z_t E_{j_t, i_t}) for beta_t = eps_{i_t} - eps_{j_t},
/// multiplied left to right in sequence order.
GenericMatrix generic_matrix(const IteratedSequence& seq);

using PolyMatrix = std::vector<std::vector<SparsePoly>>;

/// Laplace expansion along the first row.
SparsePoly determinant_cofactor(const PolyMatrix& A, int num_vars);
/// Fraction-free elimination over Z[z] with exact division by the previous pivot.
SparsePoly determinant_bareiss(PolyMatrix A, int num_vars);
/// Cofactor expansion up to size 4, Bareiss beyond.
SparsePoly determinant(const PolyMatrix& A, int num_vars);

/// k x k minor of generic_matrix(seq) on rows J and columns 1..k.
SparsePoly minor_polynomial(const GenericMatrix& G, const IndexTuple& J, int k);
SparsePoly minor_polynomial(const IteratedSequence& seq, const IndexTuple& J);
/// Minors for every J in plucker_indices(k, n), lexicographic order.
std::vector<SparsePoly> minor_polynomials(const IteratedSequence& seq);

/// Psi-minimal exponent in the support. Throws InputError on the zero polynomial.
ExponentVector lowest_term_valuation(const SparsePoly& p, const IteratedSequence& seq);
ExponentVector lowest_term_valuation(const SparsePoly& p, const PsiOrder& order);

}  // namespace tropseq

#endif  // TROPSEQ_POLY_ORACLE_HPP
