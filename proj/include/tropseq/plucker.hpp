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
// Quadratic Pluecker relations and their initial forms with respect to weight
// vectors and weighting matrices.

#ifndef TROPSEQ_PLUCKER_HPP
#define TROPSEQ_PLUCKER_HPP

#include <string>
#include <vector>

#include "tropseq/exact.hpp"
#include "tropseq/index_sets.hpp"
#include "tropseq/representation.hpp"
#include "tropseq/sequence.hpp"

namespace tropseq {

/// coefficient * p_first * p_second with first <= second (lexicographic).
struct PluckerTerm {
    int coefficient = 0;
    IndexTuple first;
    IndexTuple second;

    friend bool operator==(const PluckerTerm&, const PluckerTerm&) = default;
};

/// R_{i,j} for i in I_{k-1,n}, j in I_{k+1,n}. For k = 2 the tag i = (r),
/// j = (s,u,v) gives p_rs p_uv - p_ru p_sv + p_rv p_su.
struct PluckerRelation {
    IndexTuple left;
    IndexTuple right;
    std::vector<PluckerTerm> terms;

    std::string tag() const;
    std::string to_string() const;
};

/// Surviving terms of one relation; parent_left/parent_right repeat the
/// relation's tag.
struct InitialForm {
    IndexTuple parent_left;
    IndexTuple parent_right;
    std::vector<PluckerTerm> terms;

    std::size_t size() const noexcept { return terms.size(); }
    std::string to_string() const;
};

/// For k = 2: the C(n,4) three-term relations in lexicographic order of
/// (r,s,u,v). Otherwise one relation per (i, j) with vanishing terms and
/// identically zero relations dropped.
std::vector<PluckerRelation> plucker_relations(int k, int n);

/// The three-term relation R_{r,s,u,v}, r < s < u < v.
PluckerRelation three_term_relation(int r, int s, int u, int v);

/// R_{i,j} = sum_s (-1)^{(s-1) + l(i, j_s)} p_{i u j_s} p_{j \ j_s}, like terms
/// combined. May come out empty.
PluckerRelation plucker_relation(const IndexTuple& left, const IndexTuple& right);

/// Evaluates a relation on polynomial Pluecker coordinates given in
/// plucker_indices order (used to check that relations vanish on minors).
template <class Poly>
Poly evaluate_relation(const PluckerRelation& R, const std::vector<Poly>& coordinates, int n, Poly zero);

/// Terms minimising w(first) + w(second); w is indexed like plucker_indices.
InitialForm initial_form_weight(const std::vector<Rational>& w, const PluckerRelation& R, int n);
InitialForm initial_form_weight(const std::vector<int>& w, const PluckerRelation& R, int n);

/// Terms whose valuation vector M(first) + M(second) is Psi-minimal.
InitialForm initial_form_matrix(const WeightingMatrix& M, const PluckerRelation& R,
                                const IteratedSequence& seq);

struct InitialFormCounts {
    std::size_t monomial = 0;
    std::size_t binomial = 0;
    std::size_t trinomial = 0;
    /// Forms with more than three surviving terms (general k only).
    std::size_t larger = 0;
};

InitialFormCounts classify_initial_forms(const std::vector<InitialForm>& forms);

/// True iff the form has two terms with coefficients of opposite sign.
bool is_signed_binomial(const InitialForm& form);

/// Both forms keep the same set of index pairs (signs included).
bool same_terms(const InitialForm& a, const InitialForm& b);

struct PropositionCheck {
    PluckerRelation relation;
    InitialForm init_matrix;
    InitialForm init_tree;
    bool agree = false;
};

struct PropositionReport {
    IteratedSequence sequence;
    std::vector<PropositionCheck> checks;

    bool all_agree() const;
    std::size_t agreements() const;
};

/// Compares init_{M_S}(R) with init_{w_T}(R), T = tree_from_sequence(S), for
/// every three-term relation. Requires k = 2.
PropositionReport verify_proposition(const IteratedSequence& seq);

/// JSON array of {relation, init_matrix, init_tree, agree}.
std::string proposition_report_json(const PropositionReport& report);

// ---------------------------------------------------------------------------

template <class Poly>
Poly evaluate_relation(const PluckerRelation& R, const std::vector<Poly>& coordinates, int n, Poly zero) {
    Poly total = zero;
    for (const auto& term : R.terms) {
        Poly product = coordinates.at(index_position(term.first, n)) *
                       coordinates.at(index_position(term.second, n));
        for (int c = 0; c < (term.coefficient < 0 ? -term.coefficient : term.coefficient); ++c) {
            if (term.coefficient > 0) total = total + product;
            else total = total - product;
        }
    }
    return total;
}

}  // namespace tropseq

#endif  // TROPSEQ_PLUCKER_HPP
