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

#include "tropseq/poly_oracle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tropseq/index_sets.hpp"

namespace tropseq {

// SparsePoly ----------------------------------------------------------------

SparsePoly SparsePoly::constant(int num_vars, const Integer& c) {
    SparsePoly p(num_vars);
    p.add_term(ExponentVector(static_cast<std::size_t>(num_vars), 0), c);
    return p;
}

SparsePoly SparsePoly::variable(int num_vars, int var) {
    SparsePoly p(num_vars);
    ExponentVector m(static_cast<std::size_t>(num_vars), 0);
    m.at(static_cast<std::size_t>(var)) = 1;
    p.add_term(m, 1);
    return p;
}

Integer SparsePoly::coefficient(const ExponentVector& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

void SparsePoly::add_term(const ExponentVector& m, const Integer& c) {
    if (c == 0) return;
    if (m.size() != static_cast<std::size_t>(num_vars_)) throw InputError("monomial arity mismatch");
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly out(num_vars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    if (a.num_vars_ != b.num_vars_) throw InputError("polynomial arity mismatch");
    SparsePoly out(a.num_vars_);
    ExponentVector m(static_cast<std::size_t>(a.num_vars_));
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t v = 0; v < m.size(); ++v) m[v] = ma[v] + mb[v];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

SparsePoly exact_divide(const SparsePoly& a, const SparsePoly& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    // Leading terms in lexicographic order on exponent vectors.
    const auto& [lead_m, lead_c] = *b.terms_.rbegin();
    SparsePoly quotient(a.num_vars_);
    SparsePoly rem = a;
    ExponentVector shift(lead_m.size());
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.terms_.rbegin();
        for (std::size_t v = 0; v < shift.size(); ++v) {
            shift[v] = rm[v] - lead_m[v];
            if (shift[v] < 0) throw std::domain_error("polynomial division is not exact");
        }
        Integer qc;
        mpz_class r;
        mpz_fdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), rc.get_mpz_t(), lead_c.get_mpz_t());
        if (r != 0) throw std::domain_error("polynomial division is not exact");
        SparsePoly term(a.num_vars_);
        term.add_term(shift, qc);
        quotient.add_term(shift, qc);
        rem -= term * b;
    }
    return quotient;
}

namespace {

void print_terms(std::ostringstream& out, const std::vector<const SparsePoly::Terms::value_type*>& terms) {
    bool first = true;
    for (const auto* term : terms) {
        const auto& [m, c] = *term;
        if (!first) out << ' ';
        first = false;
        out << (c > 0 ? "+" : "") << c.get_str();
        for (std::size_t v = 0; v < m.size(); ++v) {
            if (m[v] == 0) continue;
            out << "*z" << (v + 1);
            if (m[v] > 1) out << '^' << m[v];
        }
    }
}

}  // namespace

std::string SparsePoly::to_string(const PsiOrder& order) const {
    if (terms_.empty()) return "0";
    std::vector<const Terms::value_type*> sorted;
    for (const auto& t : terms_) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(),
              [&](const auto* x, const auto* y) { return order(x->first, y->first); });
    std::ostringstream out;
    print_terms(out, sorted);
    return out.str();
}

std::string SparsePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const Terms::value_type*> sorted;
    for (const auto& t : terms_) sorted.push_back(&t);
    std::ostringstream out;
    print_terms(out, sorted);
    return out.str();
}

// GenericMatrix -------------------------------------------------------------

GenericMatrix::GenericMatrix(int n, int num_vars)
    : n_(n), entries_(static_cast<std::size_t>(n * n), SparsePoly(num_vars)) {
    for (int r = 1; r <= n; ++r) at(r, r) = SparsePoly::constant(num_vars, 1);
}

const SparsePoly& GenericMatrix::at(int row, int col) const {
    return entries_.at(static_cast<std::size_t>((row - 1) * n_ + (col - 1)));
}

SparsePoly& GenericMatrix::at(int row, int col) {
    return entries_.at(static_cast<std::size_t>((row - 1) * n_ + (col - 1)));
}

GenericMatrix generic_matrix(const IteratedSequence& seq) {
    const int n = seq.n();
    const int d = seq.d();
    GenericMatrix G(n, d);
    // Right multiplication by (1 + z_t E_{j,i}) adds z_t * (column j) to column i.
    for (int t = 0; t < d; ++t) {
        const auto& root = seq.root(t);
        const SparsePoly z = SparsePoly::variable(d, t);
        for (int r = 1; r <= n; ++r) {
            const SparsePoly& src = G.at(r, root.j);
            if (src.is_zero()) continue;
            G.at(r, root.i) += z * src;
        }
    }
    return G;
}

// Determinants --------------------------------------------------------------

SparsePoly determinant_cofactor(const PolyMatrix& A, int num_vars) {
    const std::size_t n = A.size();
    if (n == 0) return SparsePoly::constant(num_vars, 1);
    if (n == 1) return A[0][0];
    SparsePoly det(num_vars);
    for (std::size_t c = 0; c < n; ++c) {
        if (A[0][c].is_zero()) continue;
        PolyMatrix sub;
        sub.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<SparsePoly> row;
            row.reserve(n - 1);
            for (std::size_t cc = 0; cc < n; ++cc)
                if (cc != c) row.push_back(A[r][cc]);
            sub.push_back(std::move(row));
        }
        SparsePoly term = A[0][c] * determinant_cofactor(sub, num_vars);
        if (c % 2) det -= term;
        else det += term;
    }
    return det;
}

SparsePoly determinant_bareiss(PolyMatrix A, int num_vars) {
    const std::size_t n = A.size();
    if (n == 0) return SparsePoly::constant(num_vars, 1);
    SparsePoly prev = SparsePoly::constant(num_vars, 1);
    bool negate = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
        if (A[p][p].is_zero()) {
            std::size_t swap_row = p + 1;
            while (swap_row < n && A[swap_row][p].is_zero()) ++swap_row;
            if (swap_row == n) return SparsePoly(num_vars);
            std::swap(A[p], A[swap_row]);
            negate = !negate;
        }
        for (std::size_t r = p + 1; r < n; ++r) {
            for (std::size_t c = p + 1; c < n; ++c) {
                SparsePoly num = A[p][p] * A[r][c] - A[r][p] * A[p][c];
                A[r][c] = exact_divide(num, prev);
            }
            A[r][p] = SparsePoly(num_vars);
        }
        prev = A[p][p];
    }
    SparsePoly det = A[n - 1][n - 1];
    return negate ? -det : det;
}

SparsePoly determinant(const PolyMatrix& A, int num_vars) {
    return A.size() <= 4 ? determinant_cofactor(A, num_vars) : determinant_bareiss(A, num_vars);
}

SparsePoly minor_polynomial(const GenericMatrix& G, const IndexTuple& J, int k) {
    if (J.size() != static_cast<std::size_t>(k)) throw InputError("minor index has wrong size");
    const int num_vars = G.at(1, 1).num_vars();
    PolyMatrix sub;
    sub.reserve(J.size());
    for (int row : J) {
        if (row < 1 || row > G.size()) throw InputError("minor row out of range");
        std::vector<SparsePoly> r;
        for (int c = 1; c <= k; ++c) r.push_back(G.at(row, c));
        sub.push_back(std::move(r));
    }
    return determinant(sub, num_vars);
}

SparsePoly minor_polynomial(const IteratedSequence& seq, const IndexTuple& J) {
    return minor_polynomial(generic_matrix(seq), J, seq.k());
}

std::vector<SparsePoly> minor_polynomials(const IteratedSequence& seq) {
    const GenericMatrix G = generic_matrix(seq);
    std::vector<SparsePoly> out;
    for (const auto& J : plucker_indices(seq.k(), seq.n())) out.push_back(minor_polynomial(G, J, seq.k()));
    return out;
}

ExponentVector lowest_term_valuation(const SparsePoly& p, const PsiOrder& order) {
    if (p.is_zero()) throw InputError("the zero polynomial has no valuation");
    const ExponentVector* best = nullptr;
    for (const auto& [m, c] : p.terms())
        if (!best || order(m, *best)) best = &m;
    return *best;
}

ExponentVector lowest_term_valuation(const SparsePoly& p, const IteratedSequence& seq) {
    return lowest_term_valuation(p, PsiOrder(seq));
}

}  // namespace tropseq
