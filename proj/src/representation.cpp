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

#include "tropseq/representation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tropseq/index_sets.hpp"

namespace tropseq {

WedgeVector WedgeVector::basis(const IndexTuple& J, const Integer& coefficient) {
    if (!is_strictly_increasing(J)) throw InputError("wedge indices must be strictly increasing");
    WedgeVector w;
    w.add(J, coefficient);
    return w;
}

WedgeVector WedgeVector::highest_weight(int k) {
    IndexTuple J(static_cast<std::size_t>(k));
    for (int a = 0; a < k; ++a) J[static_cast<std::size_t>(a)] = a + 1;
    return basis(J);
}

void WedgeVector::add(const IndexTuple& J, const Integer& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(J, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

Integer WedgeVector::coefficient(const IndexTuple& J) const {
    auto it = terms_.find(J);
    return it == terms_.end() ? Integer(0) : it->second;
}

std::string WedgeVector::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [J, c] : terms_) {
        if (!first) out << ' ';
        first = false;
        out << (c > 0 ? "+" : "") << c.get_str() << "*e";
        for (std::size_t a = 0; a < J.size(); ++a) out << (a ? "^" : "") << J[a];
    }
    return out.str();
}

WedgeVector apply_root_operator(const PositiveRoot& root, const WedgeVector& w) {
    WedgeVector out;
    for (const auto& [J, c] : w.terms()) {
        auto hit = std::find(J.begin(), J.end(), root.i);
        if (hit == J.end()) continue;
        if (std::find(J.begin(), J.end(), root.j) != J.end()) continue;  // e_j ^ e_j = 0
        const auto from = static_cast<std::size_t>(hit - J.begin());
        IndexTuple moved = J;
        moved.erase(moved.begin() + static_cast<std::ptrdiff_t>(from));
        auto slot = std::lower_bound(moved.begin(), moved.end(), root.j);
        const auto to = static_cast<std::size_t>(slot - moved.begin());
        moved.insert(slot, root.j);
        const std::size_t shift = from > to ? from - to : to - from;
        out.add(moved, shift % 2 ? Integer(-c) : c);
    }
    return out;
}

WedgeVector apply_monomial(std::span<const int> m, const IteratedSequence& seq) {
    if (m.size() != static_cast<std::size_t>(seq.d())) {
        throw InputError("exponent vector length does not match the sequence");
    }
    WedgeVector w = WedgeVector::highest_weight(seq.k());
    for (int t = seq.d() - 1; t >= 0 && !w.is_zero(); --t) {
        if (m[static_cast<std::size_t>(t)] < 0) throw InputError("negative exponent");
        for (int rep = 0; rep < m[static_cast<std::size_t>(t)] && !w.is_zero(); ++rep)
            w = apply_root_operator(seq.root(t), w);
    }
    return w;
}

namespace {

void expand(const IteratedSequence& seq, int t, const WedgeVector& w, ExponentVector& m,
            std::map<ExponentVector, WedgeVector>& out) {
    if (t < 0) {
        out.emplace(m, w);
        return;
    }
    expand(seq, t - 1, w, m, out);
    WedgeVector lowered = apply_root_operator(seq.root(t), w);
    if (lowered.is_zero()) return;
    m[static_cast<std::size_t>(t)] = 1;
    expand(seq, t - 1, lowered, m, out);
    m[static_cast<std::size_t>(t)] = 0;
}

}  // namespace

std::map<ExponentVector, WedgeVector> lowering_expansion(const IteratedSequence& seq) {
    std::map<ExponentVector, WedgeVector> out;
    ExponentVector m(static_cast<std::size_t>(seq.d()), 0);
    expand(seq, seq.d() - 1, WedgeVector::highest_weight(seq.k()), m, out);
    return out;
}

CoefficientTable coefficient_table(const IteratedSequence& seq, const IndexTuple& J) {
    CoefficientTable table;
    for (const auto& [m, w] : lowering_expansion(seq)) {
        Integer c = w.coefficient(J);
        if (c != 0) table.emplace(m, std::move(c));
    }
    return table;
}

std::vector<CoefficientTable> coefficient_tables(const IteratedSequence& seq) {
    const auto indices = plucker_indices(seq.k(), seq.n());
    std::vector<CoefficientTable> tables(indices.size());
    for (const auto& [m, w] : lowering_expansion(seq)) {
        for (const auto& [J, c] : w.terms()) tables[index_position(J, seq.n())].emplace(m, c);
    }
    return tables;
}

std::vector<int> root_weight(std::span<const int> m, const IteratedSequence& seq) {
    std::vector<int> wt(static_cast<std::size_t>(seq.n()), 0);
    for (int t = 0; t < seq.d(); ++t) {
        const auto& r = seq.root(t);
        wt[static_cast<std::size_t>(r.i - 1)] += m[static_cast<std::size_t>(t)];
        wt[static_cast<std::size_t>(r.j - 1)] -= m[static_cast<std::size_t>(t)];
    }
    return wt;
}

std::vector<int> lowering_weight(const IndexTuple& J, int k, int n) {
    std::vector<int> wt(static_cast<std::size_t>(n), 0);
    for (int a = 0; a < k; ++a) wt[static_cast<std::size_t>(a)] += 1;
    for (int j : J) wt[static_cast<std::size_t>(j - 1)] -= 1;
    return wt;
}

namespace {

ExponentVector psi_minimum(const CoefficientTable& table, const PsiOrder& order) {
    const ExponentVector* best = nullptr;
    for (const auto& entry : table)
        if (!best || order(entry.first, *best)) best = &entry.first;
    return *best;
}

}  // namespace

ExponentVector valuation_plucker(const IteratedSequence& seq, const IndexTuple& J) {
    if (J.size() != static_cast<std::size_t>(seq.k()) || !is_strictly_increasing(J) ||
        J.front() < 1 || J.back() > seq.n()) {
        throw InputError("index " + index_label(J) + " is not in I_{k,n}");
    }
    const auto table = coefficient_table(seq, J);
    if (table.empty()) {
        throw std::domain_error("no lowering monomial reaches e_" + index_label(J) + " for " +
                                seq.to_string());
    }
    return psi_minimum(table, PsiOrder(seq));
}

const ExponentVector& WeightingMatrix::column(const IndexTuple& J) const {
    return columns.at(index_position(J, n));
}

std::vector<std::vector<int>> WeightingMatrix::rows() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(d),
                                      std::vector<int>(columns.size(), 0));
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (int r = 0; r < d; ++r) out[static_cast<std::size_t>(r)][c] = columns[c][static_cast<std::size_t>(r)];
    return out;
}

WeightingMatrix weighting_matrix(const IteratedSequence& seq) {
    WeightingMatrix M;
    M.k = seq.k();
    M.n = seq.n();
    M.d = seq.d();
    M.labels = plucker_indices(seq.k(), seq.n());
    const PsiOrder order(seq);
    const auto tables = coefficient_tables(seq);
    M.columns.reserve(tables.size());
    for (std::size_t c = 0; c < tables.size(); ++c) {
        if (tables[c].empty()) {
            throw std::domain_error("no lowering monomial reaches e_" + index_label(M.labels[c]) +
                                    " for " + seq.to_string());
        }
        M.columns.push_back(psi_minimum(tables[c], order));
    }
    return M;
}

}  // namespace tropseq
