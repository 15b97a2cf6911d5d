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

#include "tropseq/plucker.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "tropseq/trees.hpp"

namespace tropseq {

namespace {

PluckerTerm make_term(int coefficient, IndexTuple a, IndexTuple b) {
    if (b < a) std::swap(a, b);
    return PluckerTerm{coefficient, std::move(a), std::move(b)};
}

std::string term_string(const PluckerTerm& t) {
    std::string out = t.coefficient > 0 ? "+" : "-";
    const int mag = t.coefficient > 0 ? t.coefficient : -t.coefficient;
    if (mag != 1) out += std::to_string(mag) + "*";
    out += "p" + index_compact(t.first) + "*p" + index_compact(t.second);
    return out;
}

std::string terms_string(const std::vector<PluckerTerm>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t a = 0; a < terms.size(); ++a) {
        if (a) out += ' ';
        out += term_string(terms[a]);
    }
    return out;
}

nlohmann::json terms_json(const std::vector<PluckerTerm>& terms) {
    auto arr = nlohmann::json::array();
    for (const auto& t : terms) arr.push_back({{"coefficient", t.coefficient}, {"p", {t.first, t.second}}});
    return arr;
}

}  // namespace

std::string PluckerRelation::tag() const {
    std::string out = "R[";
    out += index_label(left) + "|" + index_label(right) + "]";
    return out;
}

std::string PluckerRelation::to_string() const { return terms_string(terms); }

std::string InitialForm::to_string() const { return terms_string(terms); }

PluckerRelation three_term_relation(int r, int s, int u, int v) {
    if (!(1 <= r && r < s && s < u && u < v)) throw InputError("need r < s < u < v");
    PluckerRelation R;
    R.left = {r};
    R.right = {s, u, v};
    R.terms = {make_term(1, {r, s}, {u, v}), make_term(-1, {r, u}, {s, v}), make_term(1, {r, v}, {s, u})};
    return R;
}

PluckerRelation plucker_relation(const IndexTuple& left, const IndexTuple& right) {
    if (right.size() != left.size() + 2) throw InputError("relation tag has mismatched sizes");
    const int k = static_cast<int>(left.size()) + 1;
    std::map<std::pair<IndexTuple, IndexTuple>, int> combined;
    for (std::size_t s = 0; s < right.size(); ++s) {
        const int js = right[s];
        if (std::binary_search(left.begin(), left.end(), js)) continue;  // p_{i u j_s} = 0
        const auto below = static_cast<int>(std::lower_bound(left.begin(), left.end(), js) - left.begin());
        const int ell = k - (below + 1);
        const int sign = ((static_cast<int>(s) + ell) % 2) ? -1 : 1;
        IndexTuple a = left;
        a.insert(a.begin() + below, js);
        IndexTuple b = right;
        b.erase(b.begin() + static_cast<std::ptrdiff_t>(s));
        PluckerTerm t = make_term(sign, std::move(a), std::move(b));
        combined[{t.first, t.second}] += t.coefficient;
    }
    PluckerRelation R;
    R.left = left;
    R.right = right;
    for (const auto& [key, c] : combined)
        if (c != 0) R.terms.push_back(PluckerTerm{c, key.first, key.second});
    return R;
}

std::vector<PluckerRelation> plucker_relations(int k, int n) {
    if (k < 1 || n <= k) throw InputError("need 1 <= k < n");
    std::vector<PluckerRelation> out;
    if (k == 2) {
        for (const auto& q : plucker_indices(4, n)) out.push_back(three_term_relation(q[0], q[1], q[2], q[3]));
        return out;
    }
    if (k + 1 > n) return out;
    const auto lefts = plucker_indices(k - 1, n);
    const auto rights = plucker_indices(k + 1, n);
    for (const auto& i : lefts) {
        for (const auto& j : rights) {
            PluckerRelation R = plucker_relation(i, j);
            if (!R.terms.empty()) out.push_back(std::move(R));
        }
    }
    return out;
}

namespace {

template <class Weight, class Less>
InitialForm keep_minimal(const PluckerRelation& R, const std::vector<Weight>& weights, Less less) {
    InitialForm form;
    form.parent_left = R.left;
    form.parent_right = R.right;
    std::vector<std::size_t> best;
    for (std::size_t a = 0; a < R.terms.size(); ++a) {
        if (best.empty() || less(weights[a], weights[best.front()])) {
            best = {a};
        } else if (!less(weights[best.front()], weights[a])) {
            best.push_back(a);
        }
    }
    for (auto a : best) form.terms.push_back(R.terms[a]);
    return form;
}

template <class W>
InitialForm weight_form(const std::vector<W>& w, const PluckerRelation& R, int n) {
    if (R.terms.empty()) throw InputError("empty relation");
    const int k = static_cast<int>(R.terms.front().first.size());
    if (w.size() != static_cast<std::size_t>(binomial(n, k))) throw InputError("weight vector has wrong length");
    std::vector<Rational> totals;
    for (const auto& t : R.terms) totals.push_back(Rational(w[index_position(t.first, n)]) + Rational(w[index_position(t.second, n)]));
    return keep_minimal(R, totals, [](const Rational& a, const Rational& b) { return a < b; });
}

}  // namespace

InitialForm initial_form_weight(const std::vector<Rational>& w, const PluckerRelation& R, int n) {
    return weight_form(w, R, n);
}

InitialForm initial_form_weight(const std::vector<int>& w, const PluckerRelation& R, int n) {
    return weight_form(w, R, n);
}

InitialForm initial_form_matrix(const WeightingMatrix& M, const PluckerRelation& R, const IteratedSequence& seq) {
    if (M.d != seq.d() || M.n != seq.n()) throw InputError("weighting matrix does not match the sequence");
    std::vector<ExponentVector> totals;
    for (const auto& t : R.terms) {
        ExponentVector v = M.column(t.first);
        const auto& other = M.column(t.second);
        for (std::size_t r = 0; r < v.size(); ++r) v[r] += other[r];
        totals.push_back(std::move(v));
    }
    const PsiOrder order(seq);
    return keep_minimal(R, totals, [&](const ExponentVector& a, const ExponentVector& b) { return order(a, b); });
}

InitialFormCounts classify_initial_forms(const std::vector<InitialForm>& forms) {
    InitialFormCounts counts;
    for (const auto& f : forms) {
        switch (f.size()) {
            case 0:
                break;
            case 1: ++counts.monomial; break;
            case 2: ++counts.binomial; break;
            case 3: ++counts.trinomial; break;
            default: ++counts.larger; break;
        }
    }
    return counts;
}

bool is_signed_binomial(const InitialForm& form) {
    return form.size() == 2 && (form.terms[0].coefficient > 0) != (form.terms[1].coefficient > 0);
}

bool same_terms(const InitialForm& a, const InitialForm& b) {
    auto key = [](const InitialForm& f) {
        std::vector<std::tuple<IndexTuple, IndexTuple, int>> out;
        for (const auto& t : f.terms) out.emplace_back(t.first, t.second, t.coefficient);
        std::sort(out.begin(), out.end());
        return out;
    };
    return key(a) == key(b);
}

bool PropositionReport::all_agree() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.agree; });
}

std::size_t PropositionReport::agreements() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.agree; }));
}

PropositionReport verify_proposition(const IteratedSequence& seq) {
    if (seq.k() != 2) throw InputError("the tree comparison needs k=2");
    const WeightingMatrix M = weighting_matrix(seq);
    const auto w = tree_weight_vector(tree_from_sequence(seq).tree);
    PropositionReport report{seq, {}};
    for (auto& R : plucker_relations(2, seq.n())) {
        PropositionCheck check;
        check.init_matrix = initial_form_matrix(M, R, seq);
        check.init_tree = initial_form_weight(w, R, seq.n());
        check.agree = same_terms(check.init_matrix, check.init_tree);
        check.relation = std::move(R);
        report.checks.push_back(std::move(check));
    }
    return report;
}

std::string proposition_report_json(const PropositionReport& report) {
    auto arr = nlohmann::json::array();
    for (const auto& c : report.checks) {
        IndexTuple rel = c.relation.left;
        rel.insert(rel.end(), c.relation.right.begin(), c.relation.right.end());
        arr.push_back({{"relation", rel},
                       {"init_matrix", terms_json(c.init_matrix.terms)},
                       {"init_tree", terms_json(c.init_tree.terms)},
                       {"agree", c.agree}});
    }
    return arr.dump();
}

}  // namespace tropseq
