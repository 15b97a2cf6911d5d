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

#include "tropseq/sweep.hpp"

#include <sstream>

#include <json.hpp>

#include "tropseq/index_sets.hpp"
#include "tropseq/linalg.hpp"
#include "tropseq/parallel.hpp"
#include "tropseq/plucker.hpp"
#include "tropseq/poly_oracle.hpp"
#include "tropseq/polytope.hpp"
#include "tropseq/representation.hpp"

namespace tropseq {

OracleComparison compare_with_oracle(const IteratedSequence& seq) {
    OracleComparison cmp;
    const auto labels = plucker_indices(seq.k(), seq.n());
    const auto tables = coefficient_tables(seq);
    const auto minors = minor_polynomials(seq);
    const PsiOrder order(seq);
    for (std::size_t a = 0; a < labels.size(); ++a) {
        const std::string name = "p" + index_compact(labels[a]);
        if (tables[a] != minors[a].terms()) cmp.table_mismatches.push_back(name);
        const ExponentVector rep = valuation_plucker(seq, labels[a]);
        const ExponentVector poly = lowest_term_valuation(minors[a], order);
        if (rep != poly) cmp.valuation_mismatches.push_back(name);
    }
    return cmp;
}

SequenceCheck check_sequence(const IteratedSequence& seq, const SweepOptions& options) {
    SequenceCheck c;
    c.sequence = seq.to_string();
    const WeightingMatrix M = weighting_matrix(seq);
    c.rank = integer_rank(M.rows());
    c.full_rank = c.rank == seq.d();
    if (!c.full_rank) c.failures.push_back("rank " + std::to_string(c.rank) + " < " + std::to_string(seq.d()));

    if (options.proposition && seq.k() == 2) {
        const PropositionReport report = verify_proposition(seq);
        c.relations = report.checks.size();
        c.agreements = report.agreements();
        for (const auto& check : report.checks) {
            if (check.init_matrix.size() == 2) ++c.binomials;
            if (is_signed_binomial(check.init_matrix)) ++c.signed_binomials;
            if (check.init_matrix.size() == 1) ++c.monomials;
            if (!check.agree) c.failures.push_back("disagreement on " + check.relation.tag());
        }
        if (c.binomials != c.relations) c.failures.push_back("initial form that is not a binomial");
    }
    if (options.oracle) {
        const OracleComparison cmp = compare_with_oracle(seq);
        c.oracle_tables = cmp.table_mismatches.empty();
        c.oracle_valuations = cmp.valuation_mismatches.empty();
        for (const auto& name : cmp.table_mismatches) c.failures.push_back("coefficient table mismatch on " + name);
        for (const auto& name : cmp.valuation_mismatches) c.failures.push_back("valuation mismatch on " + name);
    }
    if (options.polytope && seq.k() == 2) {
        const PolytopeReport report = no_polytope_report(seq);
        c.polytope_ok = report.ok();
        for (const auto& f : report.failures) c.failures.push_back("polytope: " + f);
    }
    return c;
}

SweepSummary run_sweep(const std::vector<IteratedSequence>& sequences, const SweepOptions& options) {
    SweepSummary s;
    s.options = options;
    s.sequences = sequences.size();
    if (!sequences.empty()) {
        s.k = sequences.front().k();
        s.n = sequences.front().n();
    }
    const auto checks = parallel_map(sequences.size(), options.jobs,
                                     [&](std::size_t i) { return check_sequence(sequences[i], options); });
    for (const auto& c : checks) {
        s.relations += c.relations;
        s.agreements += c.agreements;
        s.binomials += c.binomials;
        s.signed_binomials += c.signed_binomials;
        s.monomials += c.monomials;
        s.full_rank += c.full_rank ? 1 : 0;
        s.oracle_ok += (c.oracle_tables && c.oracle_valuations) ? 1 : 0;
        s.polytope_ok += c.polytope_ok ? 1 : 0;
        if (!c.ok()) {
            ++s.failed;
            if (s.failures.size() < 5) s.failures.push_back(c);
        }
    }
    return s;
}

std::string sweep_summary_text(const SweepSummary& s) {
    std::ostringstream out;
    out << "k=" << s.k << " n=" << s.n << " sequences=" << s.sequences;
    if (s.options.proposition && s.k == 2) {
        out << " relations=" << s.relations << " agree=" << s.agreements << " binomial=" << s.binomials << " signed_binomial=" << s.signed_binomials
            << " monomial=" << s.monomials;
    }
    out << " full_rank=" << s.full_rank;
    if (s.options.oracle) out << " oracle=" << s.oracle_ok;
    if (s.options.polytope && s.k == 2) out << " polytope=" << s.polytope_ok;
    out << " failed=" << s.failed << '\n';
    for (const auto& f : s.failures) {
        out << "FAIL " << f.sequence << ':';
        for (const auto& why : f.failures) out << ' ' << why << ';';
        out << '\n';
    }
    return out.str();
}

std::string sweep_summary_json(const SweepSummary& s) {
    nlohmann::ordered_json out;
    out["k"] = s.k;
    out["n"] = s.n;
    out["sequences"] = s.sequences;
    out["relations"] = s.relations;
    out["agree"] = s.agreements;
    out["binomial"] = s.binomials;
    out["signed_binomial"] = s.signed_binomials;
    out["monomial"] = s.monomials;
    out["full_rank"] = s.full_rank;
    if (s.options.oracle) out["oracle"] = s.oracle_ok;
    if (s.options.polytope) out["polytope"] = s.polytope_ok;
    out["failed"] = s.failed;
    auto fails = nlohmann::ordered_json::array();
    for (const auto& f : s.failures) fails.push_back({{"sequence", f.sequence}, {"failures", f.failures}});
    out["failures"] = fails;
    return out.dump();
}

}  // namespace tropseq
