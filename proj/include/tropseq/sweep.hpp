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
// Batch checks over many sequences.

#ifndef TROPSEQ_SWEEP_HPP
#define TROPSEQ_SWEEP_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "tropseq/sequence.hpp"

namespace tropseq {

struct SweepOptions {
    bool proposition = true;  // k = 2 only; ignored otherwise
    bool oracle = false;      // coefficient tables against minor polynomials
    bool polytope = false;    // k = 2 only
    int jobs = 1;
};

struct SequenceCheck {
    std::string sequence;
    std::size_t relations = 0;
    std::size_t agreements = 0;
    std::size_t binomials = 0;         // exactly two surviving terms
    std::size_t signed_binomials = 0;  // two terms with opposite signs
    std::size_t monomials = 0;
    int rank = 0;
    bool full_rank = false;
    bool oracle_tables = true;
    bool oracle_valuations = true;
    bool polytope_ok = true;
    std::vector<std::string> failures;

    bool ok() const noexcept { return failures.empty(); }
};

/// Runs the requested checks on one sequence. Never throws on a failed check;
/// failures are collected instead.
SequenceCheck check_sequence(const IteratedSequence& seq, const SweepOptions& options);

/// Compares coefficient_tables(seq) with the coefficients of the generic
/// minors, monomial by monomial, and the two valuations. Returns the labels of
/// mismatching coordinates.
struct OracleComparison {
    std::vector<std::string> table_mismatches;
    std::vector<std::string> valuation_mismatches;
    bool ok() const noexcept { return table_mismatches.empty() && valuation_mismatches.empty(); }
};
OracleComparison compare_with_oracle(const IteratedSequence& seq);

struct SweepSummary {
    int k = 0;
    int n = 0;
    std::size_t sequences = 0;
    std::size_t relations = 0;
    std::size_t agreements = 0;
    std::size_t binomials = 0;         // exactly two surviving terms
    std::size_t signed_binomials = 0;  // two terms with opposite signs
    std::size_t monomials = 0;
    std::size_t full_rank = 0;
    std::size_t oracle_ok = 0;
    std::size_t polytope_ok = 0;
    std::size_t failed = 0;
    std::vector<SequenceCheck> failures;  // at most a handful, in input order
    SweepOptions options;

    bool ok() const noexcept { return failed == 0; }
};

/// All checks in parallel; the summary is independent of options.jobs.
SweepSummary run_sweep(const std::vector<IteratedSequence>& sequences, const SweepOptions& options);

std::string sweep_summary_text(const SweepSummary& s);
std::string sweep_summary_json(const SweepSummary& s);

}  // namespace tropseq

#endif  // TROPSEQ_SWEEP_HPP
