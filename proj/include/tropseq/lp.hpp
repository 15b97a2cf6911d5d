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
// Exact rational simplex for systems in standard form {Ax = b, x >= 0}.

#ifndef TROPSEQ_LP_HPP
#define TROPSEQ_LP_HPP

#include <vector>

#include "tropseq/exact.hpp"

namespace tropseq {

struct LinearSystem {
    std::vector<std::vector<Rational>> A;  // m rows, each of length num_vars
    std::vector<Rational> b;               // length m
    int num_vars = 0;

    explicit LinearSystem(int vars = 0) : num_vars(vars) {}
    void add_row(std::vector<Rational> row, Rational rhs);
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
    LpStatus status = LpStatus::infeasible;
    std::vector<Rational> x;  // a basic feasible point when status != infeasible
    Rational value;           // objective at x; set only when optimal

    bool feasible() const noexcept { return status != LpStatus::infeasible; }
};

/// Phase one only. Throws InputError on malformed dimensions.
LpResult lp_feasible(const LinearSystem& system);

/// Two-phase simplex maximising c.x. Bland's rule is used in both phases, so
/// the method terminates on degenerate problems.
LpResult lp_maximize(const LinearSystem& system, const std::vector<Rational>& c);

/// True iff x >= 0 and Ax = b hold exactly.
bool satisfies(const LinearSystem& system, const std::vector<Rational>& x);

}  // namespace tropseq

#endif  // TROPSEQ_LP_HPP
