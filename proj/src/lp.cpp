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

#include "tropseq/lp.hpp"

#include <optional>

#include "tropseq/sequence.hpp"

namespace tropseq {

void LinearSystem::add_row(std::vector<Rational> row, Rational rhs) {
    if (row.size() != static_cast<std::size_t>(num_vars)) throw InputError("constraint row has wrong length");
    A.push_back(std::move(row));
    b.push_back(std::move(rhs));
}

namespace {

void validate(const LinearSystem& s) {
    if (s.num_vars < 0) throw InputError("negative variable count");
    if (s.A.size() != s.b.size()) throw InputError("row count and right-hand side disagree");
    for (const auto& row : s.A)
        if (row.size() != static_cast<std::size_t>(s.num_vars)) throw InputError("constraint row has wrong length");
}

/*
 * Dense tableau. Columns 0..cols-1 are variables, the last column is the right
 * hand side. obj[j] holds z_j - c_j for the current basis; the tableau is
 * optimal for maximisation once no obj[j] < 0 remains among allowed columns.
 */
class Tableau {
public:
    Tableau(const LinearSystem& s) : rows_(s.A.size()), vars_(static_cast<std::size_t>(s.num_vars)) {
        cols_ = vars_ + rows_;  // one artificial per row
        T_.assign(rows_, std::vector<Rational>(cols_ + 1));
        basis_.resize(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            const bool flip = s.b[r] < 0;
            for (std::size_t j = 0; j < vars_; ++j) T_[r][j] = flip ? Rational(-s.A[r][j]) : s.A[r][j];
            T_[r][vars_ + r] = 1;
            T_[r][cols_] = flip ? Rational(-s.b[r]) : s.b[r];
            basis_[r] = vars_ + r;
        }
        allowed_ = cols_;
    }

    /// Phase one: minimise the artificial sum. Returns its optimum.
    Rational phase_one() {
        std::vector<Rational> cost(cols_);
        for (std::size_t j = vars_; j < cols_; ++j) cost[j] = -1;  // maximise -sum
        set_objective(cost);
        run();
        return -obj_[cols_];
    }

    /// Pivots remaining artificials out of the basis and forbids them. Rows
    /// with no nonzero structural entry are redundant and are dropped.
    void drop_artificials() {
        for (std::size_t r = 0; r < rows_;) {
            if (basis_[r] < vars_) {
                ++r;
                continue;
            }
            std::optional<std::size_t> col;
            for (std::size_t j = 0; j < vars_ && !col; ++j)
                if (T_[r][j] != 0) col = j;
            if (col) {
                pivot(r, *col);
                ++r;
            } else {
                T_.erase(T_.begin() + static_cast<std::ptrdiff_t>(r));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
                --rows_;
            }
        }
        allowed_ = vars_;
    }

    /// Returns false if unbounded.
    bool maximise(const std::vector<Rational>& c) {
        std::vector<Rational> cost(cols_);
        for (std::size_t j = 0; j < vars_; ++j) cost[j] = c[j];
        set_objective(cost);
        return run();
    }

    std::vector<Rational> point() const {
        std::vector<Rational> x(vars_);
        for (std::size_t r = 0; r < rows_; ++r)
            if (basis_[r] < vars_) x[basis_[r]] = T_[r][cols_];
        return x;
    }

    Rational value() const { return obj_[cols_]; }

private:
    void set_objective(const std::vector<Rational>& cost) {
        cost_ = cost;
        obj_.assign(cols_ + 1, 0);
        for (std::size_t j = 0; j <= cols_; ++j) {
            Rational z = 0;
            for (std::size_t r = 0; r < rows_; ++r)
                if (cost_[basis_[r]] != 0) z += cost_[basis_[r]] * T_[r][j];
            obj_[j] = j < cols_ ? Rational(z - cost_[j]) : z;
        }
    }

    bool run() {
        for (;;) {
            // Bland: lowest-index improving column.
            std::optional<std::size_t> enter;
            for (std::size_t j = 0; j < allowed_ && !enter; ++j)
                if (obj_[j] < 0) enter = j;
            if (!enter) return true;
            std::optional<std::size_t> leave;
            Rational best;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (T_[r][*enter] <= 0) continue;
                Rational ratio = T_[r][cols_] / T_[r][*enter];
                if (!leave || ratio < best || (ratio == best && basis_[r] < basis_[*leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (!leave) return false;
            pivot(*leave, *enter);
        }
    }

    void pivot(std::size_t r, std::size_t c) {
        const Rational p = T_[r][c];
        for (auto& v : T_[r]) v /= p;
        for (std::size_t o = 0; o < rows_; ++o) {
            if (o == r || T_[o][c] == 0) continue;
            const Rational f = T_[o][c];
            for (std::size_t j = 0; j <= cols_; ++j)
                if (T_[r][j] != 0) T_[o][j] -= f * T_[r][j];
        }
        if (obj_[c] != 0) {
            const Rational f = obj_[c];
            for (std::size_t j = 0; j <= cols_; ++j)
                if (T_[r][j] != 0) obj_[j] -= f * T_[r][j];
        }
        basis_[r] = c;
    }

    std::size_t rows_;
    std::size_t vars_;
    std::size_t cols_ = 0;
    std::size_t allowed_ = 0;
    std::vector<std::vector<Rational>> T_;
    std::vector<std::size_t> basis_;
    std::vector<Rational> cost_;
    std::vector<Rational> obj_;
};

}  // namespace

LpResult lp_feasible(const LinearSystem& system) {
    validate(system);
    Tableau tab(system);
    LpResult res;
    if (tab.phase_one() != 0) return res;
    tab.drop_artificials();
    res.status = LpStatus::optimal;
    res.x = tab.point();
    res.value = 0;
    return res;
}

LpResult lp_maximize(const LinearSystem& system, const std::vector<Rational>& c) {
    validate(system);
    if (c.size() != static_cast<std::size_t>(system.num_vars)) throw InputError("objective has wrong length");
    Tableau tab(system);
    LpResult res;
    if (tab.phase_one() != 0) return res;
    tab.drop_artificials();
    const bool bounded = tab.maximise(c);
    res.x = tab.point();
    if (!bounded) {
        res.status = LpStatus::unbounded;
        return res;
    }
    res.status = LpStatus::optimal;
    res.value = tab.value();
    return res;
}

bool satisfies(const LinearSystem& system, const std::vector<Rational>& x) {
    if (x.size() != static_cast<std::size_t>(system.num_vars)) return false;
    for (const auto& v : x)
        if (v < 0) return false;
    for (std::size_t r = 0; r < system.A.size(); ++r) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < x.size(); ++j) lhs += system.A[r][j] * x[j];
        if (lhs != system.b[r]) return false;
    }
    return true;
}

}  // namespace tropseq
