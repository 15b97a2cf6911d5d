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

#include "tropseq/linalg.hpp"

#include <utility>

#include "tropseq/sequence.hpp"

namespace tropseq {

int integer_rank(IntegerMatrix M) {
    const std::size_t rows = M.size();
    if (rows == 0) return 0;
    const std::size_t cols = M.front().size();
    for (const auto& r : M)
        if (r.size() != cols) throw InputError("ragged matrix");

    Integer prev = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && M[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(M[pivot], M[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t cc = c + 1; cc < cols; ++cc) {
                M[r][cc] = (M[rank][c] * M[r][cc] - M[r][c] * M[rank][cc]);
                mpz_divexact(M[r][cc].get_mpz_t(), M[r][cc].get_mpz_t(), prev.get_mpz_t());
            }
            M[r][c] = 0;
        }
        prev = M[rank][c];
        ++rank;
    }
    return static_cast<int>(rank);
}

int integer_rank(const std::vector<std::vector<int>>& M) {
    IntegerMatrix big;
    big.reserve(M.size());
    for (const auto& row : M) {
        std::vector<Integer> r;
        r.reserve(row.size());
        for (int v : row) r.emplace_back(v);
        big.push_back(std::move(r));
    }
    return integer_rank(std::move(big));
}

}  // namespace tropseq
