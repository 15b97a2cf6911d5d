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

#include "tropseq/index_sets.hpp"

#include "tropseq/sequence.hpp"

namespace tropseq {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int a = 1; a <= k; ++a) r = r * static_cast<std::uint64_t>(n - k + a) / static_cast<std::uint64_t>(a);
    return r;
}

std::vector<IndexTuple> plucker_indices(int k, int n) {
    if (k < 0 || n < 1 || k > n) {
        throw InputError("invalid index set I_{" + std::to_string(k) + "," + std::to_string(n) + "}");
    }
    std::vector<IndexTuple> out;
    out.reserve(static_cast<std::size_t>(binomial(n, k)));
    IndexTuple cur(static_cast<std::size_t>(k));
    for (int a = 0; a < k; ++a) cur[static_cast<std::size_t>(a)] = a + 1;
    while (true) {
        out.push_back(cur);
        int pos = k - 1;
        while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == n - k + pos + 1) --pos;
        if (pos < 0) break;
        ++cur[static_cast<std::size_t>(pos)];
        for (int b = pos + 1; b < k; ++b)
            cur[static_cast<std::size_t>(b)] = cur[static_cast<std::size_t>(b - 1)] + 1;
    }
    return out;
}

std::size_t index_position(const IndexTuple& J, int n) {
    // Count tuples lexicographically smaller than J.
    const int k = static_cast<int>(J.size());
    std::uint64_t pos = 0;
    int prev = 0;
    for (int a = 0; a < k; ++a) {
        for (int v = prev + 1; v < J[static_cast<std::size_t>(a)]; ++v) pos += binomial(n - v, k - a - 1);
        prev = J[static_cast<std::size_t>(a)];
    }
    return static_cast<std::size_t>(pos);
}

std::string index_label(const IndexTuple& J) {
    std::string out;
    for (std::size_t a = 0; a < J.size(); ++a) {
        if (a) out += '.';
        out += std::to_string(J[a]);
    }
    return out;
}

std::string index_compact(const IndexTuple& J) {
    std::string out;
    for (int v : J) out += std::to_string(v);
    return out;
}

bool is_strictly_increasing(const IndexTuple& J) {
    for (std::size_t a = 1; a < J.size(); ++a)
        if (J[a - 1] >= J[a]) return false;
    return true;
}

}  // namespace tropseq
