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
// Independent count of leaf-labelled trivalent trees: sets of n-3 pairwise
// compatible nontrivial splits of [n].

#ifndef TROPSEQ_TESTS_SPLIT_ORACLE_HPP
#define TROPSEQ_TESTS_SPLIT_ORACLE_HPP

#include <algorithm>
#include <set>
#include <vector>

namespace split_oracle {

using SplitSystem = std::set<std::vector<int>>;

inline bool compatible(int a, int b, int full) {
    const int na = full & ~a, nb = full & ~b;
    return !(a & b) || !(a & nb) || !(na & b) || !(na & nb);
}

inline std::vector<int> members(int mask, int n) {
    std::vector<int> out;
    for (int leaf = 1; leaf <= n; ++leaf)
        if (mask & (1 << (leaf - 1))) out.push_back(leaf);
    return out;
}

inline void extend(const std::vector<int>& splits, std::size_t from, std::vector<int>& chosen, int need, int full, int n,
            std::set<SplitSystem>& out) {
    if (static_cast<int>(chosen.size()) == need) {
        SplitSystem sys;
        for (int s : chosen) sys.insert(members(s, n));
        out.insert(sys);
        return;
    }
    for (std::size_t a = from; a < splits.size(); ++a) {
        if (!std::all_of(chosen.begin(), chosen.end(), [&](int c) { return compatible(c, splits[a], full); })) continue;
        chosen.push_back(splits[a]);
        extend(splits, a + 1, chosen, need, full, n, out);
        chosen.pop_back();
    }
}

// Trivalent trees on [n] correspond to sets of n-3 pairwise compatible
// nontrivial splits. Splits are stored by the side avoiding leaf 1.
inline std::set<SplitSystem> brute_force_split_systems(int n) {
    const int full = (1 << n) - 1;
    std::vector<int> splits;
    for (int mask = 1; mask < full; ++mask) {
        if (mask & 1) continue;
        const int size = __builtin_popcount(static_cast<unsigned>(mask));
        if (size >= 2 && n - size >= 2) splits.push_back(mask);
    }
    std::set<SplitSystem> out;
    std::vector<int> chosen;
    extend(splits, 0, chosen, n - 3, full, n, out);
    return out;
}

}  // namespace split_oracle

#endif  // TROPSEQ_TESTS_SPLIT_ORACLE_HPP
