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
// Index sets I_{k,n}: strictly increasing k-tuples from [n].

#ifndef TROPSEQ_INDEX_SETS_HPP
#define TROPSEQ_INDEX_SETS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tropseq/exact.hpp"

namespace tropseq {

std::uint64_t binomial(int n, int k);

/// All strictly increasing k-tuples from [n] in lexicographic order.
/// k = 0 yields the single empty tuple. Throws InputError unless 0 <= k <= n.
std::vector<IndexTuple> plucker_indices(int k, int n);

/// Position of J in plucker_indices(J.size(), n) (combinatorial number system).
std::size_t index_position(const IndexTuple& J, int n);

/// `3.4` style label; `1.2.3` for k = 3.
std::string index_label(const IndexTuple& J);
/// `34` style compact label used for k=2 tables.
std::string index_compact(const IndexTuple& J);

bool is_strictly_increasing(const IndexTuple& J);

}  // namespace tropseq

#endif  // TROPSEQ_INDEX_SETS_HPP
