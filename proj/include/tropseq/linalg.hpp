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

#ifndef TROPSEQ_LINALG_HPP
#define TROPSEQ_LINALG_HPP

#include <vector>

#include "tropseq/exact.hpp"

namespace tropseq {

using IntegerMatrix = std::vector<std::vector<Integer>>;

/*
 * Rank over Q by fraction-free (Bareiss) elimination.
 *
 * Every intermediate entry is a minor of the input, so the division by the
 * previous pivot is exact and entries stay integral. Rows may be ragged only
 * if empty; otherwise all rows must share one length.
 */
int integer_rank(IntegerMatrix M);
int integer_rank(const std::vector<std::vector<int>>& M);

}  // namespace tropseq

#endif  // TROPSEQ_LINALG_HPP
