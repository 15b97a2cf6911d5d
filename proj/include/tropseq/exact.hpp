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

#ifndef TROPSEQ_EXACT_HPP
#define TROPSEQ_EXACT_HPP

#include <gmpxx.h>

#include <vector>

namespace tropseq {

using Integer = mpz_class;
using Rational = mpq_class;

/// Sorted index tuple labelling a Pluecker coordinate / basis wedge.
using IndexTuple = std::vector<int>;

}  // namespace tropseq

#endif  // TROPSEQ_EXACT_HPP
