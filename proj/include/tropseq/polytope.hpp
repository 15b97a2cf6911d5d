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
// Certificates for lattice polytopes given by their generating points:
// vertex status, affine dimension and interior lattice points.

#ifndef TROPSEQ_POLYTOPE_HPP
#define TROPSEQ_POLYTOPE_HPP

#include <string>
#include <vector>

#include "tropseq/exact.hpp"
#include "tropseq/sequence.hpp"

namespace tropseq {

using LatticePoint = std::vector<int>;

struct PointSet {
    int d = 0;
    std::vector<LatticePoint> points;

    /// Throws InputError if a point has the wrong length.
    PointSet(int dim, std::vector<LatticePoint> pts);
    bool contains(const LatticePoint& v) const;
    bool in_hypercube() const;
    bool distinct() const;
};

/// x in conv(P), decided by an exact feasibility problem.
bool in_convex_hull(const PointSet& P, const LatticePoint& x);

/// v is not a convex combination of the other points. Throws InputError if
/// v is not in P.
bool is_vertex(const PointSet& P, const LatticePoint& v);

/// Rank of {p - p_0}; 0 for a single point. Throws InputError on an empty set.
int affine_dimension(const PointSet& P);

struct InteriorOptions {
    /// Accept c = +-e_i as a nonzero cone element when x_i attains the max or
    /// min of coordinate i over P, before running any LP.
    bool coordinate_certificates = true;
};

struct InteriorResult {
    std::vector<LatticePoint> points;
    bool lower_dimensional = false;
    std::size_t candidates = 0;
    std::size_t lp_solves = 0;
};

/// Integer points x of the bounding box of P lying in the interior of conv(P).
/// x is interior iff x in conv(P) and the cone {c : c.(p - x) <= 0 for all p}
/// is {0}; the latter is decided by maximising and minimising each c_i over
/// the cone intersected with [-1, 1]^d.
InteriorResult interior_lattice_points(const PointSet& P, const InteriorOptions& options = {});

/// Result of the supporting-cone test alone (x need not lie in conv(P)).
bool supporting_cone_trivial(const PointSet& P, const LatticePoint& x, std::size_t* lp_solves = nullptr);

struct PolytopeReport {
    std::vector<LatticePoint> vertices;  // columns of the weighting matrix, lexicographic labels
    std::vector<IndexTuple> labels;
    bool in_hypercube = false;
    bool distinct = false;
    std::vector<bool> vertex_certified;
    int dim = 0;
    int ambient = 0;
    InteriorResult interior;
    std::vector<std::string> failures;

    bool ok() const noexcept { return failures.empty(); }
};

/// The valuation polytope conv(v_S(p_J)) with every claimed property checked:
/// C(n,k) distinct 0/1 vertices, affine dimension d, no interior lattice
/// points. Any failed claim is listed in `failures`.
PolytopeReport no_polytope_report(const IteratedSequence& seq, const InteriorOptions& options = {});

/// {"vertices":[...], "dim":d, "in_hypercube":true, "interior_lattice_points":[]}
std::string polytope_report_json(const PolytopeReport& report);

}  // namespace tropseq

#endif  // TROPSEQ_POLYTOPE_HPP
