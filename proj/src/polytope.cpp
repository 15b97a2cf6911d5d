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

#include "tropseq/polytope.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "tropseq/index_sets.hpp"
#include "tropseq/linalg.hpp"
#include "tropseq/lp.hpp"
#include "tropseq/representation.hpp"

namespace tropseq {

PointSet::PointSet(int dim, std::vector<LatticePoint> pts) : d(dim), points(std::move(pts)) {
    if (d < 0) throw InputError("negative dimension");
    for (const auto& p : points)
        if (p.size() != static_cast<std::size_t>(d)) throw InputError("point has wrong dimension");
}

bool PointSet::contains(const LatticePoint& v) const {
    return std::find(points.begin(), points.end(), v) != points.end();
}

bool PointSet::in_hypercube() const {
    return std::all_of(points.begin(), points.end(), [](const LatticePoint& p) {
        return std::all_of(p.begin(), p.end(), [](int x) { return x == 0 || x == 1; });
    });
}

bool PointSet::distinct() const {
    return std::set<LatticePoint>(points.begin(), points.end()).size() == points.size();
}

namespace {

// x = sum lambda_p p, sum lambda = 1, lambda >= 0 over the given points.
bool convex_combination_exists(const std::vector<const LatticePoint*>& pts, const LatticePoint& x) {
    if (pts.empty()) return false;
    const int m = static_cast<int>(pts.size());
    LinearSystem sys(m);
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::vector<Rational> row(static_cast<std::size_t>(m));
        for (int a = 0; a < m; ++a) row[static_cast<std::size_t>(a)] = (*pts[static_cast<std::size_t>(a)])[i];
        sys.add_row(std::move(row), x[i]);
    }
    sys.add_row(std::vector<Rational>(static_cast<std::size_t>(m), 1), 1);
    return lp_feasible(sys).feasible();
}

}  // namespace

bool in_convex_hull(const PointSet& P, const LatticePoint& x) {
    if (x.size() != static_cast<std::size_t>(P.d)) throw InputError("point has wrong dimension");
    std::vector<const LatticePoint*> pts;
    for (const auto& p : P.points) pts.push_back(&p);
    return convex_combination_exists(pts, x);
}

bool is_vertex(const PointSet& P, const LatticePoint& v) {
    if (!P.contains(v)) throw InputError("is_vertex: point is not in the set");
    std::vector<const LatticePoint*> others;
    for (const auto& p : P.points)
        if (p != v) others.push_back(&p);
    return !convex_combination_exists(others, v);
}

int affine_dimension(const PointSet& P) {
    if (P.points.empty()) throw InputError("affine_dimension of an empty set");
    std::vector<std::vector<int>> diffs;
    const auto& base = P.points.front();
    for (std::size_t a = 1; a < P.points.size(); ++a) {
        std::vector<int> row(base.size());
        for (std::size_t i = 0; i < base.size(); ++i) row[i] = P.points[a][i] - base[i];
        diffs.push_back(std::move(row));
    }
    return diffs.empty() ? 0 : integer_rank(diffs);
}

bool supporting_cone_trivial(const PointSet& P, const LatticePoint& x, std::size_t* lp_solves) {
    // Substitute u = c + 1 in [0, 2]^d. Variables: u (d), one slack per point,
    // one box slack per coordinate.
    const std::size_t d = static_cast<std::size_t>(P.d);
    const std::size_t m = P.points.size();
    LinearSystem sys(static_cast<int>(d + m + d));
    for (std::size_t a = 0; a < m; ++a) {
        std::vector<Rational> row(d + m + d);
        Rational rhs = 0;
        for (std::size_t i = 0; i < d; ++i) {
            const int q = P.points[a][i] - x[i];
            row[i] = q;
            rhs += q;
        }
        row[d + a] = 1;
        sys.add_row(std::move(row), rhs);
    }
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Rational> row(d + m + d);
        row[i] = 1;
        row[d + m + i] = 1;
        sys.add_row(std::move(row), 2);
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (int sense : {1, -1}) {
            std::vector<Rational> c(d + m + d);
            c[i] = sense;
            const LpResult r = lp_maximize(sys, c);
            if (lp_solves) ++*lp_solves;
            // c = 0 is feasible, so the optimum is u_i = 1 exactly when trivial.
            if (r.status != LpStatus::optimal || r.value != sense) return false;
        }
    }
    return true;
}

InteriorResult interior_lattice_points(const PointSet& P, const InteriorOptions& options) {
    InteriorResult result;
    if (P.points.empty() || affine_dimension(P) < P.d) {
        result.lower_dimensional = true;
        return result;
    }
    const std::size_t d = static_cast<std::size_t>(P.d);
    LatticePoint lo = P.points.front();
    LatticePoint hi = lo;
    for (const auto& p : P.points) {
        for (std::size_t i = 0; i < d; ++i) {
            lo[i] = std::min(lo[i], p[i]);
            hi[i] = std::max(hi[i], p[i]);
        }
    }
    LatticePoint x = lo;
    for (;;) {
        ++result.candidates;
        bool boundary = false;
        if (options.coordinate_certificates) {
            for (std::size_t i = 0; i < d && !boundary; ++i) boundary = x[i] == lo[i] || x[i] == hi[i];
        }
        if (!boundary) {
            ++result.lp_solves;
            if (in_convex_hull(P, x) && supporting_cone_trivial(P, x, &result.lp_solves)) result.points.push_back(x);
        }
        std::size_t i = 0;
        while (i < d && x[i] == hi[i]) x[i] = lo[i], ++i;
        if (i == d) break;
        ++x[i];
    }
    std::sort(result.points.begin(), result.points.end());
    return result;
}

PolytopeReport no_polytope_report(const IteratedSequence& seq, const InteriorOptions& options) {
    const WeightingMatrix M = weighting_matrix(seq);
    PolytopeReport report;
    report.labels = M.labels;
    report.vertices = M.columns;
    report.ambient = M.d;
    const PointSet P(M.d, M.columns);
    report.in_hypercube = P.in_hypercube();
    report.distinct = P.distinct();
    if (!report.in_hypercube) report.failures.push_back("some valuation has a coordinate outside {0,1}");
    if (!report.distinct) report.failures.push_back("valuation vectors are not pairwise distinct");
    if (report.vertices.size() != binomial(seq.n(), seq.k()))
        report.failures.push_back("wrong number of Pluecker coordinates");
    for (std::size_t a = 0; a < report.vertices.size(); ++a) {
        const bool v = is_vertex(P, report.vertices[a]);
        report.vertex_certified.push_back(v);
        if (!v) report.failures.push_back("p" + index_compact(report.labels[a]) + " is not a vertex");
    }
    report.dim = affine_dimension(P);
    if (report.dim != M.d) report.failures.push_back("polytope is not full-dimensional");
    report.interior = interior_lattice_points(P, options);
    if (report.interior.lower_dimensional) report.failures.push_back("interior test skipped: lower-dimensional");
    if (!report.interior.points.empty()) report.failures.push_back("polytope has interior lattice points");
    return report;
}

std::string polytope_report_json(const PolytopeReport& report) {
    nlohmann::ordered_json out;
    out["vertices"] = report.vertices;
    out["dim"] = report.dim;
    out["in_hypercube"] = report.in_hypercube;
    out["interior_lattice_points"] = report.interior.points;
    nlohmann::ordered_json extra;
    extra["labels"] = report.labels;
    extra["vertex_certified"] = report.vertex_certified;
    extra["lower_dimensional"] = report.interior.lower_dimensional;
    extra["failures"] = report.failures;
    out["certificate"] = extra;
    return out.dump();
}

}  // namespace tropseq
