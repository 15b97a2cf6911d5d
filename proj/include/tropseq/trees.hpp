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
// Trivalent trees with labelled leaves: the tree of an iterated sequence,
// tree weight vectors, cherries, unlabelled canonical forms and enumeration.

#ifndef TROPSEQ_TREES_HPP
#define TROPSEQ_TREES_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tropseq/sequence.hpp"

namespace tropseq {

using Edge = std::pair<int, int>;

/*
 * Trivalent tree with n >= 3 leaves. Leaves are vertices 1..n, internal
 * vertices n+1..2n-2. Every internal vertex has degree 3, so there are n-2
 * internal vertices, 2n-3 edges and n-3 internal edges.
 */
class LabeledTree {
public:
    /// Validates the trivalent-tree invariants; throws InputError otherwise.
    static LabeledTree from_edges(int n, const std::vector<Edge>& edges);
    /// The star with leaves 1, 2, 3 around vertex 4.
    static LabeledTree star();

    int n() const noexcept { return n_; }
    int vertex_count() const noexcept { return 2 * n_ - 2; }
    bool is_leaf(int v) const noexcept { return v >= 1 && v <= n_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
    /// The internal vertex adjacent to a leaf.
    int parent(int leaf) const;

    /// Edges (a, b) with a < b, sorted.
    std::vector<Edge> edges() const;

private:
    LabeledTree() = default;
    int n_ = 0;
    std::vector<std::vector<int>> adj_;  // index 0 unused
};

/// Subdivides edge {a, b} and hangs the new leaf n+1 off the new vertex.
/// Internal vertices keep their creation order; the new one is numbered last.
LabeledTree attach_leaf(const LabeledTree& T, const Edge& edge);

/// Replaces the leaf edge of `leaf` by a cherry {leaf, n+1}.
LabeledTree grow_cherry(const LabeledTree& T, int leaf);

struct TreeSequence {
    LabeledTree tree;                 // T_S = T_n
    std::vector<LabeledTree> levels;  // T_3, T_4, ..., T_n
};

/// Starts from the 3-leaf star and, at level l = 4..n, replaces the leaf edge
/// of i_l by a cherry {i_l, l}. Only the first index of each step is used.
/// Requires k = 2.
TreeSequence tree_from_sequence(const IteratedSequence& seq);

/// Entry (i<j), in plucker_indices(2, n) order, is minus the number of
/// internal edges on the path from leaf i to leaf j.
std::vector<int> tree_weight_vector(const LabeledTree& T);

/// Leaf pairs {a < b} sharing an internal neighbour, sorted.
std::vector<Edge> find_cherries(const LabeledTree& T);

/// For each internal edge, the side not containing leaf 1, as a sorted leaf set.
std::set<std::vector<int>> leaf_splits(const LabeledTree& T);
/// Equal as leaf-labelled trees (internal numbering ignored).
bool same_labeled_tree(const LabeledTree& a, const LabeledTree& b);

/// Label-free encoding: rooted at the centre vertex (or the centre edge),
/// children encodings sorted. Leaves print as `L`.
struct CanonicalTree {
    std::string code;
    friend bool operator==(const CanonicalTree&, const CanonicalTree&) = default;
    friend auto operator<=>(const CanonicalTree&, const CanonicalTree&) = default;
};

CanonicalTree canonical_form(const LabeledTree& T);

/// Every leaf-labelled trivalent tree on [n]: (2n-5)!! of them.
std::vector<LabeledTree> enumerate_labeled_trees(int n);
/// One representative per unlabelled shape, sorted by canonical code.
std::vector<LabeledTree> enumerate_unlabeled_trees(int n);

struct TreeRealization {
    IteratedSequence sequence;
    /// relabel[leaf] is the label that leaf carries in T_S (index 0 unused);
    /// tree_from_sequence(sequence).tree equals permute_tree(relabel, T).
    std::vector<int> relabel;
};

/*
 * Converse construction. Repeatedly removes a leaf from a cherry: at each
 * stage the cherry with the lexicographically smallest (min, max) original
 * labels is chosen and its larger leaf is removed. Removed leaves receive the
 * labels n, n-1, ..., 4 in removal order, the last three leaves get 1, 2, 3.
 * Level l then records i_l = label of the removed leaf's partner and
 * j_l = smallest index in [l-1] other than i_l.
 */
TreeRealization sequence_from_tree(const LabeledTree& T);

/// Canonical forms of T_3, ..., T_n. Requires k = 2.
std::vector<CanonicalTree> tree_graph_path(const IteratedSequence& seq);

/// sigma[i] is the new label of leaf i (1-based, sigma[0] unused).
LabeledTree permute_tree(const std::vector<int>& sigma, const LabeledTree& T);
/// w'(i,j) = w(sigma^{-1}(i), sigma^{-1}(j)).
std::vector<int> permute_weight(const std::vector<int>& sigma, const std::vector<int>& w, int n);

// Serialisation --------------------------------------------------------------

/// {"n":6,"edges":[[1,7],...]}
std::string tree_to_json(const LabeledTree& T);
/// Also accepts the output of `tropseq tree --format json`.
LabeledTree tree_from_json(const std::string& text);
/// Graphviz body; leaves as boxes, internal vertices as points.
std::string tree_to_dot(const LabeledTree& T, const std::string& name = "T");

}  // namespace tropseq

#endif  // TROPSEQ_TREES_HPP
