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

#include "tropseq/trees.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "tropseq/index_sets.hpp"

namespace tropseq {

// LabeledTree ---------------------------------------------------------------

LabeledTree LabeledTree::from_edges(int n, const std::vector<Edge>& edges) {
    if (n < 3) throw InputError("a trivalent tree needs at least 3 leaves");
    const int vertices = 2 * n - 2;
    if (edges.size() != static_cast<std::size_t>(vertices - 1)) {
        throw InputError("a trivalent tree with " + std::to_string(n) + " leaves has " +
                         std::to_string(vertices - 1) + " edges, got " + std::to_string(edges.size()));
    }
    LabeledTree T;
    T.n_ = n;
    T.adj_.assign(static_cast<std::size_t>(vertices + 1), {});
    for (const auto& [a, b] : edges) {
        if (a < 1 || a > vertices || b < 1 || b > vertices || a == b) {
            throw InputError("bad edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
        T.adj_[static_cast<std::size_t>(a)].push_back(b);
        T.adj_[static_cast<std::size_t>(b)].push_back(a);
    }
    for (int v = 1; v <= vertices; ++v) {
        auto& nb = T.adj_[static_cast<std::size_t>(v)];
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) throw InputError("repeated edge");
        const std::size_t want = v <= n ? 1 : 3;
        if (nb.size() != want) {
            throw InputError("vertex " + std::to_string(v) + " has degree " + std::to_string(nb.size()) +
                             ", expected " + std::to_string(want));
        }
    }
    // With |E| = |V| - 1, connectivity implies acyclicity.
    std::vector<bool> seen(static_cast<std::size_t>(vertices + 1), false);
    std::vector<int> stack{1};
    seen[1] = true;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : T.adj_[static_cast<std::size_t>(v)]) {
            if (seen[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = true;
            ++reached;
            stack.push_back(w);
        }
    }
    if (reached != vertices) throw InputError("tree is not connected");
    return T;
}

LabeledTree LabeledTree::star() { return from_edges(3, {{1, 4}, {2, 4}, {3, 4}}); }

int LabeledTree::parent(int leaf) const {
    if (!is_leaf(leaf)) throw InputError("vertex " + std::to_string(leaf) + " is not a leaf");
    return adj_[static_cast<std::size_t>(leaf)].front();
}

std::vector<Edge> LabeledTree::edges() const {
    std::vector<Edge> out;
    for (int v = 1; v <= vertex_count(); ++v)
        for (int w : adj_[static_cast<std::size_t>(v)])
            if (v < w) out.emplace_back(v, w);
    std::sort(out.begin(), out.end());
    return out;
}

LabeledTree attach_leaf(const LabeledTree& T, const Edge& edge) {
    const int n = T.n();
    auto shift = [n](int v) { return v <= n ? v : v + 1; };
    const auto [a, b] = std::minmax(edge.first, edge.second);
    bool found = false;
    std::vector<Edge> edges;
    for (const auto& e : T.edges()) {
        if (e.first == a && e.second == b) {
            found = true;
            continue;
        }
        edges.emplace_back(shift(e.first), shift(e.second));
    }
    if (!found) throw InputError("edge is not in the tree");
    const int mid = 2 * n;  // last internal vertex of the (n+1)-leaf tree
    edges.emplace_back(shift(a), mid);
    edges.emplace_back(shift(b), mid);
    edges.emplace_back(n + 1, mid);
    return LabeledTree::from_edges(n + 1, edges);
}

LabeledTree grow_cherry(const LabeledTree& T, int leaf) { return attach_leaf(T, {leaf, T.parent(leaf)}); }

TreeSequence tree_from_sequence(const IteratedSequence& seq) {
    if (seq.k() != 2) throw InputError("trees are associated with k=2 sequences only");
    std::vector<LabeledTree> levels{LabeledTree::star()};
    for (int l = 4; l <= seq.n(); ++l) levels.push_back(grow_cherry(levels.back(), seq.step_at_level(l)[0]));
    LabeledTree last = levels.back();
    return TreeSequence{std::move(last), std::move(levels)};
}

namespace {

std::vector<int> distances_from(const LabeledTree& T, int source) {
    std::vector<int> dist(static_cast<std::size_t>(T.vertex_count() + 1), -1);
    std::deque<int> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : T.neighbors(v)) {
            if (dist[static_cast<std::size_t>(w)] >= 0) continue;
            dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
            queue.push_back(w);
        }
    }
    return dist;
}

}  // namespace

std::vector<int> tree_weight_vector(const LabeledTree& T) {
    const int n = T.n();
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(binomial(n, 2)));
    for (int i = 1; i <= n; ++i) {
        const auto dist = distances_from(T, i);
        // The two leaf edges at the ends of the path are not internal.
        for (int j = i + 1; j <= n; ++j) w.push_back(-(dist[static_cast<std::size_t>(j)] - 2));
    }
    return w;
}

std::vector<Edge> find_cherries(const LabeledTree& T) {
    std::vector<Edge> out;
    for (int v = T.n() + 1; v <= T.vertex_count(); ++v) {
        std::vector<int> leaves;
        for (int w : T.neighbors(v))
            if (T.is_leaf(w)) leaves.push_back(w);
        for (std::size_t a = 0; a < leaves.size(); ++a)
            for (std::size_t b = a + 1; b < leaves.size(); ++b) out.emplace_back(leaves[a], leaves[b]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::set<std::vector<int>> leaf_splits(const LabeledTree& T) {
    std::set<std::vector<int>> out;
    for (const auto& [a, b] : T.edges()) {
        if (T.is_leaf(a) || T.is_leaf(b)) continue;
        // Leaves reachable from b without crossing the edge.
        std::vector<int> side;
        std::vector<int> stack{b};
        std::vector<bool> seen(static_cast<std::size_t>(T.vertex_count() + 1), false);
        seen[static_cast<std::size_t>(a)] = seen[static_cast<std::size_t>(b)] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (T.is_leaf(v)) side.push_back(v);
            for (int w : T.neighbors(v)) {
                if (seen[static_cast<std::size_t>(w)]) continue;
                seen[static_cast<std::size_t>(w)] = true;
                stack.push_back(w);
            }
        }
        std::sort(side.begin(), side.end());
        if (!side.empty() && side.front() == 1) {
            std::vector<int> complement;
            for (int leaf = 1; leaf <= T.n(); ++leaf)
                if (!std::binary_search(side.begin(), side.end(), leaf)) complement.push_back(leaf);
            side = std::move(complement);
        }
        out.insert(std::move(side));
    }
    return out;
}

bool same_labeled_tree(const LabeledTree& a, const LabeledTree& b) {
    return a.n() == b.n() && leaf_splits(a) == leaf_splits(b);
}

// Canonical form -------------------------------------------------------------

namespace {

std::string encode_rooted(const LabeledTree& T, int v, int from) {
    if (T.is_leaf(v) && from != 0) return "L";
    std::vector<std::string> parts;
    for (int w : T.neighbors(v))
        if (w != from) parts.push_back(encode_rooted(T, w, v));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const auto& p : parts) out += p;
    out += ')';
    return out;
}

// One or two centre vertices, found by peeling degree-1 layers.
std::vector<int> tree_center(const LabeledTree& T) {
    const int V = T.vertex_count();
    std::vector<int> degree(static_cast<std::size_t>(V + 1));
    std::vector<int> layer;
    for (int v = 1; v <= V; ++v) {
        degree[static_cast<std::size_t>(v)] = static_cast<int>(T.neighbors(v).size());
        if (degree[static_cast<std::size_t>(v)] == 1) layer.push_back(v);
    }
    std::vector<bool> removed(static_cast<std::size_t>(V + 1), false);
    int remaining = V;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<int> next;
        for (int v : layer) removed[static_cast<std::size_t>(v)] = true;
        for (int v : layer) {
            for (int w : T.neighbors(v)) {
                if (removed[static_cast<std::size_t>(w)]) continue;
                if (--degree[static_cast<std::size_t>(w)] == 1) next.push_back(w);
            }
        }
        layer = std::move(next);
    }
    std::vector<int> center;
    for (int v = 1; v <= V; ++v)
        if (!removed[static_cast<std::size_t>(v)]) center.push_back(v);
    return center;
}

}  // namespace

CanonicalTree canonical_form(const LabeledTree& T) {
    const auto center = tree_center(T);
    if (center.size() == 1) return {encode_rooted(T, center[0], 0)};
    std::string a = encode_rooted(T, center[0], center[1]);
    std::string b = encode_rooted(T, center[1], center[0]);
    if (b < a) std::swap(a, b);
    return {"[" + a + b + "]"};
}

// Enumeration ----------------------------------------------------------------

namespace {

void grow_all(const LabeledTree& T, int n, std::vector<LabeledTree>& out) {
    if (T.n() == n) {
        out.push_back(T);
        return;
    }
    for (const auto& e : T.edges()) grow_all(attach_leaf(T, e), n, out);
}

}  // namespace

std::vector<LabeledTree> enumerate_labeled_trees(int n) {
    if (n < 3) throw InputError("trees need n >= 3");
    std::vector<LabeledTree> out;
    grow_all(LabeledTree::star(), n, out);
    return out;
}

std::vector<LabeledTree> enumerate_unlabeled_trees(int n) {
    if (n < 3) throw InputError("trees need n >= 3");
    std::map<CanonicalTree, LabeledTree> level;
    level.emplace(canonical_form(LabeledTree::star()), LabeledTree::star());
    for (int l = 4; l <= n; ++l) {
        std::map<CanonicalTree, LabeledTree> next;
        for (const auto& [code, T] : level) {
            for (const auto& e : T.edges()) {
                LabeledTree grown = attach_leaf(T, e);
                next.try_emplace(canonical_form(grown), grown);
            }
        }
        level = std::move(next);
    }
    std::vector<LabeledTree> out;
    for (auto& [code, T] : level) out.push_back(T);
    return out;
}

// Converse construction -------------------------------------------------------

TreeRealization sequence_from_tree(const LabeledTree& T) {
    const int n = T.n();
    std::map<int, std::set<int>> adj;
    for (const auto& [a, b] : T.edges()) {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    auto is_leaf = [n](int v) { return v <= n; };

    std::vector<int> relabel(static_cast<std::size_t>(n + 1), 0);
    std::vector<int> partner(static_cast<std::size_t>(n + 1), 0);  // by new level label
    for (int level = n; level >= 4; --level) {
        Edge best{0, 0};
        for (const auto& [v, nb] : adj) {
            if (is_leaf(v)) continue;
            std::vector<int> leaves;
            for (int w : nb)
                if (is_leaf(w)) leaves.push_back(w);
            for (std::size_t a = 0; a < leaves.size(); ++a)
                for (std::size_t b = a + 1; b < leaves.size(); ++b) {
                    Edge cand{leaves[a], leaves[b]};
                    if (best.first == 0 || cand < best) best = cand;
                }
        }
        if (best.first == 0) throw std::logic_error("trivalent tree without a cherry");
        const int removed = best.second;
        const int p = *adj[removed].begin();
        std::vector<int> rest;
        for (int w : adj[p])
            if (w != removed) rest.push_back(w);
        adj.erase(removed);
        adj.erase(p);
        adj[rest[0]].erase(p);
        adj[rest[1]].erase(p);
        adj[rest[0]].insert(rest[1]);
        adj[rest[1]].insert(rest[0]);
        relabel[static_cast<std::size_t>(removed)] = level;
        partner[static_cast<std::size_t>(level)] = best.first;
    }
    int next_label = 1;
    for (int leaf = 1; leaf <= n; ++leaf)
        if (relabel[static_cast<std::size_t>(leaf)] == 0) relabel[static_cast<std::size_t>(leaf)] = next_label++;

    std::vector<Step> steps;
    for (int level = n; level >= 4; --level) {
        const int i = relabel[static_cast<std::size_t>(partner[static_cast<std::size_t>(level)])];
        const int j = i == 1 ? 2 : 1;
        steps.push_back({i, j});
    }
    steps.push_back({1, 2});
    return TreeRealization{build_iterated_sequence(2, n, std::move(steps)), std::move(relabel)};
}

std::vector<CanonicalTree> tree_graph_path(const IteratedSequence& seq) {
    std::vector<CanonicalTree> out;
    for (const auto& T : tree_from_sequence(seq).levels) out.push_back(canonical_form(T));
    return out;
}

// Relabelling ------------------------------------------------------------------

namespace {

std::vector<int> checked_inverse(const std::vector<int>& sigma, int n) {
    if (sigma.size() != static_cast<std::size_t>(n + 1)) throw InputError("permutation has wrong size");
    std::vector<int> inv(static_cast<std::size_t>(n + 1), 0);
    for (int i = 1; i <= n; ++i) {
        const int s = sigma[static_cast<std::size_t>(i)];
        if (s < 1 || s > n || inv[static_cast<std::size_t>(s)] != 0) throw InputError("not a permutation");
        inv[static_cast<std::size_t>(s)] = i;
    }
    return inv;
}

}  // namespace

LabeledTree permute_tree(const std::vector<int>& sigma, const LabeledTree& T) {
    const int n = T.n();
    checked_inverse(sigma, n);
    auto map = [&](int v) { return v <= n ? sigma[static_cast<std::size_t>(v)] : v; };
    std::vector<Edge> edges;
    for (const auto& [a, b] : T.edges()) edges.emplace_back(map(a), map(b));
    return LabeledTree::from_edges(n, edges);
}

std::vector<int> permute_weight(const std::vector<int>& sigma, const std::vector<int>& w, int n) {
    const auto inv = checked_inverse(sigma, n);
    if (w.size() != static_cast<std::size_t>(binomial(n, 2))) throw InputError("weight vector has wrong size");
    std::vector<int> out;
    out.reserve(w.size());
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            auto [a, b] = std::minmax(inv[static_cast<std::size_t>(i)], inv[static_cast<std::size_t>(j)]);
            out.push_back(w[index_position({a, b}, n)]);
        }
    }
    return out;
}

// Serialisation -----------------------------------------------------------------

std::string tree_to_json(const LabeledTree& T) {
    nlohmann::json j;
    j["n"] = T.n();
    j["edges"] = nlohmann::json::array();
    for (const auto& [a, b] : T.edges()) j["edges"].push_back({a, b});
    return j.dump();
}

LabeledTree tree_from_json(const std::string& text) {
    try {
        auto j = nlohmann::json::parse(text);
        if (j.is_object() && j.contains("tree") && !j.contains("edges")) j = j.at("tree");
        const int n = j.at("n").get<int>();
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw InputError("edge must be a pair");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        return LabeledTree::from_edges(n, edges);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("bad tree JSON: ") + e.what());
    }
}

std::string tree_to_dot(const LabeledTree& T, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    out << "  node [shape=point];\n";
    for (int leaf = 1; leaf <= T.n(); ++leaf) out << "  " << name << "_" << leaf << " [shape=box,label=\"" << leaf << "\"];\n";
    for (int v = T.n() + 1; v <= T.vertex_count(); ++v) out << "  " << name << "_" << v << ";\n";
    for (const auto& [a, b] : T.edges()) out << "  " << name << "_" << a << " -- " << name << "_" << b << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace tropseq
