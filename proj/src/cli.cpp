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

#include "tropseq/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tropseq/index_sets.hpp"
#include "tropseq/plucker.hpp"
#include "tropseq/polytope.hpp"
#include "tropseq/representation.hpp"
#include "tropseq/sequence.hpp"
#include "tropseq/sweep.hpp"
#include "tropseq/trees.hpp"

namespace tropseq {

namespace {

/// Raised when a computed certificate fails; maps to exit code 3.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    int k = 2;
    int n = 0;
    std::string steps;
    std::string sequence;
    std::string sequence_file;
    std::string tree_file;
    std::string format = "text";
    bool oracle = false;
    bool path = false;
    bool table1_order = false;
    bool labeled = false;
    bool polytope = false;
    std::size_t sample = 0;
    std::optional<std::uint64_t> seed;
    int jobs = 1;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

IteratedSequence load_sequence(const RunConfig& cfg) {
    const int sources = !cfg.steps.empty() + !cfg.sequence.empty() + !cfg.sequence_file.empty();
    if (sources != 1) throw InputError("give exactly one of --steps, --sequence, --sequence-file");
    if (!cfg.steps.empty()) return parse_steps(cfg.k, cfg.n, cfg.steps);
    if (!cfg.sequence.empty()) return parse_sequence(cfg.sequence);
    return parse_sequence(read_file(cfg.sequence_file));
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (cfg.format == f) return;
    throw InputError("format " + cfg.format + " is not available for this command");
}

std::string vector_string(const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out + ")";
}

std::string root_label(const PositiveRoot& r) { return std::to_string(r.i) + "." + std::to_string(r.j); }

/// Column positions in output order: lexicographic, or sorted by reversed
/// tuple (12, 13, 23, 14, 24, 34 for Gr(2,4)).
std::vector<std::size_t> output_order(const std::vector<IndexTuple>& labels, bool table1) {
    std::vector<std::size_t> order(labels.size());
    for (std::size_t a = 0; a < order.size(); ++a) order[a] = a;
    if (table1) {
        std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            return std::lexicographical_compare(labels[x].rbegin(), labels[x].rend(), labels[y].rbegin(), labels[y].rend());
        });
    }
    return order;
}

// Commands ------------------------------------------------------------------

int cmd_valuation(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    require_format(cfg, {"text", "csv", "json"});
    const IteratedSequence seq = load_sequence(cfg);
    const WeightingMatrix M = weighting_matrix(seq);
    if (cfg.oracle) {
        const OracleComparison cmp = compare_with_oracle(seq);
        if (!cmp.ok()) {
            for (const auto& name : cmp.table_mismatches) err << "oracle: coefficient table differs for " << name << '\n';
            for (const auto& name : cmp.valuation_mismatches) err << "oracle: valuation differs for " << name << '\n';
            throw VerificationError("oracle cross-check failed");
        }
    }
    const auto order = output_order(M.labels, cfg.table1_order);
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["sequence"] = nlohmann::json::parse(sequence_to_json(seq));
        auto roots = nlohmann::json::array();
        for (const auto& r : seq.roots()) roots.push_back({r.i, r.j});
        j["roots"] = roots;
        auto vals = nlohmann::json::array();
        for (auto a : order) vals.push_back({{"J", M.labels[a]}, {"valuation", M.columns[a]}});
        j["valuations"] = vals;
        if (cfg.oracle) j["oracle"] = "agree";
        out << j.dump() << '\n';
    } else if (cfg.format == "csv") {
        out << "root";
        for (auto a : order) out << ',' << index_label(M.labels[a]);
        out << '\n';
        for (int t = 0; t < seq.d(); ++t) {
            out << root_label(seq.root(t));
            for (auto a : order) out << ',' << M.entry(t, static_cast<int>(a));
            out << '\n';
        }
    } else {
        out << "# " << seq.to_string() << '\n';
        out << "# roots";
        for (const auto& r : seq.roots()) out << ' ' << root_label(r);
        out << '\n';
        for (auto a : order) out << 'p' << index_compact(M.labels[a]) << ' ' << vector_string(M.columns[a]) << '\n';
    }
    return kExitOk;
}

std::string cherries_string(const LabeledTree& T) {
    const auto cherries = find_cherries(T);
    if (cherries.empty()) return "none";
    std::string out;
    for (std::size_t a = 0; a < cherries.size(); ++a) {
        if (a) out += ',';
        out += "{" + std::to_string(cherries[a].first) + "," + std::to_string(cherries[a].second) + "}";
    }
    return out;
}

int cmd_tree(const RunConfig& cfg, std::ostream& out) {
    require_format(cfg, {"text", "json", "dot"});
    const IteratedSequence seq = load_sequence(cfg);
    if (seq.k() != 2) throw InputError("tree needs k=2");
    const TreeSequence ts = tree_from_sequence(seq);
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["sequence"] = nlohmann::json::parse(sequence_to_json(seq));
        j["tree"] = nlohmann::json::parse(tree_to_json(ts.tree));
        auto levels = nlohmann::ordered_json::array();
        for (const auto& T : ts.levels) {
            nlohmann::ordered_json l;
            l["level"] = T.n();
            l["edges"] = T.edges();
            l["cherries"] = find_cherries(T);
            l["shape"] = canonical_form(T).code;
            levels.push_back(l);
        }
        j["levels"] = levels;
        out << j.dump() << '\n';
    } else if (cfg.format == "dot") {
        for (const auto& T : ts.levels) out << tree_to_dot(T, "T" + std::to_string(T.n()));
    } else if (cfg.path) {
        const auto path = tree_graph_path(seq);
        out << "# " << seq.to_string() << '\n';
        for (std::size_t a = 0; a < path.size(); ++a) out << 'T' << (a + 3) << ' ' << path[a].code << '\n';
    } else {
        out << "# " << seq.to_string() << '\n';
        for (const auto& T : ts.levels)
            out << 'T' << T.n() << " cherries=" << cherries_string(T) << " shape=" << canonical_form(T).code << '\n';
        out << "edges";
        for (const auto& [a, b] : ts.tree.edges()) out << ' ' << a << '-' << b;
        out << '\n';
    }
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    require_format(cfg, {"text", "json"});
    const IteratedSequence seq = load_sequence(cfg);
    const PropositionReport report = verify_proposition(seq);
    if (cfg.format == "json") {
        out << proposition_report_json(report) << '\n';
    } else {
        out << "# " << seq.to_string() << '\n';
        for (const auto& c : report.checks) {
            out << c.relation.tag() << " matrix: " << c.init_matrix.to_string() << " | tree: " << c.init_tree.to_string()
                << " | " << (c.agree ? "agree" : "DISAGREE") << '\n';
        }
        out << report.agreements() << '/' << report.checks.size() << " agree\n";
    }
    if (!report.all_agree()) throw VerificationError("initial forms disagree");
    return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    require_format(cfg, {"text", "json"});
    if (cfg.n < cfg.k + 1) throw InputError("sweep needs --n > k");
    if (cfg.jobs < 1) throw InputError("--jobs must be positive");
    std::vector<IteratedSequence> sequences;
    if (cfg.sample > 0) {
        if (!cfg.seed) throw InputError("--sample needs --seed");
        sequences = sample_iterated_sequences(cfg.k, cfg.n, cfg.sample, *cfg.seed);
    } else {
        if (cfg.k != 2) throw InputError("exhaustive sweeps need k=2; use --sample for other k");
        sequences = enumerate_iterated_sequences(cfg.k, cfg.n);
    }
    SweepOptions options;
    options.oracle = cfg.oracle;
    options.polytope = cfg.polytope;
    options.jobs = cfg.jobs;
    const auto start = std::chrono::steady_clock::now();
    const SweepSummary summary = run_sweep(sequences, options);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    // Timing goes to stderr so stdout stays identical across runs and worker counts.
    err << "sweep: " << summary.sequences << " sequences in " << seconds << " s (jobs=" << cfg.jobs << ")\n";
    if (cfg.format == "json") {
        auto j = nlohmann::ordered_json::parse(sweep_summary_json(summary));
        if (cfg.sample > 0) {
            j["sample"] = cfg.sample;
            j["seed"] = *cfg.seed;
        }
        out << j.dump() << '\n';
    } else {
        if (cfg.sample > 0) out << "# sample=" << cfg.sample << " seed=" << *cfg.seed << '\n';
        out << sweep_summary_text(summary);
    }
    if (!summary.ok()) throw VerificationError("sweep found failures");
    return kExitOk;
}

int cmd_polytope(const RunConfig& cfg, std::ostream& out) {
    require_format(cfg, {"text", "json"});
    const IteratedSequence seq = load_sequence(cfg);
    const PolytopeReport report = no_polytope_report(seq);
    if (cfg.format == "json") {
        out << polytope_report_json(report) << '\n';
    } else {
        out << "# " << seq.to_string() << '\n';
        for (auto a : output_order(report.labels, cfg.table1_order)) {
            out << 'p' << index_compact(report.labels[a]) << ' ' << vector_string(report.vertices[a]) << ' '
                << (report.vertex_certified[a] ? "vertex" : "NOT-A-VERTEX") << '\n';
        }
        out << "vertices=" << report.vertices.size() << " dim=" << report.dim << " ambient=" << report.ambient
            << " in_hypercube=" << (report.in_hypercube ? "true" : "false") << " interior_lattice_points=";
        if (report.interior.points.empty()) out << "none";
        for (const auto& p : report.interior.points) out << vector_string(p);
        out << '\n';
        for (const auto& f : report.failures) out << "FAIL " << f << '\n';
    }
    if (!report.ok()) throw VerificationError("polytope certificate failed");
    return kExitOk;
}

int cmd_trees(const RunConfig& cfg, std::ostream& out) {
    require_format(cfg, {"text", "json"});
    if (cfg.n < 3) throw InputError("trees needs --n >= 3");
    const auto trees = cfg.labeled ? enumerate_labeled_trees(cfg.n) : enumerate_unlabeled_trees(cfg.n);
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["n"] = cfg.n;
        j["labeled"] = cfg.labeled;
        j["count"] = trees.size();
        auto arr = nlohmann::json::array();
        for (const auto& T : trees) arr.push_back(nlohmann::json::parse(tree_to_json(T)));
        j["trees"] = arr;
        out << j.dump() << '\n';
    } else {
        out << "n=" << cfg.n << ' ' << (cfg.labeled ? "labeled" : "unlabeled") << '=' << trees.size() << '\n';
        for (const auto& T : trees) {
            if (cfg.labeled) out << "splits=" << nlohmann::json(leaf_splits(T)).dump() << '\n';
            else out << canonical_form(T).code << '\n';
        }
    }
    return kExitOk;
}

int cmd_tree_to_seq(const RunConfig& cfg, std::ostream& out) {
    require_format(cfg, {"text", "json"});
    if (cfg.tree_file.empty()) throw InputError("tree-to-seq needs --tree FILE");
    const LabeledTree T = tree_from_json(read_file(cfg.tree_file));
    const TreeRealization real = sequence_from_tree(T);
    const bool roundtrip = same_labeled_tree(tree_from_sequence(real.sequence).tree, permute_tree(real.relabel, T));
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["sequence"] = nlohmann::json::parse(sequence_to_json(real.sequence));
        j["relabel"] = std::vector<int>(real.relabel.begin() + 1, real.relabel.end());
        j["roundtrip"] = roundtrip;
        out << j.dump() << '\n';
    } else {
        out << real.sequence.to_string() << '\n';
        out << "relabel";
        for (int leaf = 1; leaf <= T.n(); ++leaf) out << ' ' << leaf << "->" << real.relabel[static_cast<std::size_t>(leaf)];
        out << '\n';
        out << "roundtrip " << (roundtrip ? "ok" : "FAILED") << '\n';
    }
    if (!roundtrip) throw VerificationError("tree-to-seq roundtrip failed");
    return kExitOk;
}

void add_sequence_options(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--k", cfg.k, "Grassmannian rank k")->check(CLI::PositiveNumber);
    sub->add_option("--n", cfg.n, "Ambient dimension n (inferred from --steps when omitted)");
    sub->add_option("--steps", cfg.steps, "Steps from level n down, e.g. 4.5;2.3;2.3;1.2");
    sub->add_option("--sequence", cfg.sequence, "Sequence as text or JSON");
    sub->add_option("--sequence-file", cfg.sequence_file, "File holding a sequence");
}

void add_format_option(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "dot", "text"}));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Valuations, tree cones and polytope certificates for iterated sequences of Grassmannians",
                 "tropseq"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* valuation = app.add_subcommand("valuation", "Print the valuations of all Pluecker coordinates");
    add_sequence_options(valuation, cfg);
    add_format_option(valuation, cfg);
    valuation->add_flag("--oracle", cfg.oracle, "Cross-check against generic minors");
    valuation->add_flag("--table1-order", cfg.table1_order, "Order rows as 12,13,23,14,24,34,...");

    auto* tree = app.add_subcommand("tree", "Build the trivalent tree of a Gr(2,n) sequence");
    add_sequence_options(tree, cfg);
    add_format_option(tree, cfg);
    tree->add_flag("--path", cfg.path, "Print the path of unlabelled shapes T3, ..., Tn");

    auto* verify = app.add_subcommand("verify", "Compare initial forms of the weighting matrix and the tree");
    add_sequence_options(verify, cfg);
    add_format_option(verify, cfg);

    auto* sweep = app.add_subcommand("sweep", "Check all (or sampled) sequences for given n");
    sweep->add_option("--k", cfg.k, "Grassmannian rank k")->check(CLI::PositiveNumber);
    sweep->add_option("--n", cfg.n, "Ambient dimension n")->required();
    sweep->add_option("--sample", cfg.sample, "Number of random sequences instead of all");
    sweep->add_option("--seed", cfg.seed, "Seed for --sample");
    sweep->add_option("--jobs", cfg.jobs, "Worker threads");
    sweep->add_flag("--oracle", cfg.oracle, "Also compare against generic minors");
    sweep->add_flag("--polytope", cfg.polytope, "Also certify the valuation polytopes");
    add_format_option(sweep, cfg);

    auto* polytope = app.add_subcommand("polytope", "Certify the valuation polytope");
    add_sequence_options(polytope, cfg);
    add_format_option(polytope, cfg);
    polytope->add_flag("--table1-order", cfg.table1_order, "Order rows as 12,13,23,14,24,34,...");

    auto* trees = app.add_subcommand("trees", "Enumerate trivalent trees with n leaves");
    trees->add_option("--n", cfg.n, "Number of leaves")->required();
    trees->add_flag("--labeled", cfg.labeled, "Leaf-labelled trees instead of shapes");
    add_format_option(trees, cfg);

    auto* to_seq = app.add_subcommand("tree-to-seq", "Find an iterated sequence realising a tree");
    to_seq->add_option("--tree", cfg.tree_file, "Tree JSON file")->required();
    add_format_option(to_seq, cfg);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*valuation) return cmd_valuation(cfg, out, err);
        if (*tree) return cmd_tree(cfg, out);
        if (*verify) return cmd_verify(cfg, out);
        if (*sweep) return cmd_sweep(cfg, out, err);
        if (*polytope) return cmd_polytope(cfg, out);
        if (*trees) return cmd_trees(cfg, out);
        if (*to_seq) return cmd_tree_to_seq(cfg, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const VerificationError& e) {
        err << "verification failed: " << e.what() << '\n';
        return kExitVerification;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitVerification;
    }
    return kExitInput;
}

}  // namespace tropseq
