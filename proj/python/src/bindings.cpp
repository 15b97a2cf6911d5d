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

#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tropseq/cli.hpp"
#include "tropseq/index_sets.hpp"
#include "tropseq/plucker.hpp"
#include "tropseq/polytope.hpp"
#include "tropseq/representation.hpp"
#include "tropseq/sequence.hpp"
#include "tropseq/trees.hpp"

namespace py = pybind11;
using namespace tropseq;

namespace {

py::tuple run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Iterated sequences for Grassmannians: valuations, trees, polytope certificates";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

    py::class_<PositiveRoot>(m, "PositiveRoot")
        .def_readonly("i", &PositiveRoot::i)
        .def_readonly("j", &PositiveRoot::j)
        .def_property_readonly("height", &PositiveRoot::height)
        .def("__repr__", [](const PositiveRoot& r) {
            return "PositiveRoot(" + std::to_string(r.i) + ", " + std::to_string(r.j) + ")";
        });

    py::class_<IteratedSequence>(m, "IteratedSequence")
        .def_property_readonly("k", &IteratedSequence::k)
        .def_property_readonly("n", &IteratedSequence::n)
        .def_property_readonly("d", &IteratedSequence::d)
        .def_property_readonly("roots", &IteratedSequence::roots)
        .def_property_readonly("steps", &IteratedSequence::steps)
        .def("__str__", &IteratedSequence::to_string)
        .def("__repr__", [](const IteratedSequence& s) { return "IteratedSequence('" + s.to_string() + "')"; })
        .def("__eq__", [](const IteratedSequence& a, const IteratedSequence& b) { return a == b; });

    m.def("parse_steps", &parse_steps, py::arg("k"), py::arg("n"), py::arg("steps"));
    m.def("parse_sequence", &parse_sequence, py::arg("text"));
    m.def("count_iterated_sequences", &count_iterated_sequences, py::arg("n"));
    m.def("enumerate_iterated_sequences", &enumerate_iterated_sequences, py::arg("k"), py::arg("n"));
    m.def("sample_iterated_sequences", &sample_iterated_sequences, py::arg("k"), py::arg("n"), py::arg("sample"),
          py::arg("seed"));
    m.def("plucker_indices", &plucker_indices, py::arg("k"), py::arg("n"));

    m.def("valuation", &valuation_plucker, py::arg("sequence"), py::arg("J"));
    m.def(
        "weighting_matrix",
        [](const IteratedSequence& s) {
            const auto M = weighting_matrix(s);
            py::dict out;
            for (std::size_t a = 0; a < M.labels.size(); ++a) out[py::tuple(py::cast(M.labels[a]))] = M.columns[a];
            return out;
        },
        py::arg("sequence"), "Map from Pluecker index tuple to valuation vector.");

    m.def(
        "verify",
        [](const IteratedSequence& s) {
            const auto r = verify_proposition(s);
            return py::make_tuple(r.agreements(), r.checks.size());
        },
        py::arg("sequence"), "(agreements, relations) for the tree comparison.");

    m.def(
        "tree_cherries",
        [](const IteratedSequence& s) {
            std::vector<std::vector<Edge>> out;
            for (const auto& T : tree_from_sequence(s).levels) out.push_back(find_cherries(T));
            return out;
        },
        py::arg("sequence"), "Cherries of T_3, ..., T_n.");
    m.def(
        "tree_shapes",
        [](const IteratedSequence& s) {
            std::vector<std::string> out;
            for (const auto& c : tree_graph_path(s)) out.push_back(c.code);
            return out;
        },
        py::arg("sequence"));
    m.def(
        "count_trees",
        [](int n, bool labeled) {
            return labeled ? enumerate_labeled_trees(n).size() : enumerate_unlabeled_trees(n).size();
        },
        py::arg("n"), py::arg("labeled") = false);

    m.def(
        "polytope_report",
        [](const IteratedSequence& s) { return polytope_report_json(no_polytope_report(s)); }, py::arg("sequence"),
        "JSON certificate for the valuation polytope.");

    m.def("run_cli", &run, py::arg("args"), "Runs the command-line tool in-process: (exit code, stdout, stderr).");
}
