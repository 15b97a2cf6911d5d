# Copyright 2026 The tropseq Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Python bindings for the tropseq library."""

import json

from ._core import (
    InputError,
    IteratedSequence,
    PositiveRoot,
    count_iterated_sequences,
    count_trees,
    enumerate_iterated_sequences,
    parse_sequence,
    parse_steps,
    plucker_indices,
    run_cli,
    sample_iterated_sequences,
    tree_cherries,
    tree_shapes,
    valuation,
    verify,
    weighting_matrix,
)
from ._core import polytope_report as _polytope_report

__all__ = [
    "InputError",
    "IteratedSequence",
    "PositiveRoot",
    "count_iterated_sequences",
    "count_trees",
    "enumerate_iterated_sequences",
    "parse_sequence",
    "parse_steps",
    "plucker_indices",
    "polytope_report",
    "run_cli",
    "sample_iterated_sequences",
    "tree_cherries",
    "tree_shapes",
    "valuation",
    "verify",
    "weighting_matrix",
]


def polytope_report(sequence):
    """Certificate for conv(v_S(p_J)) as a dict."""
    return json.loads(_polytope_report(sequence))
