# Copyright 2026 The seqclus Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Categorical sequence clustering with tree-based encodings."""

from ._seqclus import (
    Dataset,
    Dendrogram,
    InputError,
    distances,
    encode,
    estimate_k,
    gen_batch,
    presets,
    simulate,
    validate,
    ward,
)

__all__ = [
    "Dataset",
    "Dendrogram",
    "InputError",
    "cluster",
    "distances",
    "encode",
    "estimate_k",
    "gen_batch",
    "presets",
    "simulate",
    "validate",
    "ward",
]

__version__ = "1.0.0"


def cluster(dataset, k, method="ntreeclus-rf", **options):
    """Distances, Ward linkage and a k-cluster cut in one call."""
    res = distances(dataset, method=method, **options)
    tree = ward(res["distances"], dataset.ids)
    return tree.cut(k)
