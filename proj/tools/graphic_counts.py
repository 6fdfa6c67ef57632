#!/usr/bin/env python3
# Copyright 2026 The Authors.
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
"""Counts connected simple graphs from the networkx atlas.

Writes tests/golden/graphic_counts.json: for each (max_vertices, max_edges)
the number of isomorphism classes of connected simple graphs with 3 to
max_vertices vertices and at most max_edges edges.
"""

import json
import sys

import networkx as nx

CASES = [(3, 3), (4, 6), (5, 8), (5, 10), (6, 12), (6, 15), (7, 10), (7, 12)]


def main():
    atlas = [g for g in nx.graph_atlas_g() if g.number_of_nodes() >= 3 and nx.is_connected(g)]
    counts = []
    for v, e in CASES:
        n = sum(1 for g in atlas if g.number_of_nodes() <= v and g.number_of_edges() <= e)
        counts.append({"max_vertices": v, "max_edges": e, "count": n})
    json.dump({"source": "networkx graph_atlas_g", "counts": counts}, sys.stdout, indent=2)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
