// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BCCKIT_CORPUS_H_
#define BCCKIT_CORPUS_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bcckit/complex.h"
#include "bcckit/exact_matrix.h"
#include "bcckit/matroid.h"

namespace bcc {

// Instance streams are driven by std::mt19937_64 (the 64-bit Mersenne
// Twister with its standard default parameters), whose output sequence is
// fixed by the C++ standard for a given seed. Draws are taken with
// UniformIndex below rather than std::uniform_int_distribution, whose
// algorithm is implementation-defined.
using Rng = std::mt19937_64;
// Uniform in [0, bound) by rejection on the top of the 64-bit range.
std::uint64_t UniformIndex(Rng& rng, std::uint64_t bound);
// The BCCKIT_SEED environment variable, when set, replaces every seed.
std::uint64_t EffectiveSeed(std::uint64_t seed);

struct GraphFamily {
  int max_vertices = 0;
  int max_edges = 0;
};
struct UniformFamily {
  int max_n = 0;
};
struct SpRandomFamily {
  int count = 0;
  int max_size = 0;
  std::uint64_t seed = 0;
};
struct ParallelUmFamily {
  int count = 0;
  int max_blocks = 0;
  std::uint64_t seed = 0;
};
struct OrderBudget {
  int exhaustive_max = 7;  // all |E|! orders up to this size
  int samples = 20;        // random orders above it
  int sample_max = 10;     // no order sweeps above this size
};

struct CorpusSpec {
  std::optional<GraphFamily> graphs;
  std::optional<UniformFamily> uniform;
  std::optional<SpRandomFamily> sp_random;
  std::optional<ParallelUmFamily> parallel_um;
  OrderBudget orders;
  std::uint64_t seed = 1;  // for sampled orders and constructed pairs

  static CorpusSpec Default();
};

// Simple or multi-graph with labelled edges; vertices are 0..vertices-1.
struct Graph {
  int vertices = 0;
  std::vector<GraphEdge> edges;
  std::vector<Element> labels;

  Matroid ToMatroid() const;
  bool IsTwoConnected() const;
};

// One step of a series-parallel build: `added` is put in series or in
// parallel with the existing element `base`.
struct SpStep {
  bool series = false;
  Element base = 0;
  Element added = 0;
};
// Starts from the 2-element circuit on {first, second}.
struct SpTrace {
  Element first = 1;
  Element second = 2;
  std::vector<SpStep> steps;

  std::string ToString() const;
};
// Replays the trace with SeriesConnection and ParallelConnection.
Matroid ReplayTrace(const SpTrace& trace);

struct CorpusInstance {
  std::string family;
  std::string name;
  Matroid matroid;
  std::optional<Graph> graph;
  std::optional<SpTrace> trace;
};

// Connected simple graphs on 3..max_vertices vertices with at most
// max_edges edges, one per isomorphism class (canonical form: least edge
// mask over all vertex relabellings), ordered by vertices, edges, mask.
std::vector<Graph> GenGraphs(int max_vertices, int max_edges);
std::vector<CorpusInstance> GenGraphic(int max_vertices, int max_edges);
// U_{m,n} for 1 <= m <= n <= max_n.
std::vector<CorpusInstance> GenUniform(int max_n);
// Random series and parallel extensions of C_2 up to max_size elements,
// realized as multigraphs alongside the trace.
std::vector<CorpusInstance> GenSpRandom(int count, int max_size,
                                        std::uint64_t seed);
// Random iterated parallel connections of circuits U_{m,m+1}, 2 <= m <= 4,
// with at most max_blocks blocks, relabelled by a random permutation.
std::vector<CorpusInstance> GenParallelUm(int count, int max_blocks,
                                          std::uint64_t seed);
std::vector<CorpusInstance> BuildCorpus(const CorpusSpec& spec);

// Orders to sweep for a ground set under the budget: every permutation up
// to exhaustive_max, then `samples` random ones (the natural order first)
// up to sample_max, none above.
std::vector<Ordering> OrdersFor(ElementSet ground, const OrderBudget& budget,
                                Rng& rng);

// Brute-force minor search: some sequence of edge deletions and
// contractions leaves a graph whose simplification contains K4.
bool K4MinorFree(const Graph& graph);
// Repeatedly merges parallel pairs and series pairs (through a vertex of
// degree 2). Returns the reversed reduction as a build trace from C_2, or
// nullopt when the graph does not reduce to two parallel edges.
std::optional<SpTrace> SeriesParallelTrace(const Graph& graph);

// Independent recomputations: raw subset scan for the h-vector under the
// natural order, and all |E|! orders filtered by pairwise disjoint minimal
// broken circuits. They refuse more than 16 and 7 elements respectively.
std::vector<std::int64_t> OracleHVector(const Matroid& m);
std::vector<Ordering> OracleCiOrders(const Matroid& m);

// Column i is e_u - e_v for edge i, with the last vertex's row dropped.
// Requires a connected graph.
RationalMatrix IncidenceMatrix(const Graph& graph);
// r x n matrix with columns (1, t, ..., t^{r-1}), t = 1..n.
RationalMatrix VandermondeMatrix(int r, int n);

}  // namespace bcc

#endif  // BCCKIT_CORPUS_H_
