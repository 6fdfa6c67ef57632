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

#include "bcckit/corpus.h"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_set>

#include "bcckit/constructions.h"
#include "bcckit/error.h"

namespace bcc {

std::uint64_t UniformIndex(Rng& rng, std::uint64_t bound) {
  Require(bound > 0, "empty range");
  const std::uint64_t limit = Rng::max() - Rng::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

std::uint64_t EffectiveSeed(std::uint64_t seed) {
  const char* env = std::getenv("BCCKIT_SEED");
  if (env == nullptr || *env == '\0') return seed;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(env, &end, 10);
  if (end == nullptr || *end != '\0') {
    Fail(ErrorKind::kSchema, "BCCKIT_SEED must be a decimal integer");
  }
  return value;
}

CorpusSpec CorpusSpec::Default() {
  CorpusSpec spec;
  spec.graphs = GraphFamily{7, 12};
  spec.uniform = UniformFamily{10};
  spec.sp_random = SpRandomFamily{80, 16, 20240601};
  spec.parallel_um = ParallelUmFamily{60, 5, 7};
  spec.seed = 1;
  return spec;
}

Matroid Graph::ToMatroid() const {
  return Matroid::GraphicLabelled(vertices, edges, labels);
}

bool Graph::IsTwoConnected() const {
  if (edges.size() < 2) return false;
  for (const auto& e : edges) {
    if (e.u == e.v) return false;
  }
  // Every vertex other than `skip` lies in one component of the graph
  // with `skip` removed.
  auto connected_without = [&](int skip) {
    std::vector<int> parent(vertices);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& e : edges) {
      if (e.u != skip && e.v != skip) parent[find(e.u)] = find(e.v);
    }
    int root = -1;
    for (int v = 0; v < vertices; ++v) {
      if (v == skip) continue;
      if (root < 0) root = find(v);
      if (find(v) != root) return false;
    }
    return true;
  };
  if (!connected_without(-1)) return false;
  for (int v = 0; vertices > 2 && v < vertices; ++v) {
    if (!connected_without(v)) return false;
  }
  return true;
}

std::string SpTrace::ToString() const {
  std::ostringstream out;
  out << "C2{" << first << "," << second << "}";
  for (const auto& s : steps) {
    out << (s.series ? " S(" : " P(") << s.base << "," << s.added << ")";
  }
  return out.str();
}

Matroid ReplayTrace(const SpTrace& trace) {
  Matroid m = Matroid::UniformOn(1, Singleton(trace.first) | Singleton(trace.second));
  for (const auto& step : trace.steps) {
    const ConnectionSpec spec{
        m, Matroid::UniformOn(1, Singleton(step.base) | Singleton(step.added)),
        step.base};
    m = step.series ? SeriesConnection(spec) : ParallelConnection(spec);
  }
  return m;
}

namespace {

std::vector<std::pair<int, int>> Pairs(int v) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < v; ++i) {
    for (int j = i + 1; j < v; ++j) out.emplace_back(i, j);
  }
  return out;
}

bool MaskConnected(std::uint32_t mask, const std::vector<std::pair<int, int>>& pairs,
                   int v) {
  std::uint32_t reached = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (!(mask >> k & 1)) continue;
      const std::uint32_t ends = (1u << pairs[k].first) | (1u << pairs[k].second);
      const std::uint32_t touched = reached & ends;
      if (touched != 0 && touched != ends) {
        reached |= ends;
        grew = true;
      }
    }
  }
  return reached == (1u << v) - 1;
}

}  // namespace

std::vector<Graph> GenGraphs(int max_vertices, int max_edges) {
  Require(max_vertices <= 7, "graph enumeration is limited to 7 vertices");
  Require(max_edges <= kGroundCap, "graph enumeration edge bound above cap");
  std::vector<Graph> out;
  for (int v = 3; v <= max_vertices; ++v) {
    const auto pairs = Pairs(v);
    std::vector<std::vector<int>> index(v, std::vector<int>(v));
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      index[pairs[k].first][pairs[k].second] = static_cast<int>(k);
      index[pairs[k].second][pairs[k].first] = static_cast<int>(k);
    }
    // Image of each pair slot under each vertex permutation.
    std::vector<std::vector<int>> images;
    std::vector<int> perm(v);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> image(pairs.size());
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        image[k] = index[perm[pairs[k].first]][perm[pairs[k].second]];
      }
      images.push_back(std::move(image));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<std::uint32_t> found;
    const std::uint32_t total = 1u << pairs.size();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
      const int edges = std::popcount(mask);
      if (edges < v - 1 || edges > max_edges) continue;
      if (!MaskConnected(mask, pairs, v)) continue;
      bool canonical = true;
      for (const auto& image : images) {
        std::uint32_t mapped = 0;
        for (std::size_t k = 0; k < pairs.size(); ++k) {
          if (mask >> k & 1) mapped |= 1u << image[k];
        }
        if (mapped < mask) {
          canonical = false;
          break;
        }
      }
      if (canonical) found.push_back(mask);
    }
    std::stable_sort(found.begin(), found.end(),
                     [](std::uint32_t a, std::uint32_t b) {
                       return std::popcount(a) < std::popcount(b);
                     });
    for (std::uint32_t mask : found) {
      Graph g;
      g.vertices = v;
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (mask >> k & 1) {
          g.edges.push_back({pairs[k].first, pairs[k].second});
          g.labels.push_back(static_cast<Element>(g.edges.size()));
        }
      }
      out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<CorpusInstance> GenGraphic(int max_vertices, int max_edges) {
  std::vector<CorpusInstance> out;
  for (Graph& g : GenGraphs(max_vertices, max_edges)) {
    std::ostringstream name;
    name << "G" << g.vertices << ":";
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      name << (i ? "," : "") << g.edges[i].u << g.edges[i].v;
    }
    CorpusInstance inst{"graphs", name.str(), g.ToMatroid(), std::move(g),
                        std::nullopt};
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<CorpusInstance> GenUniform(int max_n) {
  CheckGroundCap(max_n);
  std::vector<CorpusInstance> out;
  for (int n = 1; n <= max_n; ++n) {
    for (int m = 1; m <= n; ++m) {
      out.push_back({"uniform",
                     "U(" + std::to_string(m) + "," + std::to_string(n) + ")",
                     Matroid::Uniform(m, n), std::nullopt, std::nullopt});
    }
  }
  return out;
}

std::vector<CorpusInstance> GenSpRandom(int count, int max_size,
                                        std::uint64_t seed) {
  Require(max_size >= 2, "series-parallel instances need at least 2 elements");
  CheckGroundCap(max_size);
  Rng rng(EffectiveSeed(seed));
  std::vector<CorpusInstance> out;
  for (int i = 0; i < count; ++i) {
    const int target = 2 + static_cast<int>(UniformIndex(rng, max_size - 1));
    Graph g{2, {{0, 1}, {0, 1}}, {1, 2}};
    SpTrace trace;
    for (Element added = 3; added <= target; ++added) {
      const std::size_t pick = UniformIndex(rng, g.edges.size());
      const bool series = UniformIndex(rng, 2) == 1;
      const Element base = g.labels[pick];
      if (series) {
        const int w = g.vertices++;
        const int v = g.edges[pick].v;
        g.edges[pick].v = w;
        g.edges.push_back({w, v});
      } else {
        g.edges.push_back(g.edges[pick]);
      }
      g.labels.push_back(added);
      trace.steps.push_back({series, base, added});
    }
    Matroid m = ReplayTrace(trace);
    out.push_back({"sp_random", "sp#" + std::to_string(i) + " " + trace.ToString(),
                   std::move(m), std::move(g), std::move(trace)});
  }
  return out;
}

std::vector<CorpusInstance> GenParallelUm(int count, int max_blocks,
                                          std::uint64_t seed) {
  Require(max_blocks >= 1, "need at least one block");
  Rng rng(EffectiveSeed(seed) ^ 0x9e3779b97f4a7c15ULL);
  std::vector<CorpusInstance> out;
  for (int i = 0; i < count; ++i) {
    const int blocks = 1 + static_cast<int>(UniformIndex(rng, max_blocks));
    int m0 = 2 + static_cast<int>(UniformIndex(rng, 3));
    Matroid cur = Matroid::Uniform(m0, m0 + 1);
    std::string desc = "U(" + std::to_string(m0) + "," + std::to_string(m0 + 1) + ")";
    for (int b = 1; b < blocks; ++b) {
      const int m = 2 + static_cast<int>(UniformIndex(rng, 3));
      if (cur.size() + m > 16) break;
      const auto elems = Elements(cur.ground());
      const Element e = elems[UniformIndex(rng, elems.size())];
      ElementSet block = Singleton(e);
      Element next = MaxElement(cur.ground()) + 1;
      for (int k = 0; k < m; ++k) block |= Singleton(next++);
      cur = ParallelConnection({cur, Matroid::UniformOn(m, block), e});
      desc = "P(" + desc + ",U(" + std::to_string(m) + "," +
             std::to_string(m + 1) + ");" + std::to_string(e) + ")";
    }
    if (UniformIndex(rng, 4) == 0 && cur.size() < 16) {
      cur = DirectSum(cur, Matroid::Uniform(1, 1, MaxElement(cur.ground()) + 1));
      desc = "sum(" + desc + ",U(1,1))";
    }
    // Random relabelling onto 1..n so ground order carries no structure.
    std::vector<Element> targets(cur.size());
    std::iota(targets.begin(), targets.end(), 1);
    for (std::size_t k = targets.size(); k > 1; --k) {
      std::swap(targets[k - 1], targets[UniformIndex(rng, k)]);
    }
    std::map<Element, Element> map;
    const auto elems = Elements(cur.ground());
    for (std::size_t k = 0; k < elems.size(); ++k) map[elems[k]] = targets[k];
    out.push_back({"parallel_um", "pu#" + std::to_string(i) + " " + desc,
                   Relabel(cur, map), std::nullopt, std::nullopt});
  }
  return out;
}

std::vector<CorpusInstance> BuildCorpus(const CorpusSpec& spec) {
  std::vector<CorpusInstance> out;
  auto append = [&](std::vector<CorpusInstance> part) {
    for (auto& inst : part) out.push_back(std::move(inst));
  };
  if (spec.graphs) append(GenGraphic(spec.graphs->max_vertices, spec.graphs->max_edges));
  if (spec.uniform) append(GenUniform(spec.uniform->max_n));
  if (spec.sp_random) {
    append(GenSpRandom(spec.sp_random->count, spec.sp_random->max_size,
                       spec.sp_random->seed));
  }
  if (spec.parallel_um) {
    append(GenParallelUm(spec.parallel_um->count, spec.parallel_um->max_blocks,
                         spec.parallel_um->seed));
  }
  return out;
}

std::vector<Ordering> OrdersFor(ElementSet ground, const OrderBudget& budget,
                                Rng& rng) {
  std::vector<Element> seq = Elements(ground);
  std::vector<Ordering> out;
  const int n = static_cast<int>(seq.size());
  if (n <= budget.exhaustive_max) {
    do {
      out.push_back(Ordering::FromSequence(ground, seq));
    } while (std::next_permutation(seq.begin(), seq.end()));
    return out;
  }
  if (n > budget.sample_max) return out;
  out.push_back(Ordering::Natural(ground));
  for (int i = 1; i < budget.samples; ++i) {
    for (std::size_t k = seq.size(); k > 1; --k) {
      std::swap(seq[k - 1], seq[UniformIndex(rng, k)]);
    }
    out.push_back(Ordering::FromSequence(ground, seq));
  }
  return out;
}

namespace {

// Simple graph on compact vertex ids with degree-one vertices stripped;
// edges as sorted (u, v) pairs with u < v.
using EdgeList = std::vector<std::pair<int, int>>;

EdgeList Normalize(EdgeList edges) {
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
  }
  std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<int, int> degree;
    for (const auto& [u, v] : edges) {
      ++degree[u];
      ++degree[v];
    }
    const auto before = edges.size();
    std::erase_if(edges, [&](const auto& e) {
      return degree[e.first] == 1 || degree[e.second] == 1;
    });
    changed = edges.size() != before;
  }
  std::map<int, int> rename;
  for (const auto& [u, v] : edges) {
    rename.emplace(u, 0);
    rename.emplace(v, 0);
  }
  int next = 0;
  for (auto& [old, fresh] : rename) fresh = next++;
  for (auto& [u, v] : edges) {
    u = rename[u];
    v = rename[v];
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

int VertexCount(const EdgeList& edges) {
  int n = 0;
  for (const auto& [u, v] : edges) n = std::max({n, u + 1, v + 1});
  return n;
}

bool HasK4Subgraph(const EdgeList& edges) {
  const int n = VertexCount(edges);
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& [u, v] : edges) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!(adj[a] >> b & 1)) continue;
      const std::uint32_t common = adj[a] & adj[b] & ~((2u << b) - 1);
      for (std::uint32_t rest = common; rest != 0; rest &= rest - 1) {
        const int c = std::countr_zero(rest);
        if ((adj[c] & common & ~((2u << c) - 1)) != 0) return true;
      }
    }
  }
  return false;
}

std::string Key(const EdgeList& edges) {
  std::string key;
  for (const auto& [u, v] : edges) {
    key.push_back(static_cast<char>(u));
    key.push_back(static_cast<char>(v));
  }
  return key;
}

bool HasK4Minor(const EdgeList& edges, std::unordered_set<std::string>& seen) {
  if (edges.size() < 6 || VertexCount(edges) < 4) return false;
  if (!seen.insert(Key(edges)).second) return false;
  if (HasK4Subgraph(edges)) return true;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    EdgeList deleted = edges;
    deleted.erase(deleted.begin() + static_cast<std::ptrdiff_t>(i));
    if (HasK4Minor(Normalize(std::move(deleted)), seen)) return true;
    EdgeList contracted = edges;
    const auto [keep, gone] = edges[i];
    for (auto& [u, v] : contracted) {
      if (u == gone) u = keep;
      if (v == gone) v = keep;
    }
    if (HasK4Minor(Normalize(std::move(contracted)), seen)) return true;
  }
  return false;
}

}  // namespace

bool K4MinorFree(const Graph& graph) {
  Require(graph.vertices <= 32, "minor search limited to 32 vertices");
  EdgeList edges;
  for (const auto& e : graph.edges) edges.emplace_back(e.u, e.v);
  std::unordered_set<std::string> seen;
  return !HasK4Minor(Normalize(std::move(edges)), seen);
}

std::optional<SpTrace> SeriesParallelTrace(const Graph& graph) {
  struct LiveEdge {
    int u, v;
    Element label;
  };
  std::vector<LiveEdge> edges;
  for (std::size_t i = 0; i < graph.edges.size(); ++i) {
    if (graph.edges[i].u == graph.edges[i].v) return std::nullopt;
    edges.push_back({graph.edges[i].u, graph.edges[i].v, graph.labels[i]});
  }
  std::vector<SpStep> reductions;
  auto same_ends = [](const LiveEdge& a, const LiveEdge& b) {
    return (a.u == b.u && a.v == b.v) || (a.u == b.v && a.v == b.u);
  };
  while (true) {
    if (edges.size() == 2 && same_ends(edges[0], edges[1])) break;
    bool reduced = false;
    for (std::size_t i = 0; i < edges.size() && !reduced; ++i) {
      for (std::size_t j = i + 1; j < edges.size() && !reduced; ++j) {
        if (!same_ends(edges[i], edges[j])) continue;
        std::size_t keep = edges[i].label < edges[j].label ? i : j;
        std::size_t drop = keep == i ? j : i;
        reductions.push_back({false, edges[keep].label, edges[drop].label});
        edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(drop));
        reduced = true;
      }
    }
    if (reduced) continue;
    std::map<int, std::vector<std::size_t>> incident;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      incident[edges[i].u].push_back(i);
      incident[edges[i].v].push_back(i);
    }
    for (const auto& [w, list] : incident) {
      if (list.size() != 2) continue;
      std::size_t a = list[0], b = list[1];
      if (edges[b].label < edges[a].label) std::swap(a, b);
      const int x = edges[a].u == w ? edges[a].v : edges[a].u;
      const int y = edges[b].u == w ? edges[b].v : edges[b].u;
      reductions.push_back({true, edges[a].label, edges[b].label});
      edges[a].u = x;
      edges[a].v = y;
      edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(b));
      reduced = true;
      break;
    }
    if (!reduced) return std::nullopt;
  }
  SpTrace trace;
  trace.first = std::min(edges[0].label, edges[1].label);
  trace.second = std::max(edges[0].label, edges[1].label);
  trace.steps.assign(reductions.rbegin(), reductions.rend());
  return trace;
}

std::vector<std::int64_t> OracleHVector(const Matroid& m) {
  Require(m.size() <= 16, "h-vector oracle limited to 16 elements");
  const auto elems = Elements(m.ground());
  const int n = static_cast<int>(elems.size());
  // Broken circuits as position masks under the natural order.
  std::vector<std::uint32_t> broken;
  for (ElementSet c : m.circuits()) {
    std::uint32_t mask = 0;
    bool first = true;
    for (int i = 0; i < n; ++i) {
      if (!Contains(c, elems[i])) continue;
      if (first) {
        first = false;
        continue;
      }
      mask |= 1u << i;
    }
    Require(!first && mask != 0, "h-vector oracle needs a loopless matroid");
    broken.push_back(mask);
  }
  const int r = m.rank();
  std::vector<std::int64_t> f(r + 1, 0);
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool face = true;
    for (std::uint32_t b : broken) {
      if ((s & b) == b) {
        face = false;
        break;
      }
    }
    if (face) {
      Require(std::popcount(s) <= r, "face larger than the rank");
      ++f[std::popcount(s)];
    }
  }
  auto choose = [](std::int64_t a, std::int64_t b) {
    std::int64_t c = 1;
    for (std::int64_t k = 1; k <= b; ++k) c = c * (a - b + k) / k;
    return c;
  };
  std::vector<std::int64_t> h(r + 1, 0);
  for (int i = 0; i <= r; ++i) {
    for (int j = 0; j <= i; ++j) {
      const std::int64_t term = choose(r - j, i - j) * f[j];
      h[i] += (i - j) % 2 == 0 ? term : -term;
    }
  }
  return h;
}

std::vector<Ordering> OracleCiOrders(const Matroid& m) {
  Require(m.size() <= 7, "order oracle limited to 7 elements");
  std::vector<Element> seq = Elements(m.ground());
  std::vector<Ordering> out;
  do {
    std::vector<ElementSet> bcs;
    for (ElementSet c : m.circuits()) {
      Element least = -1;
      for (Element e : seq) {
        if (Contains(c, e)) {
          least = e;
          break;
        }
      }
      bcs.push_back(c & ~Singleton(least));
    }
    std::vector<ElementSet> minimal;
    for (ElementSet b : bcs) {
      bool is_min = true;
      for (ElementSet other : bcs) {
        if (other != b && (other & b) == other) is_min = false;
      }
      if (is_min && std::find(minimal.begin(), minimal.end(), b) == minimal.end()) {
        minimal.push_back(b);
      }
    }
    bool disjoint = true;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      for (std::size_t j = i + 1; j < minimal.size(); ++j) {
        if ((minimal[i] & minimal[j]) != 0) disjoint = false;
      }
    }
    if (disjoint) out.push_back(Ordering::FromSequence(m.ground(), seq));
  } while (std::next_permutation(seq.begin(), seq.end()));
  return out;
}

RationalMatrix IncidenceMatrix(const Graph& graph) {
  Require(graph.vertices >= 2, "incidence matrix needs two vertices");
  const int rows = graph.vertices - 1;
  std::vector<std::vector<Rational>> cols;
  for (const auto& e : graph.edges) {
    std::vector<Rational> col(rows, Rational(0));
    if (e.u < rows) col[e.u] += 1;
    if (e.v < rows) col[e.v] -= 1;
    cols.push_back(std::move(col));
  }
  return RationalMatrix::FromColumns(std::move(cols));
}

RationalMatrix VandermondeMatrix(int r, int n) {
  std::vector<std::vector<Rational>> cols;
  for (int t = 1; t <= n; ++t) {
    std::vector<Rational> col;
    Rational power = 1;
    for (int i = 0; i < r; ++i) {
      col.push_back(power);
      power *= t;
    }
    cols.push_back(std::move(col));
  }
  return RationalMatrix::FromColumns(std::move(cols));
}

}  // namespace bcc
