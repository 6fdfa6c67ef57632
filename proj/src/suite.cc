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

#include "bcckit/suite.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include "bcckit/classify.h"
#include "bcckit/constructions.h"
#include "bcckit/error.h"
#include "bcckit/expression.h"
#include "bcckit/invariants.h"
#include "bcckit/orlik_terao.h"

namespace bcc {

namespace {

constexpr std::size_t kKeptFailures = 20;

// What one worker found for one corpus item.
struct Outcome {
  std::int64_t checks = 0;
  std::vector<Failure> failures;
  std::map<std::string, std::int64_t> counters;
  std::vector<std::string> notes;
  bool counted = false;  // contributes to the instance count

  void Check(bool ok, const std::function<Failure()>& describe) {
    ++checks;
    if (!ok) failures.push_back(describe());
  }
};

template <typename F>
std::vector<Outcome> ParallelMap(std::size_t n, int jobs, F&& work) {
  std::vector<Outcome> out(n);
  const int workers = std::max(
      1, std::min<int>(jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency()),
                       static_cast<int>(n)));
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        out[i] = work(i);
      } catch (const std::exception& e) {
        out[i].counted = true;
        out[i].checks += 1;
        out[i].failures.push_back({std::string("exception: ") + e.what(), Json()});
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  return out;
}

void Merge(SuiteCheck& check, std::vector<Outcome> outcomes) {
  for (auto& o : outcomes) {
    check.instances += o.counted ? 1 : 0;
    check.checks += o.checks;
    check.failure_count += static_cast<std::int64_t>(o.failures.size());
    for (auto& f : o.failures) {
      if (check.failures.size() < kKeptFailures) check.failures.push_back(std::move(f));
    }
    for (const auto& [k, v] : o.counters) check.counters[k] += v;
    for (auto& n : o.notes) check.notes.push_back(std::move(n));
  }
}

Json OrderJson(const Ordering& ord) {
  Json out = Json::array();
  for (Element e : ord.sequence()) out.push_back(e);
  return out;
}

Json InstanceJson(const CorpusInstance& inst,
                  const Ordering* ord = nullptr) {
  Json out;
  out["family"] = inst.family;
  out["name"] = inst.name;
  out["matroid"] = MatroidToJson(inst.matroid);
  if (ord != nullptr) out["order"] = OrderJson(*ord);
  return out;
}

Json MatroidInstanceJson(const std::string& family, const Matroid& m,
                         const Ordering* ord = nullptr) {
  Json out;
  out["family"] = family;
  out["matroid"] = MatroidToJson(m);
  if (ord != nullptr) out["order"] = OrderJson(*ord);
  return out;
}

std::string Vec(const std::vector<std::int64_t>& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ")";
  return out.str();
}

std::vector<std::int64_t> HOf(const Matroid& m, const Ordering& ord) {
  return HVectorFromF(BcFVector(m, ord)).entries;
}

std::vector<std::int64_t> HOf(const Matroid& m) {
  return HOf(m, Ordering::Natural(m.ground()));
}

bool LastTwoOf(const Matroid& m) {
  if (m.size() == 0) return true;
  return LastTwoSymmetric(HVectorFromF(BcFVector(m, Ordering::Natural(m.ground())))
                              .Truncated());
}

Rng RngFor(const CorpusSpec& spec, std::uint64_t stream, std::size_t index) {
  return Rng(EffectiveSeed(spec.seed) * 0x100000001b3ULL + stream * 0x9e3779b97f4a7c15ULL +
             index);
}

// Shifts every element of b above a, mapping `glue_from` to `glue_to` when
// given.
Matroid Shift(const Matroid& a, const Matroid& b, Element glue_from = -1,
              Element glue_to = -1) {
  std::map<Element, Element> map;
  Element next = a.size() == 0 ? 1 : MaxElement(a.ground()) + 1;
  for (Element x : Elements(b.ground())) {
    map[x] = x == glue_from ? glue_to : next++;
  }
  return Relabel(b, map);
}

struct Context {
  const CorpusSpec& spec;
  const std::vector<CorpusInstance>& corpus;
  const SuiteOptions& options;
};

// Small simple matroids for the constructed pairs: simplified corpus
// members of at most 8 elements, plus a fixed seed list so the pool is never
// empty.
std::vector<Matroid> ConstructionPool(const Context& ctx) {
  std::vector<Matroid> pool;
  for (const char* text : {"U(2,3)", "U(3,4)", "U(2,4)", "U(1,1)", "U(3,5)",
                           "P(U(2,3),U(2,3);3)", "U(4,5)"}) {
    pool.push_back(ParseExpression(text));
  }
  for (const auto& inst : ctx.corpus) {
    if (inst.matroid.size() > 8) continue;
    pool.push_back(Simplify(inst.matroid).matroid);
  }
  return pool;
}

struct ConstructedPair {
  bool parallel = false;
  Matroid left;
  Matroid right;
  Matroid whole;
  Element basepoint = -1;
};

std::vector<Element> NonColoops(const Matroid& m) {
  return Elements(m.ground() & ~Coloops(m));
}

// `count` direct sums and `count` parallel connections. Half of each are
// drawn from pool members whose h-vectors pass the last-two test so that
// both directions of the equivalence get exercised.
std::vector<ConstructedPair> ConstructPairs(const Context& ctx, int count) {
  const auto pool = ConstructionPool(ctx);
  std::vector<Matroid> positive;
  for (const auto& m : pool) {
    if (LastTwoOf(m)) positive.push_back(m);
  }
  Rng rng = RngFor(ctx.spec, 11, 0);
  std::vector<ConstructedPair> out;
  for (int kind = 0; kind < 2; ++kind) {
    int made = 0;
    for (int attempt = 0; made < count && attempt < 100 * count; ++attempt) {
      const auto& source = (made % 2 == 0) ? positive : pool;
      const Matroid& a = source[UniformIndex(rng, source.size())];
      const Matroid& b = source[UniformIndex(rng, source.size())];
      if (a.size() + b.size() > 16 || a.size() == 0 || b.size() == 0) continue;
      ConstructedPair pair;
      pair.left = a;
      if (kind == 0) {
        pair.right = Shift(a, b);
        pair.whole = DirectSum(pair.left, pair.right);
      } else {
        const auto ea = NonColoops(a);
        const auto eb = NonColoops(b);
        if (ea.empty() || eb.empty()) continue;
        const Element e = ea[UniformIndex(rng, ea.size())];
        const Element f = eb[UniformIndex(rng, eb.size())];
        pair.parallel = true;
        pair.basepoint = e;
        pair.right = Shift(a, b, f, e);
        pair.whole = ParallelConnection({pair.left, pair.right, e});
      }
      out.push_back(std::move(pair));
      ++made;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

SuiteCheck OrderInvariance(const Context& ctx) {
  SuiteCheck check;
  check.description =
      "h-vector of BC(M, <) identical across all orders (|E| <= " +
      std::to_string(ctx.spec.orders.exhaustive_max) + ") or sampled orders (|E| <= " +
      std::to_string(ctx.spec.orders.sample_max) + ")";
  Merge(check, ParallelMap(ctx.corpus.size(), ctx.options.jobs, [&](std::size_t i) {
    Outcome out;
    const auto& inst = ctx.corpus[i];
    const Matroid& m = inst.matroid;
    if (m.size() > ctx.spec.orders.sample_max) return out;
    out.counted = true;
    Rng rng = RngFor(ctx.spec, 1, i);
    const auto orders = OrdersFor(m.ground(), ctx.spec.orders, rng);
    const auto reference = HOf(m, orders.front());
    for (const auto& ord : orders) {
      const auto h = HOf(m, ord);
      out.Check(h == reference, [&] {
        return Failure{"h " + Vec(h) + " differs from " + Vec(reference),
                       InstanceJson(inst, &ord)};
      });
    }
    out.counters[m.size() <= ctx.spec.orders.exhaustive_max ? "exhaustive_instances"
                                                            : "sampled_instances"] += 1;
    out.counters["orders"] += static_cast<std::int64_t>(orders.size());
    return out;
  }));
  return check;
}

SuiteCheck TutteConsistency(const Context& ctx) {
  SuiteCheck check;
  check.description =
      "deletion-contraction T(t,0) equals the face-count h-vector and the raw "
      "subset-scan oracle";
  Merge(check, ParallelMap(ctx.corpus.size(), ctx.options.jobs, [&](std::size_t i) {
    Outcome out;
    out.counted = true;
    const auto& inst = ctx.corpus[i];
    auto tutte = HPolynomialTutte(inst.matroid).ToHVector().entries;
    if (ctx.options.inject_fault && i == 0) tutte[0] += 1;
    const auto faces = HOf(inst.matroid);
    out.Check(tutte == faces, [&] {
      return Failure{"Tutte h " + Vec(tutte) + " vs face-count h " + Vec(faces),
                     InstanceJson(inst)};
    });
    if (inst.matroid.size() <= 16) {
      const auto oracle = OracleHVector(inst.matroid);
      out.Check(oracle == faces, [&] {
        return Failure{"oracle h " + Vec(oracle) + " vs face-count h " + Vec(faces),
                       InstanceJson(inst)};
      });
    }
    return out;
  }));
  return check;
}

SuiteCheck HVectorIdentities(const Context& ctx) {
  SuiteCheck check;
  check.description =
      "h_0 = 1, h_1 = n - r, h_{r-1} = beta, h_r = 0; product over direct "
      "sums; component count from h; deletion-contraction recurrence with "
      "connectivity predicates; partial-sum dominance on graphic instances";
  Merge(check, ParallelMap(ctx.corpus.size(), ctx.options.jobs, [&](std::size_t i) {
    Outcome out;
    out.counted = true;
    const auto& inst = ctx.corpus[i];
    const Matroid s = Simplify(inst.matroid).matroid;
    const int r = s.rank();
    const int n = s.size();
    const auto h = HOf(s);
    auto fail = [&](const std::string& what) {
      return [&inst, what] { return Failure{what, InstanceJson(inst)}; };
    };
    out.Check(h[0] == 1, fail("h_0 != 1"));
    if (r >= 1) {
      out.Check(h[1] == n - r, fail("h_1 != n - r"));
      const auto beta = Beta(s);
      out.Check(h[r - 1] == beta, fail("h_{r-1} != beta"));
      out.Check(h[r] == 0, fail("h_r != 0"));
      const int k = ComponentCountFromH(HVector{h}, r);
      const int components = static_cast<int>(ComponentSets(s).size());
      out.Check(k == components, fail("component count " + std::to_string(components) +
                                      " but h gives " + std::to_string(k)));
      out.counters["simple_identities"] += 1;
      const bool connected = IsConnected(s);
      for (Element e : Elements(s.ground() & ~Coloops(s))) {
        out.Check(DeletionContractionHCheck(s, e),
                  fail("recurrence fails at element " + std::to_string(e)));
        out.counters["recurrence"] += 1;
        if (!connected) continue;
        const bool del = IsConnected(Delete(s, e));
        const bool con = IsConnected(Simplify(Contract(s, e)).matroid);
        out.Check(del || con, fail("neither minor connected at " + std::to_string(e)));
        if (beta == 1) {
          out.Check(del != con, fail("beta = 1 but both minors connected at " +
                                     std::to_string(e)));
        }
      }
    }
    if (inst.graph) {
      const auto t = HVector{h}.Truncated();
      const int last = static_cast<int>(t.size()) - 1;
      std::int64_t low = 0, high = 0;
      for (int j = 0; j <= last; ++j) {
        low += t[j];
        high += t[last - j];
        out.Check(low <= high, fail("partial sums fail at i = " + std::to_string(j)));
      }
      out.counters["partial_sums"] += 1;
    }
    return out;
  }));

  const auto pairs = ConstructPairs(ctx, 100);
  std::vector<ConstructedPair> sums;
  for (const auto& p : pairs) {
    if (!p.parallel) sums.push_back(p);
  }
  Merge(check, ParallelMap(sums.size(), ctx.options.jobs, [&](std::size_t i) {
    Outcome out;
    const auto& p = sums[i];
    const auto whole = HPolynomialFromComplex(p.whole).coeffs;
    const auto product = Multiply(HPolynomialTutte(p.left).coeffs,
                                  HPolynomialTutte(p.right).coeffs);
    out.Check(whole == product, [&] {
      return Failure{"h of sum " + Vec(whole) + " vs product " + Vec(product),
                     MatroidInstanceJson("direct_sum", p.whole)};
    });
    out.counters["direct_sums"] += 1;
    return out;
  }));
  return check;
}

SuiteCheck PanelAgreement(const Context& ctx) {
  SuiteCheck check;
  check.description =
      "the six Gorenstein / complete intersection conditions agree for every "
      "(M, <) with |E| <= " + std::to_string(ctx.spec.orders.exhaustive_max);
  Merge(check, ParallelMap(ctx.corpus.size(), ctx.options.jobs, [&](std::size_t i) {
    Outcome out;
    const auto& inst = ctx.corpus[i];
    const Matroid& m = inst.matroid;
    if (m.size() > ctx.spec.orders.exhaustive_max) return out;
    out.counted = true;
    Rng rng = RngFor(ctx.spec, 4, i);
    std::map<std::vector<ElementSet>, ConditionPanel> memo;
    for (const auto& ord : OrdersFor(m.ground(), ctx.spec.orders, rng)) {
      auto key = MinimalBrokenCircuits(m, ord);
      auto it = memo.find(key);
      if (it == memo.end()) it = memo.emplace(std::move(key), BcPanel(m, ord)).first;
      const ConditionPanel& panel = it->second;
      out.Check(panel.Agrees(), [&] {
        return Failure{"mixed panel " + panel.ToString(), InstanceJson(inst, &ord)};
      });
      out.counters["pairs"] += 1;
      out.counters[panel.conditions[0] ? "pairs_all_true" : "pairs_all_false"] +=
          panel.Agrees() ? 1 : 0;
    }
    out.counters["distinct_complexes"] += static_cast<std::int64_t>(memo.size());
    return out;
  }));
  return check;
}

SuiteCheck CiCharacterization(const Context& ctx) {
  SuiteCheck check;
  check.description =
      "Dehn-Sommerville symmetry, last-two symmetry, parallel decomposition "
      "and CI order synthesis agree; for |E| <= 7 they also match the "
      "exhaustive existence of a CI order";
  Merge(check, ParallelMap(ctx.corpus.size(), ctx.options.jobs, [&](std::size_t i) {
    Outcome out;
    out.counted = true;
    const auto& inst = ctx.corpus[i];
    const auto report = ClassifyMatroid(inst.matroid);
    const Matroid& s = report.matroid;
    auto fail = [&](const std::string& what) {
      return [&inst, what] { return Failure{what, InstanceJson(inst)}; };
    };
    const bool agree = report.dehn_sommerville == report.last_two &&
                       report.last_two == report.decomposable &&
                       report.decomposable == report.ci_order.has_value();
    out.Check(agree, fail("conditions disagree: ds=" + std::to_string(report.dehn_sommerville) +
                          " last_two=" + std::to_string(report.last_two) +
                          " decomposable=" + std::to_string(report.decomposable) +
                          " order=" + std::to_string(report.ci_order.has_value())));
    out.Check(report.verdict == (report.last_two ? OtVerdict::kCompleteIntersection
                                                 : OtVerdict::kNeither),
              fail("verdict inconsistent with the h-vector"));
    if (report.ci_order) {
      out.Check(IsCompleteIntersection(s, *report.ci_order),
                fail("synthesized order is not CI"));
    }
    for (const auto& c : report.components) {
      if (!c.tree) continue;
      out.Check(Realize(*c.tree) == Restrict(s, c.elements),
                fail("tree does not realize component " + FormatSet(c.elements)));
    }
    if (s.size() <= 7) {
      const auto oracle = OracleCiOrders(s);
      out.Check(oracle.empty() != report.last_two,
                fail("exhaustive search found " + std::to_string(oracle.size()) +
                     " CI orders"));
      if (report.ci_order) {
        out.Check(std::find(oracle.begin(), oracle.end(), *report.ci_order) != oracle.end(),
                  fail("synthesized order missing from the oracle list"));
      }
      out.counters["exhaustive"] += 1;
    }
    out.counters[report.last_two ? "classified_true" : "classified_false"] += 1;
    return out;
  }));

  // Fixed anchors.
  Outcome anchors;
  for (int m = 1; m <= 5; ++m) {
    const auto report = ClassifyMatroid(Matroid::Uniform(m, m + 1));
    const bool ones = report.h_truncated.size() == static_cast<std::size_t>(m) &&
                      std::all_of(report.h_truncated.begin(), report.h_truncated.end(),
                                  [](std::int64_t x) { return x == 1; });
    anchors.Check(report.last_two && report.ci_order && ones, [&] {
      return Failure{"U(" + std::to_string(m) + "," + std::to_string(m + 1) +
                         ") h = " + Vec(report.h_truncated),
                     MatroidInstanceJson("anchor", Matroid::Uniform(m, m + 1))};
    });
  }
  {
    const Matroid k4 = Matroid::Graphic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    const auto report = ClassifyMatroid(k4, true);
    int passing = 0;
    for (const auto& r : *report.per_order_results) passing += r.complete_intersection;
    const bool ok = !report.last_two && !report.ci_order &&
                    report.h_truncated == std::vector<std::int64_t>{1, 3, 2} &&
                    report.per_order_results->size() == 720 && passing == 0 &&
                    OracleCiOrders(k4).empty();
    anchors.Check(ok, [&] {
      return Failure{"M(K4) h = " + Vec(report.h_truncated) + ", CI orders " +
                         std::to_string(passing),
                     MatroidInstanceJson("anchor", k4)};
    });
  }
  {
    const Matroid p = ParseExpression("P(U(2,3),U(2,3);3)");
    const auto report = ClassifyMatroid(p);
    const auto oracle = OracleCiOrders(p);
    const bool ok = report.last_two && report.ci_order &&
                    report.h_truncated == std::vector<std::int64_t>{1, 2, 1} &&
                    IsCompleteIntersection(p, *report.ci_order) &&
                    std::find(oracle.begin(), oracle.end(), *report.ci_order) != oracle.end();
    anchors.Check(ok, [&] {
      return Failure{"P(U(2,3),U(2,3)) h = " + Vec(report.h_truncated),
                     MatroidInstanceJson("anchor", p)};
    });
  }
  anchors.counters["anchors"] = anchors.checks;
  std::vector<Outcome> one;
  one.push_back(std::move(anchors));
  Merge(check, std::move(one));
  return check;
}

struct ArrangementCase {
  std::string name;
  RationalMatrix matrix;
  Matroid expected;  // simplified underlying matroid
};

std::vector<ArrangementCase> Arrangements(const Context& ctx) {
  std::vector<ArrangementCase> out;
  std::set<std::pair<int, int>> uniform_done;
  for (const auto& inst : ctx.corpus) {
    if (inst.graph && inst.graph->edges.size() <= 8) {
      out.push_back({"incidence " + inst.name, IncidenceMatrix(*inst.graph),
                     Simplify(inst.matroid).matroid});
    }
    if (const auto* u = std::get_if<UniformRep>(&inst.matroid.representation())) {
      const int n = inst.matroid.size();
      if (u->rank >= 2 && n <= 8 && uniform_done.insert({u->rank, n}).second) {
        out.push_back({"vandermonde " + inst.name, VandermondeMatrix(u->rank, n),
                       Matroid::Uniform(u->rank, n)});
      }
    }
  }
  for (auto [r, n] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {2, 5}, {3, 5}, {3, 6}, {4, 6}}) {
    if (uniform_done.insert({r, n}).second) {
      out.push_back({"vandermonde U(" + std::to_string(r) + "," + std::to_string(n) + ")",
                     VandermondeMatrix(r, n), Matroid::Uniform(r, n)});
    }
  }
  return out;
}

SuiteCheck OrlikTerao(const Context& ctx) {
  SuiteCheck check;
  check.description =
      "circuit relations vanish exactly, lead terms are the broken circuit "
      "monomials for every order tried (consistent with the initial ideal "
      "statement; no Groebner basis is computed), verdict matches the "
      "matroid classification";
  const auto cases = Arrangements(ctx);
  OrderBudget budget = ctx.spec.orders;
  budget.exhaustive_max = std::min(budget.exhaustive_max, 6);
  Merge(check, ParallelMap(cases.size(), ctx.options.jobs, [&](std::size_t i) {
    Outcome out;
    out.counted = true;
    const auto& c = cases[i];
    auto fail = [&](const std::string& what, const Ordering* ord = nullptr) {
      return [&c, what, ord] {
        Json inst;
        inst["family"] = "arrangement";
        inst["name"] = c.name;
        inst["matroid"] = {{"type", "linear"}, {"matrix", MatrixToJson(c.matrix)}};
        if (ord != nullptr) inst["order"] = OrderJson(*ord);
        return Failure{what, inst};
      };
    };
    const Arrangement arr = Arrangement::FromMatrix(c.matrix);
    out.Check(arr.matroid() == c.expected, fail("underlying matroid mismatch"));
    const auto relations = AllCircuitRelations(arr);
    // An evaluation point where no form vanishes.
    std::vector<Rational> point;
    for (int k = 2; point.empty(); ++k) {
      std::vector<Rational> p;
      Rational power = 1;
      for (int row = 0; row < arr.rank(); ++row) {
        p.push_back(power);
        power *= k;
      }
      bool ok = true;
      for (Element e : Elements(arr.matroid().ground())) {
        Rational value = 0;
        const auto form = arr.form(e);
        for (int row = 0; row < arr.rank(); ++row) value += form[row] * p[row];
        ok &= value != 0;
      }
      if (ok) point = p;
    }
    for (const auto& rel : relations) {
      out.Check(rel.coeffs.front() == 1 &&
                    std::none_of(rel.coeffs.begin(), rel.coeffs.end(),
                                 [](const Rational& q) { return q == 0; }),
                fail("bad normalization for " + FormatSet(rel.circuit)));
      out.Check(RelationVanishesOnForms(arr, rel),
                fail("relation does not vanish on forms " + FormatSet(rel.circuit)));
      out.Check(EvaluateAtReciprocals(arr, rel, point) == 0,
                fail("relation does not vanish at reciprocals " + FormatSet(rel.circuit)));
    }
    Rng rng = RngFor(ctx.spec, 6, i);
    bool forward_differs = false;
    for (const auto& ord : OrdersFor(arr.matroid().ground(), budget, rng)) {
      bool all = true;
      for (const auto& rel : relations) {
        const ElementSet broken = rel.circuit & ~Singleton(ord.Min(rel.circuit));
        all &= LeadMonomial(rel, ord) == broken;
        forward_differs |= LeadMonomial(rel, ord, Precedence::kEarlierFirst) != broken;
      }
      out.Check(all, fail("lead term differs from broken circuit", &ord));
      out.counters["orders"] += 1;
    }
    out.counters["forward_precedence_mismatch"] += forward_differs ? 1 : 0;
    // Minimal broken circuit monomials appear among the lead terms.
    const Ordering natural = Ordering::Natural(arr.matroid().ground());
    std::set<ElementSet> leads;
    for (const auto& rel : relations) leads.insert(LeadMonomial(rel, natural));
    for (ElementSet b : MinimalBrokenCircuits(arr.matroid(), natural)) {
      out.Check(leads.count(b) == 1, fail("minimal broken circuit " + FormatSet(b) +
                                          " missing from lead terms"));
    }
    const auto ot = OtClassification(arr);
    const auto direct = ClassifyMatroid(c.expected);
    out.Check(ot.classification.verdict == direct.verdict, fail("verdict mismatch"));
    out.Check(ot.classification.h.entries == HOf(arr.matroid()),
              fail("h-vector mismatch"));
    out.counters["relations"] += static_cast<std::int64_t>(relations.size());
    out.counters[direct.verdict == OtVerdict::kCompleteIntersection ? "gorenstein"
                                                                   : "not_gorenstein"] += 1;
    return out;
  }));
  if (check.counters["forward_precedence_mismatch"] == 0) {
    ++check.failure_count;
    check.failures.push_back(
        {"forward precedence never disagreed with the broken circuits", Json()});
  }
  return check;
}

SuiteCheck LinkShapes(const Context& ctx) {
  SuiteCheck check;
  check.description =
      "no 1-dimensional link of a BC complex is an n-gon with n >= 5, and no "
      "1-dimensional BC complex is a path on >= 4 vertices";
  Merge(check, ParallelMap(ctx.corpus.size(), ctx.options.jobs, [&](std::size_t i) {
    Outcome out;
    const auto& inst = ctx.corpus[i];
    const Matroid& m = inst.matroid;
    if (m.size() > ctx.spec.orders.sample_max) return out;
    out.counted = true;
    Rng rng = RngFor(ctx.spec, 7, i);
    std::set<std::vector<ElementSet>> seen;
    for (const auto& ord : OrdersFor(m.ground(), ctx.spec.orders, rng)) {
      if (!seen.insert(MinimalBrokenCircuits(m, ord)).second) continue;
      const auto bc = BcComplex(m, ord);
      if (bc.dimension() == 1) {
        const auto shape = ClassifyLinkShape(bc);
        out.Check(!(shape.kind == LinkShape::Kind::kPath && shape.vertices >= 4), [&] {
          return Failure{"BC complex is " + shape.ToString(), InstanceJson(inst, &ord)};
        });
        out.counters["one_dim_complexes"] += 1;
      }
      for (ElementSet face : bc.faces()) {
        if (Size(face) + 1 > bc.dimension()) continue;
        const auto link = Link(bc, face);
        if (link.dimension() != 1) continue;
        const auto shape = ClassifyLinkShape(link);
        out.Check(!(shape.kind == LinkShape::Kind::kNGon && shape.vertices >= 5), [&] {
          return Failure{"link of " + FormatSet(face) + " is " + shape.ToString(),
                         InstanceJson(inst, &ord)};
        });
        out.counters["one_dim_links"] += 1;
        if (shape.kind == LinkShape::Kind::kNGon) {
          out.counters["ngon_" + std::to_string(shape.vertices)] += 1;
        }
      }
    }
    return out;
  }));
  return check;
}

SuiteCheck LinkVertexPrecedence(const Context& ctx) {
  SuiteCheck check;
  check.description =
      "for each face F of BC(M, <), the vertices of lk F in the matroid "
      "complex that are missing from lk F in BC are all preceded by some "
      "vertex of the BC link";
  Merge(check, ParallelMap(ctx.corpus.size(), ctx.options.jobs, [&](std::size_t i) {
    Outcome out;
    const auto& inst = ctx.corpus[i];
    const Matroid& m = inst.matroid;
    if (m.size() > ctx.spec.orders.exhaustive_max) return out;
    out.counted = true;
    const auto sigma = MatroidComplex(m);
    Rng rng = RngFor(ctx.spec, 8, i);
    for (const auto& ord : OrdersFor(m.ground(), ctx.spec.orders, rng)) {
      const auto delta = BcComplex(m, ord);
      for (ElementSet face : delta.faces()) {
        ElementSet v1 = 0, v2 = 0;
        for (Element v : Elements(m.ground() & ~face)) {
          if (delta.Contains(face | Singleton(v))) v1 |= Singleton(v);
          if (sigma.Contains(face | Singleton(v))) v2 |= Singleton(v);
        }
        bool ok = IsSubset(v1, v2);
        const ElementSet extra = v2 & ~v1;
        if (ok && extra != 0) {
          const Element first_extra = ord.Min(extra);
          ok = v1 != 0 && ord.Less(ord.Min(v1), first_extra);
          out.counters["faces_with_extra_vertices"] += 1;
        }
        out.Check(ok, [&] {
          return Failure{"face " + FormatSet(face) + ": V1 = " + FormatSet(v1) +
                             ", V2 = " + FormatSet(v2),
                         InstanceJson(inst, &ord)};
        });
      }
      out.counters["pairs"] += 1;
    }
    return out;
  }));
  return check;
}

SuiteCheck SumParallelSymmetry(const Context& ctx) {
  SuiteCheck check;
  check.description =
      "for direct sums and parallel connections of simple matroids the "
      "last-two test holds for the whole iff it holds for both parts";
  const auto pairs = ConstructPairs(ctx, 100);
  Merge(check, ParallelMap(pairs.size(), ctx.options.jobs, [&](std::size_t i) {
    Outcome out;
    out.counted = true;
    const auto& p = pairs[i];
    const bool whole = LastTwoOf(p.whole);
    const bool parts = LastTwoOf(p.left) && LastTwoOf(p.right);
    out.Check(whole == parts, [&] {
      return Failure{std::string(p.parallel ? "parallel connection" : "direct sum") +
                         ": whole " + std::to_string(whole) + ", parts " +
                         std::to_string(parts),
                     MatroidInstanceJson(p.parallel ? "parallel" : "direct_sum", p.whole)};
    });
    out.counters[p.parallel ? "parallel_connections" : "direct_sums"] += 1;
    out.counters[whole ? "whole_true" : "whole_false"] += 1;
    return out;
  }));
  return check;
}

SuiteCheck FreeDualBridge(const Context& ctx) {
  SuiteCheck check;
  check.description =
      "matroid complex of M equals the reduced BC complex of its free dual "
      "extension (new element first), and its Gorenstein shape verdict "
      "equals its complete intersection verdict";
  Merge(check, ParallelMap(ctx.corpus.size(), ctx.options.jobs, [&](std::size_t i) {
    Outcome out;
    const auto& inst = ctx.corpus[i];
    const Matroid& m = inst.matroid;
    if (m.size() > 6) return out;
    out.counted = true;
    const Matroid ext = FreeDualExtension(m);
    const Element e0 = MaxElement(ext.ground());
    std::vector<Element> seq{e0};
    for (Element e : Elements(m.ground())) seq.push_back(e);
    const auto sigma = MatroidComplex(m);
    const auto reduced = ReducedBcComplex(ext, Ordering::FromSequence(ext.ground(), seq));
    out.Check(sigma == reduced, [&] {
      return Failure{"matroid complex differs from reduced BC of the extension",
                     InstanceJson(inst)};
    });
    const bool gorenstein = GorensteinShape(sigma, true);
    const bool ci = IsCompleteIntersectionComplex(sigma);
    out.Check(gorenstein == ci, [&] {
      return Failure{"matroid complex Gorenstein " + std::to_string(gorenstein) +
                         " vs CI " + std::to_string(ci),
                     InstanceJson(inst)};
    });
    if (sigma.dimension() == 1) {
      const auto shape = ClassifyLinkShape(sigma);
      out.Check(!(shape.kind == LinkShape::Kind::kPath && shape.vertices >= 4), [&] {
        return Failure{"matroid complex is " + shape.ToString(), InstanceJson(inst)};
      });
    }
    out.counters[ci ? "ci_true" : "ci_false"] += 1;
    // Other orders with the new element first, recorded but not asserted.
    if (m.size() <= 5) {
      std::vector<Element> rest = Elements(m.ground());
      do {
        std::vector<Element> s{e0};
        s.insert(s.end(), rest.begin(), rest.end());
        const bool same =
            ReducedBcComplex(ext, Ordering::FromSequence(ext.ground(), s)) == sigma;
        out.counters[same ? "other_orders_equal" : "other_orders_differ"] += 1;
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
    return out;
  }));
  return check;
}

SuiteCheck SeriesParallelTriple(const Context& ctx) {
  SuiteCheck check;
  check.description =
      "on 2-connected graphic instances beta = 1 iff a series-parallel "
      "reduction trace exists iff the graph has no K4 minor; generated "
      "series-parallel instances satisfy all three";
  Merge(check, ParallelMap(ctx.corpus.size(), ctx.options.jobs, [&](std::size_t i) {
    Outcome out;
    const auto& inst = ctx.corpus[i];
    if (!inst.graph) return out;
    const Graph& g = *inst.graph;
    auto fail = [&](const std::string& what) {
      return [&inst, what] { return Failure{what, InstanceJson(inst)}; };
    };
    if (inst.trace) {
      out.counted = true;
      out.Check(ReplayTrace(*inst.trace) == inst.matroid, fail("trace replay differs"));
      out.Check(g.ToMatroid() == inst.matroid, fail("graph realization differs"));
      out.Check(Beta(inst.matroid) == 1, fail("beta != 1"));
      out.Check(K4MinorFree(g), fail("K4 minor found"));
      out.Check(SeriesParallelTrace(g).has_value(), fail("no reduction trace"));
      // Simplified graph: keep the least label of each parallel class.
      std::map<std::pair<int, int>, Element> simple;
      for (std::size_t k = 0; k < g.edges.size(); ++k) {
        auto key = std::minmax(g.edges[k].u, g.edges[k].v);
        auto [it, fresh] = simple.emplace(key, g.labels[k]);
        if (!fresh) it->second = std::min(it->second, g.labels[k]);
      }
      Graph sg{g.vertices, {}, {}};
      for (const auto& [ends, label] : simple) {
        sg.edges.push_back({ends.first, ends.second});
        sg.labels.push_back(label);
      }
      out.Check(sg.ToMatroid() == Simplify(inst.matroid).matroid,
                fail("simplification is not the simplified graph"));
      if (sg.vertices >= 3 && sg.IsTwoConnected()) {
        std::vector<int> degree(sg.vertices, 0);
        for (const auto& e : sg.edges) {
          ++degree[e.u];
          ++degree[e.v];
        }
        out.Check(std::count(degree.begin(), degree.end(), 2) > 0,
                  fail("no vertex of degree 2"));
        out.counters["degree_two_checks"] += 1;
      }
      out.counters["generated"] += 1;
      return out;
    }
    if (!g.IsTwoConnected()) return out;
    out.counted = true;
    const bool beta_one = Beta(inst.matroid) == 1;
    const auto trace = SeriesParallelTrace(g);
    const bool minor_free = K4MinorFree(g);
    if (trace) {
      out.Check(ReplayTrace(*trace) == inst.matroid, fail("reduction trace does not replay"));
    }
    out.Check(beta_one == trace.has_value() && beta_one == minor_free,
              fail("beta = 1: " + std::to_string(beta_one) + ", trace: " +
                   std::to_string(trace.has_value()) + ", K4-minor-free: " +
                   std::to_string(minor_free)));
    out.counters[beta_one ? "series_parallel" : "not_series_parallel"] += 1;
    return out;
  }));
  return check;
}

SuiteCheck SupportingIdentities(const Context& ctx) {
  SuiteCheck check;
  check.description =
      "deletion keeps exactly the avoiding circuits, circuit elimination, "
      "rank submodularity, dual involution, dim BC = r - 1, cone identity, "
      "minimal non-faces = minimal broken circuits, Hilbert identity, "
      "connectivity and h-product of parallel connections";
  Merge(check, ParallelMap(ctx.corpus.size(), ctx.options.jobs, [&](std::size_t i) {
    Outcome out;
    out.counted = true;
    const auto& inst = ctx.corpus[i];
    const Matroid& m = inst.matroid;
    auto fail = [&](const std::string& what) {
      return [&inst, what] { return Failure{what, InstanceJson(inst)}; };
    };
    for (Element e : Elements(m.ground())) {
      std::vector<ElementSet> kept;
      for (ElementSet c : m.circuits()) {
        if (!Contains(c, e)) kept.push_back(c);
      }
      out.Check(Delete(m, e).circuits() == kept,
                fail("deletion circuits wrong at " + std::to_string(e)));
    }
    const auto& circuits = m.circuits();
    std::int64_t pairs = 0;
    for (std::size_t a = 0; a < circuits.size() && pairs < 2000; ++a) {
      for (std::size_t b = a + 1; b < circuits.size() && pairs < 2000; ++b) {
        ForEachElement(circuits[a] & circuits[b], [&](Element e) {
          const ElementSet target = (circuits[a] | circuits[b]) & ~Singleton(e);
          ++pairs;
          out.Check(std::any_of(circuits.begin(), circuits.end(),
                                [&](ElementSet c) { return IsSubset(c, target); }),
                    fail("circuit elimination fails"));
        });
      }
    }
    Rng rng = RngFor(ctx.spec, 12, i);
    const auto elems = Elements(m.ground());
    auto random_subset = [&] {
      ElementSet s = 0;
      for (Element e : elems) {
        if (UniformIndex(rng, 2)) s |= Singleton(e);
      }
      return s;
    };
    for (int k = 0; k < 1000; ++k) {
      const ElementSet a = random_subset();
      const ElementSet b = random_subset();
      const bool ok = m.Rank(a) + m.Rank(b) >= m.Rank(a | b) + m.Rank(a & b) &&
                      m.Rank(a & b) <= m.Rank(a);
      out.Check(ok, fail("rank not submodular on " + FormatSet(a) + ", " + FormatSet(b)));
    }
    if (m.size() <= 12) {
      out.Check(Bases(Dual(Dual(m))) == Bases(m), fail("double dual changes bases"));
    }
    const Ordering natural = Ordering::Natural(m.ground());
    const auto bc = BcComplex(m, natural);
    const auto reduced = ReducedBcComplex(m, natural);
    out.Check(bc.dimension() == m.rank() - 1, fail("dim BC != r - 1"));
    const auto f = FVectorOf(bc);
    out.Check(f == Multiply(FVectorOf(reduced), {1, 1}), fail("cone identity fails"));
    out.Check(MinimalNonfaces(bc, m.ground()) == MinimalBrokenCircuits(m, natural),
              fail("minimal non-faces differ from minimal broken circuits"));
    out.Check(CheckHilbertIdentity(f, HVectorFromF(f), m.rank()),
              fail("Hilbert identity fails"));
    return out;
  }));
  const auto constructed = ConstructPairs(ctx, 100);
  std::vector<ConstructedPair> parallels;
  for (const auto& p : constructed) {
    if (p.parallel) parallels.push_back(p);
  }
  Merge(check, ParallelMap(parallels.size(), ctx.options.jobs, [&](std::size_t i) {
    Outcome out;
    const auto& p = parallels[i];
    auto fail = [&](const std::string& what) {
      return [&p, what] { return Failure{what, MatroidInstanceJson("parallel", p.whole)}; };
    };
    out.Check(IsConnected(p.whole) == (IsConnected(p.left) && IsConnected(p.right)),
              fail("connectivity of parallel connection"));
    out.Check(IsSimple(p.whole), fail("parallel connection of simple parts not simple"));
    auto product = Multiply(HPolynomialTutte(p.left).coeffs, HPolynomialTutte(p.right).coeffs);
    const bool divisible = !product.empty() && product[0] == 0;
    if (divisible) product.erase(product.begin());
    out.Check(divisible && HPolynomialTutte(p.whole).coeffs == product,
              fail("h of parallel connection is not t^-1 times the product"));
    out.counters["parallel_connections"] += 1;
    return out;
  }));
  return check;
}

struct Entry {
  int criterion;
  const char* name;
  SuiteCheck (*run)(const Context&);
};

constexpr Entry kEntries[] = {
    {0, "matroid_and_complex_identities", SupportingIdentities},
    {1, "h_order_invariance", OrderInvariance},
    {2, "tutte_specialization", TutteConsistency},
    {3, "h_vector_identities", HVectorIdentities},
    {4, "six_condition_panel", PanelAgreement},
    {5, "ci_characterization", CiCharacterization},
    {6, "orlik_terao_lead_terms", OrlikTerao},
    {7, "link_shapes", LinkShapes},
    {8, "link_vertex_precedence", LinkVertexPrecedence},
    {9, "sum_and_parallel_symmetry", SumParallelSymmetry},
    {10, "free_dual_extension_bridge", FreeDualBridge},
    {11, "series_parallel_triple", SeriesParallelTriple},
};

}  // namespace

CorpusSpec CorpusSpecFromJson(const Json& j) {
  if (!j.is_object()) Fail(ErrorKind::kSchema, "corpus spec must be an object");
  auto get_int = [](const Json& obj, const char* key, auto fallback) {
    using T = decltype(fallback);
    if (!obj.contains(key)) return fallback;
    const Json& v = obj.at(key);
    if (!v.is_number_integer()) {
      Fail(ErrorKind::kSchema, std::string("\"") + key + "\" must be an integer");
    }
    return v.get<T>();
  };
  auto section = [&](const char* key) -> const Json* {
    if (!j.contains(key)) return nullptr;
    if (!j.at(key).is_object()) {
      Fail(ErrorKind::kSchema, std::string("\"") + key + "\" must be an object");
    }
    return &j.at(key);
  };
  static const std::set<std::string> known = {"graphs", "uniform", "sp_random",
                                              "parallel_um", "orders", "seed"};
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) Fail(ErrorKind::kSchema, "unknown corpus field \"" + key + "\"");
  }
  CorpusSpec spec;
  if (const Json* g = section("graphs")) {
    spec.graphs = GraphFamily{get_int(*g, "max_vertices", 5), get_int(*g, "max_edges", 8)};
    if (spec.graphs->max_vertices > 7 || spec.graphs->max_vertices < 0) {
      Fail(ErrorKind::kCapExceeded, "graph enumeration supports at most 7 vertices");
    }
    if (spec.graphs->max_edges > kGroundCap) {
      Fail(ErrorKind::kCapExceeded, "max_edges exceeds the ground set cap");
    }
  }
  if (const Json* u = section("uniform")) {
    spec.uniform = UniformFamily{get_int(*u, "max_n", 6)};
    if (spec.uniform->max_n > kGroundCap) {
      Fail(ErrorKind::kCapExceeded, "max_n exceeds the ground set cap");
    }
  }
  if (const Json* s = section("sp_random")) {
    spec.sp_random = SpRandomFamily{get_int(*s, "count", 20), get_int(*s, "max_size", 10),
                                    get_int(*s, "seed", std::uint64_t{1})};
    if (spec.sp_random->max_size > kGroundCap) {
      Fail(ErrorKind::kCapExceeded, "max_size exceeds the ground set cap");
    }
    if (spec.sp_random->max_size < 2) {
      Fail(ErrorKind::kSchema, "sp_random max_size must be at least 2");
    }
  }
  if (const Json* p = section("parallel_um")) {
    spec.parallel_um = ParallelUmFamily{get_int(*p, "count", 20),
                                        get_int(*p, "max_blocks", 3),
                                        get_int(*p, "seed", std::uint64_t{1})};
    if (spec.parallel_um->max_blocks < 1) {
      Fail(ErrorKind::kSchema, "parallel_um max_blocks must be at least 1");
    }
  }
  if (const Json* o = section("orders")) {
    spec.orders.exhaustive_max = get_int(*o, "exhaustive_max", 7);
    spec.orders.samples = get_int(*o, "samples", 20);
    spec.orders.sample_max = get_int(*o, "sample_max", 10);
    if (spec.orders.exhaustive_max > 8) {
      Fail(ErrorKind::kCapExceeded, "exhaustive order sweeps are limited to 8 elements");
    }
    if (spec.orders.samples < 1) Fail(ErrorKind::kSchema, "samples must be positive");
  }
  spec.seed = get_int(j, "seed", std::uint64_t{1});
  return spec;
}

Json CorpusSpecToJson(const CorpusSpec& spec) {
  Json out;
  if (spec.graphs) {
    out["graphs"] = {{"max_vertices", spec.graphs->max_vertices},
                     {"max_edges", spec.graphs->max_edges}};
  }
  if (spec.uniform) out["uniform"] = {{"max_n", spec.uniform->max_n}};
  if (spec.sp_random) {
    out["sp_random"] = {{"count", spec.sp_random->count},
                        {"max_size", spec.sp_random->max_size},
                        {"seed", spec.sp_random->seed}};
  }
  if (spec.parallel_um) {
    out["parallel_um"] = {{"count", spec.parallel_um->count},
                          {"max_blocks", spec.parallel_um->max_blocks},
                          {"seed", spec.parallel_um->seed}};
  }
  out["orders"] = {{"exhaustive_max", spec.orders.exhaustive_max},
                   {"samples", spec.orders.samples},
                   {"sample_max", spec.orders.sample_max}};
  out["seed"] = spec.seed;
  return out;
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const SuiteCheck& c) { return c.passed(); });
}

const SuiteCheck* SuiteReport::Find(int criterion) const {
  for (const auto& c : checks) {
    if (c.criterion == criterion) return &c;
  }
  return nullptr;
}

Json SuiteReport::ToJson(bool with_timing) const {
  Json out;
  out["passed"] = passed();
  Json list = Json::array();
  for (const auto& c : checks) {
    Json j;
    j["criterion"] = c.criterion;
    j["name"] = c.name;
    j["description"] = c.description;
    j["passed"] = c.passed();
    j["instances"] = c.instances;
    j["checks"] = c.checks;
    j["failure_count"] = c.failure_count;
    if (with_timing) j["seconds"] = c.seconds;
    Json counters = Json::object();
    for (const auto& [k, v] : c.counters) counters[k] = v;
    j["counters"] = std::move(counters);
    Json failures = Json::array();
    for (const auto& f : c.failures) {
      failures.push_back({{"detail", f.detail}, {"instance", f.instance}});
    }
    j["failures"] = std::move(failures);
    list.push_back(std::move(j));
  }
  out["checks"] = std::move(list);
  return out;
}

std::string SuiteReport::ToText(bool with_timing) const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.passed() ? "PASS " : "FAIL ") << c.criterion << " " << c.name
        << ": instances=" << c.instances << " checks=" << c.checks
        << " failures=" << c.failure_count;
    if (with_timing) {
      out.precision(2);
      out << std::fixed << " time=" << c.seconds << "s";
    }
    out << "\n";
    out << "    " << c.description << "\n";
    if (!c.counters.empty()) {
      out << "    ";
      bool first = true;
      for (const auto& [k, v] : c.counters) {
        out << (first ? "" : " ") << k << "=" << v;
        first = false;
      }
      out << "\n";
    }
    for (const auto& f : c.failures) {
      out << "    failure: " << f.detail << "\n      replay: " << f.instance.dump()
          << "\n";
    }
  }
  out << (passed() ? "all checks passed" : "some checks FAILED") << "\n";
  return out.str();
}

std::vector<std::pair<int, std::string>> SuiteCheckNames() {
  std::vector<std::pair<int, std::string>> out;
  for (const auto& e : kEntries) out.emplace_back(e.criterion, e.name);
  return out;
}

SuiteReport RunSuite(const CorpusSpec& spec, const SuiteOptions& options) {
  const auto corpus = BuildCorpus(spec);
  const Context ctx{spec, corpus, options};
  SuiteReport report;
  for (const auto& e : kEntries) {
    if (!options.only.empty() && !options.only.count(e.criterion)) continue;
    const auto start = std::chrono::steady_clock::now();
    SuiteCheck check = e.run(ctx);
    check.criterion = e.criterion;
    check.name = e.name;
    check.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                        .count();
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace bcc
