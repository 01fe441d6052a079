#include "grmir/superpotential.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace grmir {

Superpotential build_superpotential(const Shape& shape) {
  FlowGraph g = build_flow_graph(shape);
  LaurentPoly<Int> p(shape.arity());
  for (const GraphEdge& e : g.edges) {
    ExpVec exp = zero_exp(shape.arity());
    exp[e.head] += 1;
    exp[e.tail] -= 1;
    p.add_term(exp, Int(1));
  }
  return {shape, std::move(g), std::move(p)};
}

ConstantTerm constant_term_pow_direct(const Superpotential& s, int d,
                                      int power_budget) {
  if (d < 0) throw std::invalid_argument("power must be nonnegative");
  if (power_budget < 1)
    throw std::invalid_argument("power budget must be positive");
  if (d > power_budget)
    throw BudgetError("direct powering budget exceeded: d=" +
                      std::to_string(d) + " > " + std::to_string(power_budget));

  const int nboxes = s.shape.boxes();
  const int z1 = s.shape.z1_slot();
  const int z2 = s.shape.z2_slot();
  // A box-constant monomial of S^d is indexed by an edge flow, which moves
  // value d/n from source to sink: its z1 exponent is exactly d/n and its z2
  // exponent -d/n. The z1 slot never decreases (z1 appears only as an edge
  // head) and the z2 slot never increases, so anything past those marks is
  // dead. Box exponents farther from 0 than the remaining step count are
  // dead too, since each factor of S moves every exponent by at most 1.
  const int z_cap = d / s.shape.n();
  LaurentPoly<Int> acc = LaurentPoly<Int>::constant(s.shape.arity(), Int(1));
  for (int j = 1; j <= d; ++j) {
    int remaining = d - j;
    acc = lp_mul(acc, s.poly, [&](const ExpVec& e) {
      for (int b = 0; b < nboxes; ++b)
        if (e[b] > remaining || -e[b] > remaining) return false;
      return e[z1] <= z_cap && -e[z2] <= z_cap;
    });
  }

  ConstantTerm out;
  bool found = false;
  for (const auto& [e, c] : acc.terms) {
    bool boxes_zero = true;
    for (int b = 0; b < nboxes; ++b)
      if (e[b] != 0) {
        boxes_zero = false;
        break;
      }
    if (!boxes_zero) continue;
    if (found) throw std::logic_error("multiple box-constant terms in S^d");
    if (e[s.shape.z1_slot()] != -e[s.shape.z2_slot()])
      throw std::logic_error("unbalanced z exponents in constant term");
    out.z_degree = e[s.shape.z1_slot()];
    out.coeff = c;
    found = true;
  }
  if (d == 0 && !found) throw std::logic_error("S^0 lost its constant term");
  return out;
}

namespace {

struct FlowEnumerator {
  const FlowGraph& g;
  const std::function<void(const Flow&)>& visit;
  std::vector<std::vector<int>> outs;  // per vertex, canonical edge order
  std::vector<std::vector<int>> ins;
  std::vector<int> order;  // box vertices, decreasing weight
  Flow flow;

  FlowEnumerator(const FlowGraph& graph, int value,
                 const std::function<void(const Flow&)>& fn)
      : g(graph), visit(fn) {
    outs.resize(g.vertices.size());
    ins.resize(g.vertices.size());
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
      outs[v] = g.out_edges(v);
      ins[v] = g.in_edges(v);
    }
    for (int v = 0; v < g.shape.boxes(); ++v) order.push_back(v);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      int wa = g.vertex_weight(a), wb = g.vertex_weight(b);
      return wa != wb ? wa > wb : a < b;
    });
    flow.value = value;
    flow.multiplicities.assign(g.edges.size(), 0);
  }

  void run() {
    // The z2 edge is forced to carry the full value.
    flow.multiplicities[outs[g.z2_index()][0]] = flow.value;
    descend(0);
  }

  // Boxes are visited in decreasing weight, so all in-edges of order[pos]
  // are already assigned when it is reached.
  void descend(std::size_t pos) {
    if (pos == order.size()) {
      visit(flow);
      return;
    }
    int v = order[pos];
    int in = 0;
    for (int e : ins[v]) in += flow.multiplicities[e];
    split(pos, v, in, 0);
  }

  // Distribute `left` over out-edges of v starting at out index i.
  void split(std::size_t pos, int v, int left, std::size_t i) {
    const auto& out = outs[v];
    if (i + 1 == out.size()) {
      flow.multiplicities[out[i]] = left;
      descend(pos + 1);
      flow.multiplicities[out[i]] = 0;
      return;
    }
    for (int take = 0; take <= left; ++take) {
      flow.multiplicities[out[i]] = take;
      split(pos, v, left - take, i + 1);
    }
    flow.multiplicities[out[i]] = 0;
  }
};

}  // namespace

void enumerate_flows(const FlowGraph& g, int value,
                     const std::function<void(const Flow&)>& visit) {
  if (value < 0) throw std::invalid_argument("flow value must be nonnegative");
  FlowEnumerator e(g, value, visit);
  e.run();
}

std::vector<Flow> list_flows(const FlowGraph& g, int value) {
  std::vector<Flow> out;
  enumerate_flows(g, value, [&](const Flow& f) { out.push_back(f); });
  return out;
}

ConstantTerm constant_term_pow_flows(const Superpotential& s, int d) {
  if (d < 0) throw std::invalid_argument("power must be nonnegative");
  if (d % s.shape.n() != 0) return {};
  int m = d / s.shape.n();
  Int total = 0;
  enumerate_flows(s.graph, m, [&](const Flow& f) {
    total += multinomial(f.multiplicities);
  });
  return {m, total};
}

std::vector<ASeriesRow> a_series(const Shape& shape, int max_m, int budget) {
  if (max_m < 0) throw std::invalid_argument("max_m must be nonnegative");
  if (budget < 1) throw std::invalid_argument("series budget must be positive");
  if (max_m > budget)
    throw BudgetError("a-series budget exceeded: max_m=" +
                      std::to_string(max_m) + " > " + std::to_string(budget));
  Superpotential s = build_superpotential(shape);
  std::vector<ASeriesRow> rows;
  rows.reserve(max_m + 1);
  for (int m = 0; m <= max_m; ++m) {
    ConstantTerm ct = constant_term_pow_flows(s, shape.n() * m);
    rows.push_back({m, ct.coeff});
  }
  return rows;
}

Rat exp_series_coeff(const Shape& shape, int m) {
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  Superpotential s = build_superpotential(shape);
  ConstantTerm ct = constant_term_pow_flows(s, shape.n() * m);
  return make_rat(ct.coeff, factorial(static_cast<long>(shape.n()) * m));
}

}  // namespace grmir
