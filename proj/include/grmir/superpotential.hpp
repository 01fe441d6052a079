#pragma once

#include <functional>
#include <vector>

#include "grmir/flowgraph.hpp"
#include "grmir/laurent.hpp"
#include "grmir/scalars.hpp"

namespace grmir {

inline constexpr int kDefaultPowerBudget = 12;
inline constexpr int kDefaultASeriesBudget = 512;

// S(x,z) = sum over edges of x_head / x_tail, one unit-coefficient Laurent
// term per edge.
struct Superpotential {
  Shape shape;
  FlowGraph graph;
  LaurentPoly<Int> poly;
};

Superpotential build_superpotential(const Shape& shape);

// Constant term of S^d in the box variables. z_degree is the exponent m of
// the surviving z1^m z2^{-m} monomial; z_degree = -1 and coeff = 0 when the
// constant term vanishes.
struct ConstantTerm {
  long z_degree = -1;
  Int coeff = 0;
  friend bool operator==(const ConstantTerm& a, const ConstantTerm& b) {
    return a.z_degree == b.z_degree && a.coeff == b.coeff;
  }
};

// Repeated sparse multiplication of S, pruning box exponents that cannot
// return to zero within the remaining steps.
ConstantTerm constant_term_pow_direct(const Superpotential& s, int d,
                                      int power_budget = kDefaultPowerBudget);

// Edge multiplicities summing the multinomial expansion of S^d over
// conservative flows; the production engine.
ConstantTerm constant_term_pow_flows(const Superpotential& s, int d);

// Nonnegative multiplicity per edge (canonical edge order), conserving at
// every box; the z1 and z2 edges both carry `value`.
struct Flow {
  std::vector<int> multiplicities;
  int value = 0;
};

void enumerate_flows(const FlowGraph& g, int value,
                     const std::function<void(const Flow&)>& visit);
std::vector<Flow> list_flows(const FlowGraph& g, int value);

struct ASeriesRow {
  int m = 0;
  Int a_m;
};

// a_m = [S^{nm}]_0 for m = 0..max_m, via the flow engine.
std::vector<ASeriesRow> a_series(const Shape& shape, int max_m,
                                 int budget = kDefaultASeriesBudget);

// a_m / (nm)!
Rat exp_series_coeff(const Shape& shape, int m);

}  // namespace grmir
