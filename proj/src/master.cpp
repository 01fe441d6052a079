#include "grmir/master.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "grmir/superpotential.hpp"

namespace grmir {

namespace {

ExpVec ratio_exp(const Shape& s, int num_slot, int den_slot) {
  ExpVec e = zero_exp(s.arity());
  e[num_slot] += 1;
  e[den_slot] -= 1;
  return e;
}

std::vector<int> slot_weights(const Shape& s) {
  std::vector<int> w(s.arity(), 0);
  for (ColumnBox b : s.box_list()) w[s.box_index(b)] = box_weight(s, b);
  w[s.z1_slot()] = 0;
  w[s.z2_slot()] = s.n();
  return w;
}

}  // namespace

std::vector<PhiFactor> phi_factors(const Shape& shape) {
  std::vector<PhiFactor> out;
  const int k = shape.k(), n = shape.n();

  // within-column pairs, exponent +2*omega
  for (int i = 1; i <= n - 1; ++i) {
    int h = shape.height(i);
    for (int a = 1; a <= h; ++a) {
      for (int b = a + 1; b <= h; ++b) {
        PhiFactor f;
        f.kind = PhiFactorKind::Delta;
        f.omega_multiple = 2;
        f.ratio = ratio_exp(shape, shape.box_index({i, a}), shape.box_index({i, b}));
        f.depth = box_weight(shape, {i, b}) - box_weight(shape, {i, a});
        out.push_back(std::move(f));
      }
    }
  }

  // all pairs between consecutive columns, smaller weight on top
  for (int i = 1; i + 1 <= n - 1; ++i) {
    for (int a = 1; a <= shape.height(i); ++a) {
      for (int b = 1; b <= shape.height(i + 1); ++b) {
        ColumnBox pa{i, a}, pb{i + 1, b};
        int wa = box_weight(shape, pa), wb = box_weight(shape, pb);
        PhiFactor f;
        f.kind = PhiFactorKind::LBoxBox;
        f.omega_multiple = -1;
        if (wa < wb) {
          f.ratio = ratio_exp(shape, shape.box_index(pa), shape.box_index(pb));
          f.depth = wb - wa;
        } else {
          f.ratio = ratio_exp(shape, shape.box_index(pb), shape.box_index(pa));
          f.depth = wa - wb;
        }
        out.push_back(std::move(f));
      }
    }
  }

  // z1 against column k, z2 against column n-k
  for (int a = 1; a <= k; ++a) {
    PhiFactor f;
    f.kind = PhiFactorKind::LZ1;
    f.omega_multiple = -1;
    f.ratio = ratio_exp(shape, shape.z1_slot(), shape.box_index({k, a}));
    f.depth = box_weight(shape, {k, a});
    out.push_back(std::move(f));
  }
  for (int a = 1; a <= k; ++a) {
    PhiFactor f;
    f.kind = PhiFactorKind::LZ2;
    f.omega_multiple = -1;
    f.ratio = ratio_exp(shape, shape.box_index({n - k, a}), shape.z2_slot());
    f.depth = shape.n() - box_weight(shape, {n - k, a});
    out.push_back(std::move(f));
  }
  return out;
}

OmegaPoly omega_binomial(int beta, int m) {
  OmegaPoly r(Rat(1));
  for (int j = 0; j < m; ++j)
    r = r * OmegaPoly(std::vector<Rat>{Rat(-j), Rat(beta)});
  return r.scaled(Rat(1) / Rat(factorial(m)));
}

namespace {

std::vector<OmegaPoly> phi_series_impl(const Shape& shape, int D,
                                       bool include_delta,
                                       const MasterBudget& budget) {
  if (D < 0) throw std::invalid_argument("series degree must be nonnegative");
  if (shape.boxes() > budget.max_area)
    throw BudgetError("master budget exceeded: k(n-k)=" +
                      std::to_string(shape.boxes()) + " > " +
                      std::to_string(budget.max_area));
  const long cutoff = static_cast<long>(shape.n()) * D;
  if (cutoff > budget.max_depth)
    throw BudgetError("master budget exceeded: n*D=" + std::to_string(cutoff) +
                      " > " + std::to_string(budget.max_depth));

  GradedSeries acc;
  acc.depth_cutoff = static_cast<int>(cutoff);
  acc.weights = slot_weights(shape);
  acc.terms = LaurentPoly<OmegaPoly>::constant(shape.arity(), OmegaPoly(Rat(1)));

  std::vector<PhiFactor> factors = phi_factors(shape);
  if (!include_delta) {
    factors.erase(std::remove_if(factors.begin(), factors.end(),
                                 [](const PhiFactor& f) {
                                   return f.kind == PhiFactorKind::Delta;
                                 }),
                  factors.end());
  }
  std::stable_sort(factors.begin(), factors.end(),
                   [](const PhiFactor& a, const PhiFactor& b) {
                     return a.depth < b.depth;
                   });

  for (const PhiFactor& f : factors) {
    // (1 - r)^{beta*omega} = sum_m binom(beta*omega, m) (-r)^m, truncated
    // where m * depth(r) would exceed the cutoff.
    LaurentPoly<OmegaPoly> expansion(shape.arity());
    int max_m = static_cast<int>(cutoff / f.depth);
    for (int m = 0; m <= max_m; ++m) {
      OmegaPoly c = omega_binomial(f.omega_multiple, m);
      if (m % 2 == 1) c = -c;
      ExpVec e = zero_exp(shape.arity());
      for (int q = 0; q < m; ++q) e += f.ratio;
      expansion.add_term(e, std::move(c));
    }
    acc.terms = lp_mul(acc.terms, expansion, [&](const ExpVec& e) {
      return acc.depth(e) <= acc.depth_cutoff;
    });
  }

  std::vector<OmegaPoly> out;
  out.reserve(D + 1);
  for (int d = 0; d <= D; ++d) {
    ExpVec key = zero_exp(shape.arity());
    key[shape.z1_slot()] = d;
    key[shape.z2_slot()] = -d;
    if (acc.depth(key) != static_cast<long>(shape.n()) * d)
      throw std::logic_error("depth bookkeeping broke");
    out.push_back(acc.terms.coeff(key));
  }
  return out;
}

}  // namespace

std::vector<OmegaPoly> phi_series(const Shape& shape, int D,
                                  MasterBudget budget) {
  return phi_series_impl(shape, D, true, budget);
}

std::vector<OmegaPoly> phi_series_opt(const Shape& shape, int D,
                                      bool include_delta, MasterBudget budget) {
  return phi_series_impl(shape, D, include_delta, budget);
}

LimitReport hbar_limit_check(const Shape& shape, int d, MasterBudget budget) {
  LimitReport r;
  r.d = d;
  r.expected_degree = static_cast<long>(shape.n()) * d;
  OmegaPoly cd = phi_series(shape, d, budget).at(d);
  r.degree = cd.degree();
  r.degree_ok = r.degree == r.expected_degree;
  r.leading = cd.is_zero() ? Rat(0) : cd.leading();
  r.expected = exp_series_coeff(shape, d);
  r.leading_ok = r.leading == r.expected;
  return r;
}

}  // namespace grmir
