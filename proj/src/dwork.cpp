#include "grmir/dwork.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace grmir {

bool is_prime(const Int& p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (Int d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

namespace {

void require_prime(const Int& p) {
  if (!is_prime(p))
    throw std::invalid_argument("p = " + p.str() + " is not prime");
}

// Largest m with n*m <= bound; -1 when even m=0 fails (bound < 0).
int max_z_degree(const Shape& shape, const Int& bound, int a_budget) {
  if (bound < 0) return -1;
  Int m = bound / shape.n();
  if (m > a_budget)
    throw BudgetError("truncation needs a-series to m=" + m.str() +
                      " > budget " + std::to_string(a_budget));
  return static_cast<int>(m);
}

std::vector<Int> dense_a_prefix(const Shape& shape, int max_m, int a_budget) {
  std::vector<Int> out(max_m + 1, 0);
  if (max_m < 0) return {Int(0)};
  for (const ASeriesRow& row : a_series(shape, max_m, a_budget))
    out[row.m] = row.a_m;
  return out;
}

// z -> z^e where e may exceed any int; only the constant survives then.
ModSeries subst(const ModSeries& f, const Int& e) {
  long ee = e > f.cutoff() ? static_cast<long>(f.cutoff()) + 1
                           : static_cast<long>(e);
  return f.substitute_power(static_cast<int>(ee));
}

std::optional<int> merge_first_failure(std::optional<int> a,
                                       std::optional<int> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

}  // namespace

std::vector<Int> truncation(const Shape& shape, const Int& p, int s,
                            int a_budget) {
  require_prime(p);
  if (s < 0) throw std::invalid_argument("truncation level must be >= 0");
  int max_m = max_z_degree(shape, ipow(p, s) - 1, a_budget);
  return dense_a_prefix(shape, max_m, a_budget);
}

TruncationPair truncation_pair(const Shape& shape, const Int& p, int s,
                               int a_budget) {
  if (s < 1) throw std::invalid_argument("truncation pair needs s >= 1");
  return {truncation(shape, p, s, a_budget),
          truncation(shape, p, s - 1, a_budget), p, s};
}

ZSeries<Int> xi_series(const Shape& shape, int cutoff, int a_budget) {
  if (cutoff < 0) throw std::invalid_argument("negative series cutoff");
  ZSeries<Int> out(cutoff);
  std::vector<Int> a = dense_a_prefix(shape, cutoff / shape.n(), a_budget);
  for (int d = 0; d <= cutoff; ++d)
    if (d % shape.n() == 0) out[d] = a[d / shape.n()];
  return out;
}

namespace {

DworkReport ratio_check_impl(const Shape& shape, const Int& p, int s,
                             int cutoff, int a_budget, bool mutate) {
  require_prime(p);
  if (s < 1) throw std::invalid_argument("ratio check needs s >= 1");
  if (cutoff < 0) throw std::invalid_argument("negative cutoff");

  std::vector<Int> f_prev = truncation(shape, p, s - 1, a_budget);
  std::vector<Int> f_mid = truncation(shape, p, s, a_budget);
  std::vector<Int> f_next = truncation(shape, p, s + 1, a_budget);
  if (mutate) {
    if (f_mid.size() < 2) f_mid.resize(2, 0);
    f_mid[1] += ipow(p, s - 1);
  }

  auto mod_of = [&](const std::vector<Int>& poly) {
    return ModSeries::from_dense(poly, p, s, cutoff);
  };

  ModSeries rhs = mod_of(f_mid) * zs_inverse(subst(mod_of(f_prev), p));
  ModSeries lhs = mod_of(f_next) * zs_inverse(subst(mod_of(f_mid), p));
  std::optional<int> fail = ModSeries::first_diff(lhs, rhs);

  // long-truncation form of the same congruence
  int long_m = max_z_degree(shape, p * cutoff + cutoff, a_budget);
  std::vector<Int> f_long = dense_a_prefix(shape, long_m, a_budget);
  ModSeries fl = mod_of(f_long);
  ModSeries lhs_f = fl * zs_inverse(subst(fl, p));
  fail = merge_first_failure(fail, ModSeries::first_diff(lhs_f, rhs));

  DworkReport r;
  r.p = p;
  r.s = s;
  r.cutoff = cutoff;
  r.first_failure_degree = fail;
  r.pass = !fail.has_value();
  return r;
}

}  // namespace

DworkReport dwork_ratio_check(const Shape& shape, const Int& p, int s,
                              int cutoff, int a_budget) {
  return ratio_check_impl(shape, p, s, cutoff, a_budget, false);
}

DworkReport dwork_ratio_check_mutated(const Shape& shape, const Int& p, int s,
                                      int cutoff, int a_budget) {
  return ratio_check_impl(shape, p, s, cutoff, a_budget, true);
}

FactorizationReport factorization_check(const Shape& shape, const Int& p, int s,
                                        int levels, int cutoff, int a_budget) {
  require_prime(p);
  if (s < 1) throw std::invalid_argument("factorization check needs s >= 1");
  if (levels < 0) throw std::invalid_argument("levels must be >= 0");
  if (cutoff < 0) throw std::invalid_argument("negative cutoff");

  std::vector<Int> f_prev = truncation(shape, p, s - 1, a_budget);
  std::vector<Int> f_mid = truncation(shape, p, s, a_budget);

  int long_m = max_z_degree(shape, p * cutoff + cutoff, a_budget);
  std::vector<Int> f_long = dense_a_prefix(shape, long_m, a_budget);

  auto mod_of = [&](const std::vector<Int>& poly) {
    return ModSeries::from_dense(poly, p, s, cutoff);
  };

  ModSeries prod = ModSeries::from_dense({Int(1)}, p, s, cutoff);
  Int power = 1;  // p^i
  for (int i = 0; i <= levels; ++i) {
    prod = prod * subst(mod_of(f_mid), power);
    prod = prod * zs_inverse(subst(mod_of(f_prev), power * p));
    power *= p;
  }
  // Iterating the ratio congruence leaves the tail F(z^{p^{levels+1}}); it
  // collapses to 1 once p^{levels+1} exceeds the cutoff, which recovers the
  // plain product identity, and at levels=0 it makes this the ratio check.
  prod = prod * subst(mod_of(f_long), power);

  std::optional<int> fail = ModSeries::first_diff(mod_of(f_long), prod);
  FactorizationReport r;
  r.p = p;
  r.s = s;
  r.levels = levels;
  r.cutoff = cutoff;
  r.first_failure_degree = fail;
  r.pass = !fail.has_value();
  return r;
}

}  // namespace grmir
