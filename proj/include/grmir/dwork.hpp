#pragma once

#include <optional>
#include <vector>

#include "grmir/modseries.hpp"
#include "grmir/scalars.hpp"
#include "grmir/shape.hpp"
#include "grmir/superpotential.hpp"
#include "grmir/zseries.hpp"

namespace grmir {

bool is_prime(const Int& p);

// F_s(z) = sum over m with n*m <= p^s - 1 of a_m z^m, as dense coefficients
// indexed by z-degree. F_0 = 1.
std::vector<Int> truncation(const Shape& shape, const Int& p, int s,
                            int a_budget = kDefaultASeriesBudget);

struct TruncationPair {
  std::vector<Int> f_s;
  std::vector<Int> f_prev;
  Int p;
  int s = 1;
};

TruncationPair truncation_pair(const Shape& shape, const Int& p, int s,
                               int a_budget = kDefaultASeriesBudget);

// Coefficient of xi^d is [S(x,1)^d]_0, i.e. a_{d/n} when n divides d, else 0.
ZSeries<Int> xi_series(const Shape& shape, int cutoff,
                       int a_budget = kDefaultASeriesBudget);

struct DworkReport {
  Int p;
  int s = 0;
  int cutoff = 0;
  bool pass = false;
  std::optional<int> first_failure_degree;
};

// Verifies, mod p^s up to the cutoff, both
//   F_{s+1}(z) * inv(F_s(z^p))   == F_s(z) * inv(F_{s-1}(z^p))
// and the same right side against Flong(z) * inv(Flong(z^p)) where Flong is
// a truncation of length p*cutoff + cutoff.
DworkReport dwork_ratio_check(const Shape& shape, const Int& p, int s,
                              int cutoff, int a_budget = kDefaultASeriesBudget);

// Same check after adding p^{s-1} to the z^1 coefficient of F_s; a correct
// congruence engine must report failure.
DworkReport dwork_ratio_check_mutated(const Shape& shape, const Int& p, int s,
                                      int cutoff,
                                      int a_budget = kDefaultASeriesBudget);

struct FactorizationReport {
  Int p;
  int s = 0;
  int levels = 0;
  int cutoff = 0;
  bool pass = false;
  std::optional<int> first_failure_degree;
};

// F(z) == prod_{i=0}^{levels} F_s(z^{p^i}) * inv(F_{s-1}(z^{p^{i+1}}))
// * F(z^{p^{levels+1}}) mod p^s up to the cutoff. The tail factor is the
// remainder of iterating the ratio congruence; it is 1 on the window once
// p^{levels+1} > cutoff, leaving the bare product. levels=0 coincides with
// the ratio check.
FactorizationReport factorization_check(const Shape& shape, const Int& p, int s,
                                        int levels, int cutoff,
                                        int a_budget = kDefaultASeriesBudget);

}  // namespace grmir
