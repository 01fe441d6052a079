#pragma once

#include <vector>

#include "grmir/laurent.hpp"
#include "grmir/scalars.hpp"
#include "grmir/shape.hpp"
#include "grmir/unipoly.hpp"

namespace grmir {

// Polynomial in omega over the rationals.
using OmegaPoly = UniPoly<Rat>;

enum class PhiFactorKind { Delta, LBoxBox, LZ1, LZ2 };

// One factor (1 - r)^{omega_multiple * omega} of the master product. The
// ratio r is a Laurent monomial with one +1 and one -1 slot, oriented so its
// depth (weight of denominator vertex minus weight of numerator vertex) is
// positive; z1 sits at weight 0 and z2 at weight n.
struct PhiFactor {
  PhiFactorKind kind = PhiFactorKind::LBoxBox;
  ExpVec ratio;
  int omega_multiple = -1;  // -1 for L factors, +2 for Delta
  int depth = 0;
};

struct MasterBudget {
  int max_area = 4;    // k(n-k)
  int max_depth = 16;  // n*D
};

std::vector<PhiFactor> phi_factors(const Shape& shape);

// Multiseries truncated by total depth; coefficients are omega-polynomials.
struct GradedSeries {
  int depth_cutoff = 0;
  std::vector<int> weights;  // per exponent slot
  LaurentPoly<OmegaPoly> terms;

  long depth(const ExpVec& e) const {
    long d = 0;
    for (int v = 0; v < static_cast<int>(weights.size()); ++v)
      d -= static_cast<long>(e[v]) * weights[v];
    return d;
  }
};

// binom(beta*omega, m) = prod_{j<m} (beta*omega - j) / m!
OmegaPoly omega_binomial(int beta, int m);

// c_0(omega)..c_D(omega): the coefficient of (box exponents 0, z-degree d)
// in the depth-truncated product of all master factors.
std::vector<OmegaPoly> phi_series(const Shape& shape, int D,
                                  MasterBudget budget = {});

// Same extraction with the Delta factors optionally replaced by 1; the
// leading omega-coefficient must not depend on them.
std::vector<OmegaPoly> phi_series_opt(const Shape& shape, int D,
                                      bool include_delta,
                                      MasterBudget budget = {});

struct LimitReport {
  int d = 0;
  long degree = -1;
  long expected_degree = 0;
  Rat leading;
  Rat expected;
  bool degree_ok = false;
  bool leading_ok = false;
  bool pass() const { return degree_ok && leading_ok; }
};

// deg_omega c_d must equal n*d and the leading coefficient must equal
// a_d / (nd)!.
LimitReport hbar_limit_check(const Shape& shape, int d,
                             MasterBudget budget = {});

}  // namespace grmir
