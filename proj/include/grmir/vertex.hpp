#pragma once

#include <vector>

#include "grmir/scalars.hpp"
#include "grmir/shape.hpp"

namespace grmir {

// Equivariant parameters u_1..u_n and omega (the step is 1).
struct VertexParams {
  std::vector<Rat> u;
  Rat omega;
};

struct VertexBudget {
  int max_k = 3;
  int max_n = 6;
  int max_d = 6;
};

// x(x+1)...(x+d-1) for d>0; 1 for d=0; 1/((x-1)...(x+d)) for d<0.
Rat pochhammer(const Rat& x, long d);

// (a)_d (b)_d / ((c)_d d!)
Rat hypergeometric_coeff(const Rat& a, const Rat& b, const Rat& c, long d);

// Coefficient c_d at generic parameters: sum over compositions
// d_1+...+d_k = d of
//   prod_{i,j<=k} (1-u_i+u_j)_{d_i-d_j} / (omega-u_i+u_j)_{d_i-d_j}
// * prod_{j<=n, i<=k} (omega+u_j-u_i)_{d_i} / (1+u_j-u_i)_{d_i}.
Rat vertex_coeff_generic(const Shape& shape, int d, const VertexParams& params,
                         VertexBudget budget = {});

// The u -> 0 limit of c_d along the line u_i = t * dirs_i, as the value at
// t = 0 of the exactly reduced rational function in t.
Rat vertex_coeff_u0_direction(const Shape& shape, int d, const Rat& omega,
                              const std::vector<long>& dirs,
                              VertexBudget budget = {});

// Same limit with the default direction (1,2,...,n); a pole at t=0 after
// reduction triggers retries along seeded random distinct directions before
// giving up.
Rat vertex_coeff_u0(const Shape& shape, int d, const Rat& omega,
                    VertexBudget budget = {});

// All weak compositions of d into k nonnegative parts, lexicographic.
std::vector<std::vector<int>> compositions(int d, int k);

}  // namespace grmir
