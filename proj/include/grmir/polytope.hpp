#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <vector>

#include "grmir/scalars.hpp"
#include "grmir/shape.hpp"

namespace grmir {

inline constexpr int kDefaultPolytopeArea = 6;  // k(n-k)

using IVec = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

// normal . x <= rhs, with primitive integer normal.
struct Facet {
  IVec normal;
  std::int64_t rhs = 0;
};

struct LatticePolytope {
  int dim = 0;
  std::vector<IVec> points;  // the input generators
  std::vector<Facet> facets; // deduplicated, canonically ordered
};

// Exponents of the superpotential monomials at z=1, written in the rectangle
// basis: one vector f(rect(head)) - f(rect(tail)) per edge, with the z
// vertices contributing nothing.
std::vector<IVec> exponent_points(const Shape& shape,
                                  int area_budget = kDefaultPolytopeArea);

// Exact brute-force hull: every facet is the span of dim affinely
// independent input points, so all dim-subsets are tried.
LatticePolytope convex_hull(const std::vector<IVec>& points);

struct ReflexivityReport {
  bool reflexive = false;
  bool origin_interior = false;
  std::optional<int> witness_facet;  // first facet with rhs != 1
};

ReflexivityReport reflexivity_check(const LatticePolytope& p);

// Lattice points of the bounding box satisfying every facet strictly.
std::vector<IVec> interior_lattice_points(const LatticePolytope& p);

}  // namespace grmir
