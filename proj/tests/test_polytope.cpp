#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "grmir/polytope.hpp"
#include "grmir/shape.hpp"

using namespace grmir;

namespace {

IVec ivec(std::initializer_list<std::int64_t> xs) {
  IVec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (auto x : xs) v[i++] = x;
  return v;
}

bool lex_less(const IVec& a, const IVec& b) {
  for (Eigen::Index t = 0; t < a.size(); ++t)
    if (a[t] != b[t]) return a[t] < b[t];
  return false;
}

bool same_point_set(std::vector<IVec> a, std::vector<IVec> b) {
  std::sort(a.begin(), a.end(), lex_less);
  std::sort(b.begin(), b.end(), lex_less);
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(),
                    [](const IVec& x, const IVec& y) { return x == y; });
}

// generator list in the rectangle basis: f_{1,1}; f_{i,j+1} - f_{i-1,j+1};
// -f_{k,n-k}; f_{i,j+1} - f_{i,j}
std::vector<IVec> reference_generators(int k, int n) {
  const int w = n - k;
  const int dim = k * w;
  auto unit = [&](int i, int j) {
    IVec v = IVec::Zero(dim);
    v[(i - 1) * w + (j - 1)] = 1;
    return v;
  };
  std::vector<IVec> ref;
  ref.push_back(unit(1, 1));
  for (int i = 2; i <= k; ++i)
    for (int j = 0; j <= w - 1; ++j)
      ref.push_back(unit(i, j + 1) - unit(i - 1, j + 1));
  ref.push_back(-unit(k, w));
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= w - 1; ++j)
      ref.push_back(unit(i, j + 1) - unit(i, j));
  return ref;
}

// rank of the affine span, by fraction-free elimination; coordinates stay
// tiny so int64 never overflows
int affine_rank(const std::vector<IVec>& pts) {
  if (pts.empty()) return -1;
  const Eigen::Index dim = pts[0].size();
  std::vector<std::vector<std::int64_t>> rows;
  for (size_t i = 1; i < pts.size(); ++i) {
    IVec d = pts[i] - pts[0];
    rows.emplace_back(d.data(), d.data() + dim);
  }
  int rank = 0;
  for (Eigen::Index col = 0; col < dim && rank < static_cast<int>(rows.size());
       ++col) {
    int pivot = -1;
    for (size_t r = rank; r < rows.size(); ++r)
      if (rows[r][col] != 0) { pivot = static_cast<int>(r); break; }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      std::int64_t a = rows[rank][col], b = rows[r][col];
      std::int64_t g = std::gcd(a, b);
      for (Eigen::Index c = 0; c < dim; ++c)
        rows[r][c] = rows[r][c] * (a / g) - rows[rank][c] * (b / g);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("exponent points of the smallest shape") {
  std::vector<IVec> pts = exponent_points(Shape(1, 2));
  CHECK(same_point_set(pts, {ivec({1}), ivec({-1})}));
}

TEST_CASE("exponent points match the rectangle-basis generator list") {
  for (auto [k, n] : {std::pair<int, int>{1, 2}, {1, 3}, {1, 4}, {2, 4}, {2, 5}}) {
    CAPTURE(k);
    CAPTURE(n);
    std::vector<IVec> pts = exponent_points(Shape(k, n));
    CHECK(pts.size() == static_cast<size_t>(2 * k * (n - k) - n + 2));
    CHECK(same_point_set(pts, reference_generators(k, n)));
    for (const IVec& p : pts)
      for (Eigen::Index t = 0; t < p.size(); ++t)
        CHECK((p[t] == -1 || p[t] == 0 || p[t] == 1));
  }
}

TEST_CASE("exponent points for Gr(2,4) explicitly") {
  // slots: f11, f12, f21, f22
  std::vector<IVec> want = {
      ivec({1, 0, 0, 0}),   ivec({0, 0, 0, -1}), ivec({-1, 0, 1, 0}),
      ivec({0, -1, 0, 1}),  ivec({-1, 1, 0, 0}), ivec({0, 0, -1, 1}),
  };
  CHECK(same_point_set(exponent_points(Shape(2, 4)), want));
}

TEST_CASE("exponent points respect the area budget") {
  CHECK_THROWS_AS(exponent_points(Shape(2, 6)), BudgetError);
  CHECK(exponent_points(Shape(2, 6), 8).size() == 2 * 8 - 6 + 2);
}

TEST_CASE("hull of an interval") {
  LatticePolytope p = convex_hull({ivec({-1}), ivec({1})});
  CHECK(p.dim == 1);
  REQUIRE(p.facets.size() == 2);
  for (const Facet& f : p.facets) {
    CHECK(f.rhs == 1);
    CHECK((f.normal == ivec({1}) || f.normal == ivec({-1})));
  }
  CHECK(p.facets[0].normal != p.facets[1].normal);
}

TEST_CASE("hull of the cross polytope") {
  LatticePolytope p =
      convex_hull({ivec({1, 0}), ivec({-1, 0}), ivec({0, 1}), ivec({0, -1})});
  REQUIRE(p.facets.size() == 4);
  for (const Facet& f : p.facets) {
    CHECK(f.rhs == 1);
    CHECK(std::abs(f.normal[0]) == 1);
    CHECK(std::abs(f.normal[1]) == 1);
  }
}

TEST_CASE("hull of the square") {
  LatticePolytope p = convex_hull(
      {ivec({1, 1}), ivec({1, -1}), ivec({-1, 1}), ivec({-1, -1})});
  REQUIRE(p.facets.size() == 4);
  for (const Facet& f : p.facets) {
    CHECK(f.rhs == 1);
    CHECK(std::abs(f.normal[0]) + std::abs(f.normal[1]) == 1);
  }
}

TEST_CASE("hull interior points ignore non-vertex generators") {
  // the origin is inside and must not affect the facets
  LatticePolytope with = convex_hull({ivec({-1}), ivec({0}), ivec({1})});
  CHECK(with.facets.size() == 2);
  for (const Facet& f : with.facets) CHECK(f.rhs == 1);
}

TEST_CASE("degenerate hulls are rejected") {
  CHECK_THROWS_AS(convex_hull({}), std::invalid_argument);
  CHECK_THROWS_AS(convex_hull({ivec({1}), ivec({1, 2})}), std::invalid_argument);
  // collinear points never span the plane
  CHECK_THROWS_AS(convex_hull({ivec({1, 0}), ivec({-1, 0}), ivec({3, 0})}),
                  std::domain_error);
  CHECK_THROWS_AS(convex_hull({ivec({1, 0}), ivec({0, 1})}), std::domain_error);
}

TEST_CASE("hull facets are sound and tight") {
  for (auto [k, n] : {std::pair<int, int>{1, 3}, {1, 4}, {2, 4}}) {
    CAPTURE(k);
    CAPTURE(n);
    std::vector<IVec> pts = exponent_points(Shape(k, n));
    LatticePolytope p = convex_hull(pts);
    CHECK(p.dim == k * (n - k));
    for (const Facet& f : p.facets) {
      std::int64_t g = 0;
      for (Eigen::Index t = 0; t < f.normal.size(); ++t)
        g = std::gcd(g, f.normal[t]);
      CHECK(g == 1);

      std::vector<IVec> tight;
      for (const IVec& x : pts) {
        std::int64_t val = f.normal.dot(x);
        CHECK(val <= f.rhs);
        if (val == f.rhs) tight.push_back(x);
      }
      CHECK(affine_rank(tight) >= p.dim - 1);
      CHECK(tight.size() >= static_cast<size_t>(p.dim));
    }
    for (size_t i = 0; i < p.facets.size(); ++i)
      for (size_t j = i + 1; j < p.facets.size(); ++j)
        CHECK(p.facets[i].normal != p.facets[j].normal);
  }
}

TEST_CASE("reflexivity certificates") {
  LatticePolytope interval = convex_hull({ivec({-1}), ivec({1})});
  ReflexivityReport r = reflexivity_check(interval);
  CHECK(r.reflexive);
  CHECK(r.origin_interior);
  CHECK_FALSE(r.witness_facet.has_value());

  // stretching one vertex to (2,0) produces a facet with rhs 2
  LatticePolytope stretched = convex_hull(
      {ivec({2, 0}), ivec({-1, 0}), ivec({0, 1}), ivec({0, -1})});
  r = reflexivity_check(stretched);
  CHECK_FALSE(r.reflexive);
  CHECK(r.origin_interior);
  REQUIRE(r.witness_facet.has_value());
  CHECK(stretched.facets[*r.witness_facet].rhs != 1);

  // origin on the boundary
  LatticePolytope shifted = convex_hull(
      {ivec({0, 0}), ivec({1, 0}), ivec({0, 1}), ivec({1, 1})});
  r = reflexivity_check(shifted);
  CHECK_FALSE(r.reflexive);
  CHECK_FALSE(r.origin_interior);
}

TEST_CASE("interior lattice point enumeration") {
  LatticePolytope interval = convex_hull({ivec({-1}), ivec({1})});
  std::vector<IVec> in = interior_lattice_points(interval);
  REQUIRE(in.size() == 1);
  CHECK(in[0] == ivec({0}));

  LatticePolytope cross =
      convex_hull({ivec({1, 0}), ivec({-1, 0}), ivec({0, 1}), ivec({0, -1})});
  in = interior_lattice_points(cross);
  REQUIRE(in.size() == 1);
  CHECK(in[0].isZero());

  LatticePolytope shifted = convex_hull(
      {ivec({0, 0}), ivec({1, 0}), ivec({0, 1}), ivec({1, 1})});
  CHECK(interior_lattice_points(shifted).empty());

  // wide interval has three interior points
  LatticePolytope wide = convex_hull({ivec({-2}), ivec({2})});
  CHECK(interior_lattice_points(wide).size() == 3);
}

TEST_CASE("exponent polytopes are reflexive with a unique interior point") {
  for (auto [k, n] :
       {std::pair<int, int>{1, 2}, {1, 3}, {1, 4}, {2, 4}, {2, 5}}) {
    CAPTURE(k);
    CAPTURE(n);
    LatticePolytope p = convex_hull(exponent_points(Shape(k, n)));
    ReflexivityReport r = reflexivity_check(p);
    CHECK(r.reflexive);
    CHECK(r.origin_interior);
    std::vector<IVec> in = interior_lattice_points(p);
    REQUIRE(in.size() == 1);
    CHECK(in[0].isZero());
  }
}
