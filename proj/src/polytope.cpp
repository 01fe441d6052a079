#include "grmir/polytope.hpp"

#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "grmir/flowgraph.hpp"

namespace grmir {

namespace {

using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

int rect_slot(const Shape& s, RectBox rb) {
  return (rb.r - 1) * (s.n() - s.k()) + (rb.c - 1);
}

// Row echelon over the rationals; returns rank, m becomes upper triangular
// with pivot columns recorded.
int eliminate(RatMat& m, std::vector<int>& pivot_cols) {
  int rows = static_cast<int>(m.rows()), cols = static_cast<int>(m.cols());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    m.row(rank).swap(m.row(pivot));
    Rat lead = m(rank, c);
    for (int cc = c; cc < cols; ++cc) m(rank, cc) /= lead;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m(r, c) == 0) continue;
      Rat f = m(r, c);
      for (int cc = c; cc < cols; ++cc) m(r, cc) -= f * m(rank, cc);
    }
    pivot_cols.push_back(c);
    ++rank;
  }
  return rank;
}

int affine_rank(const std::vector<IVec>& pts) {
  if (pts.empty()) return -1;
  int dim = static_cast<int>(pts[0].size());
  RatMat m(static_cast<int>(pts.size()) - 1, dim);
  for (int i = 1; i < static_cast<int>(pts.size()); ++i)
    for (int c = 0; c < dim; ++c)
      m(i - 1, c) = Rat(Int(pts[i][c] - pts[0][c]));
  std::vector<int> piv;
  return eliminate(m, piv);
}

std::vector<std::int64_t> facet_key(const Facet& f) {
  std::vector<std::int64_t> k(f.normal.data(), f.normal.data() + f.normal.size());
  k.push_back(f.rhs);
  return k;
}

}  // namespace

std::vector<IVec> exponent_points(const Shape& shape, int area_budget) {
  if (shape.boxes() > area_budget)
    throw BudgetError("polytope budget exceeded: k(n-k)=" +
                      std::to_string(shape.boxes()) + " > " +
                      std::to_string(area_budget));
  FlowGraph g = build_flow_graph(shape);
  std::vector<IVec> pts;
  pts.reserve(g.edges.size());
  for (const GraphEdge& e : g.edges) {
    IVec v = IVec::Zero(shape.boxes());
    const GraphVertex& head = g.vertices[e.head];
    const GraphVertex& tail = g.vertices[e.tail];
    if (head.kind == VertexKind::Box)
      v[rect_slot(shape, rect_of_column(shape, head.box))] += 1;
    if (tail.kind == VertexKind::Box)
      v[rect_slot(shape, rect_of_column(shape, tail.box))] -= 1;
    pts.push_back(std::move(v));
  }
  return pts;
}

LatticePolytope convex_hull(const std::vector<IVec>& points) {
  if (points.empty()) throw std::invalid_argument("hull of no points");
  const int dim = static_cast<int>(points[0].size());
  for (const IVec& p : points)
    if (p.size() != dim) throw std::invalid_argument("mixed point dimensions");
  if (affine_rank(points) != dim)
    throw std::domain_error("polytope is not full-dimensional");

  const int npts = static_cast<int>(points.size());
  std::set<std::vector<std::int64_t>> seen;
  LatticePolytope out;
  out.dim = dim;
  out.points = points;

  std::vector<int> idx(dim);
  // iterate over all dim-subsets of the points
  auto next_subset = [&](std::vector<int>& v) {
    int i = dim - 1;
    while (i >= 0 && v[i] == npts - dim + i) --i;
    if (i < 0) return false;
    ++v[i];
    for (int j = i + 1; j < dim; ++j) v[j] = v[j - 1] + 1;
    return true;
  };
  for (int i = 0; i < dim; ++i) idx[i] = i;

  do {
    // hyperplane a.x = b through the subset: nullspace of [p_i | -1]
    RatMat m(dim, dim + 1);
    for (int r = 0; r < dim; ++r) {
      for (int c = 0; c < dim; ++c) m(r, c) = Rat(Int(points[idx[r]][c]));
      m(r, dim) = Rat(-1);
    }
    std::vector<int> piv;
    int rank = eliminate(m, piv);
    if (rank != dim) continue;  // subset not affinely independent

    // unique free column gives the nullvector
    std::vector<bool> is_piv(dim + 1, false);
    for (int c : piv) is_piv[c] = true;
    int free_col = -1;
    for (int c = 0; c <= dim; ++c)
      if (!is_piv[c]) {
        free_col = c;
        break;
      }
    RatVec null_v = RatVec::Zero(dim + 1);
    null_v[free_col] = Rat(1);
    for (int r = 0; r < rank; ++r) null_v[piv[r]] = -m(r, free_col);

    // clear denominators, make primitive
    Int lcm_den = 1;
    for (int c = 0; c <= dim; ++c) {
      Int den = rat_den(null_v[c]);
      lcm_den = lcm_den / boost::multiprecision::gcd(lcm_den, den) * den;
    }
    std::vector<Int> ints(dim + 1);
    Int g = 0;
    for (int c = 0; c <= dim; ++c) {
      ints[c] = rat_num(null_v[c] * Rat(lcm_den));
      g = boost::multiprecision::gcd(g, ints[c]);
    }
    for (int c = 0; c <= dim; ++c) ints[c] /= g;

    // orient as a.x <= b over all points, or skip if not supporting
    bool all_le = true, all_ge = true;
    for (const IVec& p : points) {
      Int dot = 0;
      for (int c = 0; c < dim; ++c) dot += ints[c] * p[c];
      if (dot > ints[dim]) all_le = false;
      if (dot < ints[dim]) all_ge = false;
    }
    if (!all_le && !all_ge) continue;
    if (!all_le) {
      for (int c = 0; c <= dim; ++c) ints[c] = -ints[c];
    }

    Facet f;
    f.normal = IVec(dim);
    for (int c = 0; c < dim; ++c)
      f.normal[c] = static_cast<std::int64_t>(ints[c]);
    f.rhs = static_cast<std::int64_t>(ints[dim]);
    if (seen.insert(facet_key(f)).second) out.facets.push_back(std::move(f));
  } while (next_subset(idx));

  std::sort(out.facets.begin(), out.facets.end(),
            [](const Facet& a, const Facet& b) {
              return facet_key(a) < facet_key(b);
            });
  return out;
}

ReflexivityReport reflexivity_check(const LatticePolytope& p) {
  ReflexivityReport r;
  r.origin_interior = true;
  r.reflexive = true;
  for (int i = 0; i < static_cast<int>(p.facets.size()); ++i) {
    if (p.facets[i].rhs < 1) r.origin_interior = false;  // 0 < rhs fails
    if (p.facets[i].rhs != 1) {
      r.reflexive = false;
      if (!r.witness_facet) r.witness_facet = i;
    }
  }
  if (p.facets.empty()) {
    r.reflexive = false;
    r.origin_interior = false;
  }
  return r;
}

std::vector<IVec> interior_lattice_points(const LatticePolytope& p) {
  std::vector<IVec> out;
  if (p.points.empty()) return out;
  IVec lo = p.points[0], hi = p.points[0];
  for (const IVec& q : p.points)
    for (int c = 0; c < p.dim; ++c) {
      lo[c] = std::min(lo[c], q[c]);
      hi[c] = std::max(hi[c], q[c]);
    }
  IVec cur = lo;
  while (true) {
    bool inside = true;
    for (const Facet& f : p.facets) {
      std::int64_t dot = 0;
      for (int c = 0; c < p.dim; ++c) dot += f.normal[c] * cur[c];
      if (dot >= f.rhs) {
        inside = false;
        break;
      }
    }
    if (inside) out.push_back(cur);
    int c = 0;
    for (; c < p.dim; ++c) {
      if (cur[c] < hi[c]) {
        ++cur[c];
        break;
      }
      cur[c] = lo[c];
    }
    if (c == p.dim) break;
  }
  return out;
}

}  // namespace grmir
