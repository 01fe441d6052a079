#include "grmir/flowgraph.hpp"

#include <algorithm>
#include <array>

namespace grmir {

namespace {

// Sort key giving the canonical edge order.
std::array<int, 5> edge_key(const FlowGraph& g, const GraphEdge& e) {
  auto pos = [&](int v) -> std::array<int, 2> {
    const GraphVertex& gv = g.vertices[v];
    switch (gv.kind) {
      case VertexKind::Z1:
        return {0, 0};
      case VertexKind::Z2:
        return {g.shape.n(), 0};
      default:
        return {gv.box.col, gv.box.row};
    }
  };
  auto [tc, tr] = pos(e.tail);
  auto [hc, hr] = pos(e.head);
  return {g.vertex_weight(e.tail), tc, tr, hc, hr};
}

}  // namespace

FlowGraph build_flow_graph(const Shape& shape) {
  FlowGraph g{shape, {}, {}};
  for (ColumnBox b : shape.box_list()) g.vertices.push_back({VertexKind::Box, b});
  g.vertices.push_back({VertexKind::Z1, {}});
  g.vertices.push_back({VertexKind::Z2, {}});

  const int n = shape.n();
  for (int i = 1; i + 1 <= n - 1; ++i) {
    for (int a = 1; a <= shape.height(i); ++a) {
      for (int b = 1; b <= shape.height(i + 1); ++b) {
        ColumnBox p{i, a}, q{i + 1, b};
        int wp = box_weight(shape, p), wq = box_weight(shape, q);
        if (wp - wq != 1 && wq - wp != 1) continue;
        int pi = shape.box_index(p), qi = shape.box_index(q);
        if (wp > wq)
          g.edges.push_back({pi, qi});
        else
          g.edges.push_back({qi, pi});
      }
    }
  }
  g.edges.push_back({shape.box_index({shape.k(), 1}), g.z1_index()});
  g.edges.push_back({g.z2_index(), shape.box_index({n - shape.k(), shape.k()})});

  std::sort(g.edges.begin(), g.edges.end(),
            [&](const GraphEdge& a, const GraphEdge& b) {
              return edge_key(g, a) < edge_key(g, b);
            });
  return g;
}

}  // namespace grmir
