#pragma once

#include <vector>

#include "grmir/shape.hpp"

namespace grmir {

enum class VertexKind { Z1, Z2, Box };

struct GraphVertex {
  VertexKind kind = VertexKind::Box;
  ColumnBox box;  // meaningful only when kind == Box
};

// Indices into FlowGraph::vertices.
struct GraphEdge {
  int tail = 0;
  int head = 0;
  friend bool operator==(GraphEdge a, GraphEdge b) {
    return a.tail == b.tail && a.head == b.head;
  }
};

// Acyclic weighted graph: every edge drops the weight by exactly 1, z2 is
// the unique source (weight n), z1 the unique sink (weight 0).
struct FlowGraph {
  Shape shape;
  std::vector<GraphVertex> vertices;  // boxes in canonical order, then z1, z2
  std::vector<GraphEdge> edges;       // canonical order, see build_flow_graph

  int z1_index() const { return shape.boxes(); }
  int z2_index() const { return shape.boxes() + 1; }

  int vertex_weight(int v) const {
    const GraphVertex& gv = vertices.at(v);
    switch (gv.kind) {
      case VertexKind::Z1:
        return 0;
      case VertexKind::Z2:
        return shape.n();
      default:
        return box_weight(shape, gv.box);
    }
  }

  std::vector<int> out_edges(int v) const {
    std::vector<int> out;
    for (int e = 0; e < static_cast<int>(edges.size()); ++e)
      if (edges[e].tail == v) out.push_back(e);
    return out;
  }

  std::vector<int> in_edges(int v) const {
    std::vector<int> out;
    for (int e = 0; e < static_cast<int>(edges.size()); ++e)
      if (edges[e].head == v) out.push_back(e);
    return out;
  }
};

// Box-box edges join boxes of consecutive columns whose weights differ by 1,
// oriented from the larger weight to the smaller; one edge Box(k,1) -> z1 and
// one z2 -> Box(n-k,k). Edges sorted by (tail weight, tail col, tail row,
// head col, head row) with z1 at column 0 and z2 at column n.
FlowGraph build_flow_graph(const Shape& shape);

}  // namespace grmir
