#include "grmir/jsonio.hpp"

#include "grmir/scalars.hpp"

namespace grmir {

Json graph_json(const FlowGraph& g) {
  Json vertices = Json::array();
  for (const GraphVertex& v : g.vertices) {
    Json jv;
    switch (v.kind) {
      case VertexKind::Box:
        jv["type"] = "box";
        jv["col"] = v.box.col;
        jv["row"] = v.box.row;
        jv["weight"] = box_weight(g.shape, v.box);
        break;
      case VertexKind::Z1:
        jv["type"] = "z1";
        break;
      case VertexKind::Z2:
        jv["type"] = "z2";
        break;
    }
    vertices.push_back(std::move(jv));
  }
  Json edges = Json::array();
  for (const GraphEdge& e : g.edges) {
    edges.push_back(Json::array({e.tail, e.head}));
  }
  Json out;
  out["k"] = g.shape.k();
  out["n"] = g.shape.n();
  out["vertices"] = std::move(vertices);
  out["edges"] = std::move(edges);
  return out;
}

Json omega_poly_json(const OmegaPoly& p) {
  Json coeffs = Json::array();
  for (int i = 0; i <= p.degree(); ++i) {
    coeffs.push_back(to_decimal(p.coeff(i)));
  }
  return coeffs;
}

Json constant_term_json(const ConstantTerm& ct) {
  Json out;
  if (ct.z_degree < 0) {
    out["z_degree"] = nullptr;
  } else {
    out["z_degree"] = ct.z_degree;
  }
  out["coeff"] = to_decimal(ct.coeff);
  return out;
}

Json ivec_json(const IVec& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out.push_back(v[i]);
  }
  return out;
}

Json facet_json(const Facet& f) {
  Json out;
  out["normal"] = ivec_json(f.normal);
  out["rhs"] = f.rhs;
  return out;
}

}  // namespace grmir
