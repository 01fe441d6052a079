#pragma once

#include <json.hpp>

#include "grmir/flowgraph.hpp"
#include "grmir/master.hpp"
#include "grmir/polytope.hpp"
#include "grmir/superpotential.hpp"

namespace grmir {

// Insertion-ordered JSON so emitted documents are stable across runs.
using Json = nlohmann::ordered_json;

// Arbitrary-precision values are serialized as decimal strings; only
// machine-width quantities (indices, exponents, degrees) stay numbers.
Json graph_json(const FlowGraph& g);
Json omega_poly_json(const OmegaPoly& p);
Json constant_term_json(const ConstantTerm& ct);
Json ivec_json(const IVec& v);
Json facet_json(const Facet& f);

}  // namespace grmir
