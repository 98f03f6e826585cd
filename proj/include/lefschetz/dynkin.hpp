#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lefschetz/homology0.hpp"
#include "lefschetz/join1.hpp"
#include "lefschetz/zlattice.hpp"

namespace lefschetz {

enum class VertexKind { Plain, PullBack, Tangency, Exceptional };
const char* vertexKindName(VertexKind k);

struct DynkinVertex {
  std::string label;
  VertexKind kind = VertexKind::Plain;
};

struct DynkinEdge {
  int u = 0, v = 0;  // u < v
  long sign = 0;     // <u, v>
  int multiplicity = 0;
  bool dashed = false;
};

struct DynkinGraph {
  int dim = 0;
  std::vector<DynkinVertex> vertices;
  std::vector<DynkinEdge> edges;

  int size() const { return static_cast<int>(vertices.size()); }
  std::vector<std::vector<int>> adjacency() const;
  bool connected() const;
  nlohmann::json toJson() const;
};

DynkinGraph build(const IntMatrix& form, const std::vector<DynkinVertex>& vertices, int dim);
DynkinGraph build(const Basis0& basis);
DynkinGraph build(const JoinBasis& basis, const IntMatrix& form);

// Largest number of pull-back neighbours of a tangency vertex.
int max_tangency_pullback_degree(const DynkinGraph& g);

// Canonical string of the induced subgraph (edge multiplicities, signs ignored).
std::string canonical_form(const DynkinGraph& g, const std::vector<int>& vertices);
std::string canonical_form(const DynkinGraph& g);

struct SubgraphReport {
  int expectedComponents = 0;
  bool connectedBefore = false;
  std::vector<std::vector<std::string>> components;
  std::vector<bool> isomorphic;
  bool pass() const;
  nlohmann::json toJson() const;
};

// Removes tangency and exceptional vertices of H and compares each component with G.
// Throws DecompositionFailure unless there are exactly n^2 components, all isomorphic to G.
SubgraphReport subgraph_decomposition(const DynkinGraph& H, const DynkinGraph& G, int n);

std::string to_dot(const DynkinGraph& g);

}  // namespace lefschetz
