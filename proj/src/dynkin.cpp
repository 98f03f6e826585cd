#include "lefschetz/dynkin.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

#include "lefschetz/errors.hpp"

namespace lefschetz {

const char* vertexKindName(VertexKind k) {
  switch (k) {
    case VertexKind::Plain: return "plain";
    case VertexKind::PullBack: return "pull-back";
    case VertexKind::Tangency: return "tangency";
    case VertexKind::Exceptional: return "exceptional";
  }
  return "?";
}

std::vector<std::vector<int>> DynkinGraph::adjacency() const {
  std::vector<std::vector<int>> adj(size(), std::vector<int>(size()));
  for (const auto& e : edges) adj[e.u][e.v] = adj[e.v][e.u] = e.multiplicity;
  return adj;
}

bool DynkinGraph::connected() const {
  if (vertices.empty()) return true;
  auto adj = adjacency();
  std::vector<bool> seen(size());
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < size(); ++v)
      if (adj[u][v] && !seen[v]) {
        seen[v] = true;
        ++count;
        stack.push_back(v);
      }
  }
  return count == size();
}

nlohmann::json DynkinGraph::toJson() const {
  nlohmann::json vs = nlohmann::json::array(), es = nlohmann::json::array();
  for (const auto& v : vertices) vs.push_back({{"label", v.label}, {"kind", vertexKindName(v.kind)}});
  for (const auto& e : edges)
    es.push_back({{"u", vertices[e.u].label}, {"v", vertices[e.v].label}, {"intersection", e.sign},
                  {"multiplicity", e.multiplicity}, {"dashed", e.dashed}});
  return {{"dim", dim}, {"vertices", vs}, {"edges", es}};
}

DynkinGraph build(const IntMatrix& form, const std::vector<DynkinVertex>& vertices, int dim) {
  if (form.rows() != form.cols() || form.rows() != static_cast<int>(vertices.size()))
    throw Error(ErrorKind::InvalidInput, "form and vertex list sizes differ");
  DynkinGraph g;
  g.dim = dim;
  g.vertices = vertices;
  const long dashSign = dim % 2 == 0 ? 1 : -1;
  for (int u = 0; u < form.rows(); ++u)
    for (int v = u + 1; v < form.cols(); ++v) {
      long s = form(u, v).get_si();
      if (s == 0) continue;
      g.edges.push_back({u, v, s, static_cast<int>(std::labs(s)), (s > 0 ? 1 : -1) == dashSign});
    }
  return g;
}

DynkinGraph build(const Basis0& basis) {
  std::vector<DynkinVertex> vs;
  for (const auto& l : basis.labels) {
    VertexKind k = l.kind == Kind0::Tangency ? VertexKind::Tangency
                   : l.kind == Kind0::PullBack ? VertexKind::PullBack
                                               : VertexKind::Plain;
    vs.push_back({l.str(), k});
  }
  return build(basis.gram(), vs, 0);
}

DynkinGraph build(const JoinBasis& basis, const IntMatrix& form) {
  std::vector<DynkinVertex> vs;
  for (const auto& l : basis.labels) {
    VertexKind k = VertexKind::PullBack;
    if (l.kind == JoinKind::Plain) k = VertexKind::Plain;
    if (l.kind == JoinKind::TangencyX || l.kind == JoinKind::TangencyY) k = VertexKind::Tangency;
    if (l.kind == JoinKind::Exceptional) k = VertexKind::Exceptional;
    vs.push_back({l.str(), k});
  }
  return build(form, vs, 1);
}

int max_tangency_pullback_degree(const DynkinGraph& g) {
  auto adj = g.adjacency();
  int best = 0;
  for (int u = 0; u < g.size(); ++u) {
    if (g.vertices[u].kind != VertexKind::Tangency) continue;
    int deg = 0;
    for (int v = 0; v < g.size(); ++v)
      if (adj[u][v] && g.vertices[v].kind == VertexKind::PullBack) ++deg;
    best = std::max(best, deg);
  }
  return best;
}

std::string canonical_form(const DynkinGraph& g, const std::vector<int>& vertices) {
  auto adj = g.adjacency();
  const int m = static_cast<int>(vertices.size());
  std::vector<int> degree(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) degree[i] += adj[vertices[i]][vertices[j]];
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int u, int v) { return degree[u] < degree[v]; });
  // Permute only within blocks of equal degree.
  std::vector<std::pair<int, int>> blocks;
  for (int i = 0; i < m;) {
    int j = i;
    while (j < m && degree[order[j]] == degree[order[i]]) ++j;
    blocks.push_back({i, j});
    i = j;
  }
  auto encode = [&]() {
    std::string s;
    for (int i = 0; i < m; ++i) s += std::to_string(degree[order[i]]) + ",";
    s += "|";
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) s += static_cast<char>('0' + adj[vertices[order[i]]][vertices[order[j]]]);
    return s;
  };
  for (auto& [b, e] : blocks) std::sort(order.begin() + b, order.begin() + e);
  std::string best = encode();
  // Odometer over the block permutations.
  while (true) {
    size_t k = 0;
    for (; k < blocks.size(); ++k) {
      auto [b, e] = blocks[k];
      if (std::next_permutation(order.begin() + b, order.begin() + e)) break;
    }
    if (k == blocks.size()) break;
    best = std::min(best, encode());
  }
  return best;
}

std::string canonical_form(const DynkinGraph& g) {
  std::vector<int> all(g.size());
  std::iota(all.begin(), all.end(), 0);
  return canonical_form(g, all);
}

bool SubgraphReport::pass() const {
  return static_cast<int>(components.size()) == expectedComponents &&
         std::all_of(isomorphic.begin(), isomorphic.end(), [](bool b) { return b; });
}

nlohmann::json SubgraphReport::toJson() const {
  nlohmann::json cs = nlohmann::json::array();
  for (size_t k = 0; k < components.size(); ++k) cs.push_back({{"vertices", components[k]}, {"isomorphic", bool(isomorphic[k])}});
  return {{"expected_components", expectedComponents}, {"components", cs}, {"connected_before_removal", connectedBefore},
          {"verdict", pass() ? "pass" : "fail"}};
}

SubgraphReport subgraph_decomposition(const DynkinGraph& H, const DynkinGraph& G, int n) {
  SubgraphReport rep;
  rep.expectedComponents = n * n;
  rep.connectedBefore = H.connected();
  auto adj = H.adjacency();
  std::vector<int> keep;
  for (int v = 0; v < H.size(); ++v)
    if (H.vertices[v].kind == VertexKind::PullBack || H.vertices[v].kind == VertexKind::Plain) keep.push_back(v);
  std::map<int, int> comp;
  std::vector<std::vector<int>> members;
  for (int s : keep) {
    if (comp.count(s)) continue;
    int id = static_cast<int>(members.size());
    members.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      members[id].push_back(u);
      for (int v : keep)
        if (adj[u][v] && !comp.count(v)) {
          comp[v] = id;
          stack.push_back(v);
        }
    }
  }
  const std::string target = canonical_form(G);
  for (auto& m : members) {
    std::sort(m.begin(), m.end());
    std::vector<std::string> labels;
    for (int v : m) labels.push_back(H.vertices[v].label);
    rep.components.push_back(labels);
    rep.isomorphic.push_back(canonical_form(H, m) == target);
  }
  if (!rep.pass())
    throw Error(ErrorKind::DecompositionFailure, "remainder graph does not split into n^2 copies of G", rep.toJson());
  return rep;
}

std::string to_dot(const DynkinGraph& g) {
  std::ostringstream os;
  os << "graph dynkin {\n";
  for (int v = 0; v < g.size(); ++v) {
    os << "  v" << v << " [label=\"" << g.vertices[v].label << "\"";
    switch (g.vertices[v].kind) {
      case VertexKind::Tangency: os << ", shape=circle, style=filled, fillcolor=black, fontcolor=white"; break;
      case VertexKind::Exceptional: os << ", shape=square"; break;
      default: os << ", shape=circle"; break;
    }
    os << "];\n";
  }
  for (const auto& e : g.edges) {
    os << "  v" << e.u << " -- v" << e.v;
    std::vector<std::string> attrs;
    if (e.dashed) attrs.push_back("style=dashed");
    if (e.multiplicity > 1) attrs.push_back("label=\"" + std::to_string(e.multiplicity) + "\"");
    if (!attrs.empty()) {
      os << " [";
      for (size_t k = 0; k < attrs.size(); ++k) os << (k ? ", " : "") << attrs[k];
      os << "]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace lefschetz
