#include "lefschetz/homology0.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "lefschetz/errors.hpp"

namespace lefschetz {

namespace {

struct CritPoint {
  cplx x;
  int valueIndex;
};

// Groups critical points of poly by value; values in first-seen order of ascending points.
void criticalStructure(const UniPoly& poly, std::vector<CritPoint>& points, std::vector<cplx>& values) {
  auto cps = roots(poly.derivative());
  for (const auto& x : cps.roots) {
    cplx v = poly.eval(x);
    int idx = -1;
    for (size_t k = 0; k < values.size(); ++k)
      if (std::abs(values[k] - v) <= kCriticalValueTol * std::max(1.0, std::abs(v))) idx = static_cast<int>(k);
    if (idx < 0) {
      idx = static_cast<int>(values.size());
      values.push_back(v);
    }
    points.push_back({x, idx});
  }
}

std::vector<cplx> fiberAt(const UniPoly& poly, cplx b) {
  std::vector<cplx> c;
  for (const auto& v : poly.coeffs()) c.emplace_back(v.get_d(), 0.0);
  c[0] -= b;
  return roots(c).roots;
}

void requireRegular(cplx b, const std::vector<cplx>& values) {
  for (const auto& v : values)
    if (std::abs(v - b) <= 1e-9 * std::max(1.0, std::abs(v)))
      throw Error(ErrorKind::NotRegularValue, "base value is a critical value",
                  {{"base", {b.real(), b.imag()}}});
}

double gapOf(int k, const std::vector<cplx>& values, cplx b) {
  double g = std::abs(values[k] - b);
  for (size_t j = 0; j < values.size(); ++j)
    if (static_cast<int>(j) != k) g = std::min(g, std::abs(values[j] - values[k]));
  return g;
}

// For each critical point, the pair of base-fiber indices that collide along its path.
std::vector<std::pair<int, int>> collidingPairs(const UniPoly& poly, const std::vector<cplx>& fiber, cplx b,
                                                int sigma, const std::vector<CritPoint>& points,
                                                const std::vector<cplx>& values,
                                                const std::vector<UniPoly>& stages = {}) {
  double H = detourHeight(b, values);
  std::vector<std::pair<int, int>> out(points.size());
  for (size_t vk = 0; vk < values.size(); ++vk) {
    double r = 1e-3 * gapOf(static_cast<int>(vk), values, b);
    auto path = distinguished_path(b, values[vk], sigma, H, r);
    TrackOptions opts;
    opts.stages = stages;
    auto tracked = track_path(poly, path, fiber, opts).roots;
    for (size_t c = 0; c < points.size(); ++c) {
      if (points[c].valueIndex != static_cast<int>(vk)) continue;
      std::vector<std::pair<double, int>> d;
      for (size_t k = 0; k < tracked.size(); ++k) d.push_back({std::abs(tracked[k] - points[c].x), static_cast<int>(k)});
      std::sort(d.begin(), d.end());
      if (d.size() > 2 && !(d[1].first < 0.5 * d[2].first))
        throw Error(ErrorKind::Internal, "ambiguous colliding pair", {{"value_index", vk}});
      out[c] = {std::min(d[0].second, d[1].second), std::max(d[0].second, d[1].second)};
    }
  }
  return out;
}

IntVec pairVector(int n, int plus, int minus) {
  IntVec v(n);
  v[plus] = 1;
  v[minus] = -1;
  return v;
}

}  // namespace

std::string Label0::str() const {
  std::string s(1, symbol);
  s += std::to_string(index);
  if (kind == Kind0::PullBack) s += "^" + std::to_string(branch);
  return s;
}

IntMatrix Basis0::gram() const {
  int r = size();
  IntMatrix g(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) g(i, j) = dot(cycles[i], cycles[j]);
  return g;
}

int Basis0::indexOf(const std::string& label) const {
  for (int k = 0; k < size(); ++k)
    if (labels[k].str() == label) return k;
  throw Error(ErrorKind::InvalidInput, "unknown cycle label: " + label);
}

int Basis0::valueIndex(const std::string& label) const {
  for (size_t k = 0; k < values.size(); ++k)
    if (values[k].label == label) return static_cast<int>(k);
  throw Error(ErrorKind::UnknownCriticalValue, "unknown critical value label: " + label);
}

std::vector<int> Basis0::cyclesAt(int v) const {
  std::vector<int> out;
  for (int k = 0; k < size(); ++k)
    if (valueOf[k] == v) out.push_back(k);
  return out;
}

nlohmann::json Basis0::toJson() const {
  nlohmann::json pts = nlohmann::json::array(), cyc = nlohmann::json::array(), vals = nlohmann::json::array();
  for (const auto& p : fiber.points) pts.push_back({p.real(), p.imag()});
  for (int k = 0; k < size(); ++k) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : cycles[k]) coeffs.push_back(c.get_si());
    cyc.push_back({{"label", labels[k].str()}, {"value", values[valueOf[k]].label}, {"coeffs", coeffs}});
  }
  for (const auto& v : values) vals.push_back({{"label", v.label}, {"value", {v.value.real(), v.value.imag()}}});
  return {{"points", pts}, {"cycles", cyc}, {"critical_values", vals}, {"sigma", sigma}};
}

Basis0 basis0(const UniPoly& poly, cplx b, int sigma) {
  Basis0 B;
  B.poly = poly;
  B.sigma = sigma;
  B.fiber = {fiberAt(poly, b), b};
  std::vector<CritPoint> points;
  std::vector<cplx> values;
  criticalStructure(poly, points, values);
  requireRegular(b, values);
  auto pairs = collidingPairs(poly, B.fiber.points, b, sigma, points, values);
  std::vector<size_t> order(points.size());
  for (size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](size_t u, size_t v) { return pairs[u] < pairs[v]; });
  int n = static_cast<int>(B.fiber.points.size());
  std::map<int, int> valueRemap;
  for (size_t pos = 0; pos < order.size(); ++pos) {
    size_t c = order[pos];
    Label0 lab;
    lab.index = static_cast<int>(pos) + 1;
    B.labels.push_back(lab);
    B.cycles.push_back(pairVector(n, pairs[c].first, pairs[c].second));
    int vk = points[c].valueIndex;
    if (!valueRemap.count(vk)) {
      valueRemap[vk] = static_cast<int>(B.values.size());
      B.values.push_back({values[vk], "v" + std::to_string(B.values.size() + 1)});
    }
    B.valueOf.push_back(valueRemap[vk]);
  }
  return B;
}

const Side& side(const Scenario& s, SideId id) { return id == SideId::Left ? s.left : s.right; }

Basis0 basis0(const Scenario& s, SideId id, cplx b) {
  const Side& sd = side(s, id);
  const char cycleSym = id == SideId::Left ? 'd' : 'g';
  const std::string valueSym = id == SideId::Left ? "c" : "a";
  Basis0 B;
  B.poly = sd.composite;
  B.stages = {sd.inner, sd.outer};
  B.sigma = id == SideId::Left ? 1 : -1;
  B.fiber = {fiberAt(sd.composite, b), b};
  const int N = static_cast<int>(B.fiber.points.size());

  std::vector<cplx> values;
  std::vector<CritPoint> points;
  std::vector<std::string> valueLabels;
  for (int i = 1; i <= s.a; ++i) {
    values.push_back(sd.C[i - 1]);
    valueLabels.push_back(valueSym + std::to_string(i));
  }
  for (int k = 1; k <= s.n - 1; ++k) {
    values.push_back(sd.Ctilde[k - 1]);
    valueLabels.push_back(valueSym + "~" + std::to_string(s.a + k));
  }
  for (const auto& cp : sd.critical) {
    int vk = cp.label - 1;
    points.push_back({cplx(cp.x, 0.0), vk});
  }
  requireRegular(b, values);
  auto pairs = collidingPairs(sd.composite, B.fiber.points, b, B.sigma, points, values, B.stages);

  struct Entry {
    Label0 label;
    IntVec cycle;
    int value;
  };
  std::vector<Entry> entries;
  for (size_t c = 0; c < sd.critical.size(); ++c) {
    const auto& cp = sd.critical[c];
    auto [lo, hi] = pairs[c];
    Label0 lab;
    lab.symbol = cycleSym;
    lab.index = cp.label;
    IntVec v;
    if (cp.kind == CompositeKind::Tangency) {
      lab.kind = Kind0::Tangency;
      v = pairVector(N, lo, hi);
    } else {
      lab.kind = Kind0::PullBack;
      lab.branch = cp.branch;
      int ip = -1;
      for (int i = 0; i < s.a; ++i)
        if (sd.labelOfOuterCritical[i] == cp.label) ip = i;
      auto rootIndex = [&](int k) {
        cplx y = sd.inner.eval(B.fiber.points[k]);
        int best = 0;
        for (size_t r = 1; r < sd.outerRoots.size(); ++r)
          if (std::abs(y - sd.outerRoots[r].get_d()) < std::abs(y - sd.outerRoots[best].get_d()))
            best = static_cast<int>(r);
        return best;
      };
      int rl = rootIndex(lo), rh = rootIndex(hi);
      if (rl == ip && rh == ip + 1)
        v = pairVector(N, lo, hi);
      else if (rl == ip + 1 && rh == ip)
        v = pairVector(N, hi, lo);
      else
        throw Error(ErrorKind::Internal, "pull-back cycle does not lift the expected cycle of the outer factor",
                    {{"label", lab.str()}});
    }
    entries.push_back({lab, v, points[c].valueIndex});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& u, const Entry& v) {
    if ((u.label.kind == Kind0::Tangency) != (v.label.kind == Kind0::Tangency))
      return v.label.kind == Kind0::Tangency;
    if (u.label.index != v.label.index) return u.label.index < v.label.index;
    return u.label.branch < v.label.branch;
  });
  for (size_t k = 0; k < values.size(); ++k) B.values.push_back({values[k], valueLabels[k]});
  for (auto& e : entries) {
    B.labels.push_back(e.label);
    B.cycles.push_back(std::move(e.cycle));
    B.valueOf.push_back(e.value);
  }
  return B;
}

Basis0 outer_basis0(const Scenario& s, SideId id, cplx b) {
  const Side& sd = side(s, id);
  Basis0 B = basis0(sd.outer, b, id == SideId::Left ? 1 : -1);
  const std::string valueSym = id == SideId::Left ? "c" : "a";
  for (auto& l : B.labels) l.symbol = id == SideId::Left ? 'd' : 'g';
  for (int k = 0; k < B.size(); ++k) {
    // delta_k vanishes at the k-th critical point of the outer factor.
    int label = sd.labelOfOuterCritical[k];
    B.values[B.valueOf[k]].label = valueSym + std::to_string(label);
  }
  return B;
}

long intersection0(const IntVec& u, const IntVec& v) { return dot(u, v).get_si(); }

IntMatrix pullback_intersection_table(const Basis0& basis) { return basis.gram(); }

nlohmann::json TableComparison::toJson() const {
  return {{"entries", entries}, {"mismatches", mismatches}, {"match", match()}};
}

TableComparison compare_tables(const IntMatrix& computed, const IntMatrix& reference,
                               const std::vector<std::string>& labels) {
  if (computed.rows() != reference.rows() || computed.cols() != reference.cols())
    throw Error(ErrorKind::Internal, "table shapes differ");
  TableComparison t;
  t.entries = computed.rows() * computed.cols();
  for (int i = 0; i < computed.rows(); ++i)
    for (int j = 0; j < computed.cols(); ++j)
      if (computed(i, j) != reference(i, j))
        t.mismatches.push_back(labels.at(i) + "," + labels.at(j) + ": " + computed(i, j).get_str() + " vs " +
                               reference(i, j).get_str());
  return t;
}

IntMatrix pullback_table_reference(const Scenario& s, const Basis0& basis, bool corrected) {
  const int a = s.a, n = s.n;
  auto e = [](int p) { return p % 2 == 0 ? 1 : 0; };
  auto entry = [&](const Label0& x, const Label0& y) -> long {
    if (x == y) return 2;
    if (x.kind == Kind0::PullBack && y.kind == Kind0::PullBack)
      return (x.branch == y.branch && std::abs(x.index - y.index) == 1) ? -1 : 0;
    if (x.kind == Kind0::Tangency && y.kind == Kind0::Tangency) return 0;
    const Label0& c = x.kind == Kind0::PullBack ? x : y;
    const Label0& t = x.kind == Kind0::PullBack ? y : x;
    int kk = t.index - a;
    long val = 0;
    if (kk % 2 == 1) {
      int k = (kk + 1) / 2;
      int jm = corrected ? 2 * k - 1 + e(n) : k + e(n);
      int jp = corrected ? 2 * k - 1 + e(n + 1) : k + e(n + 1);
      if (c.index == a && c.branch == jm) val -= 1;
      if (c.index == a && c.branch == jp) val += 1;
    } else {
      int k = kk / 2;
      if (c.index == 1 && c.branch == 2 * k + e(n + 1)) val -= 1;
      if (c.index == 1 && c.branch == 2 * k + e(n)) val += 1;
    }
    return val;
  };
  int r = basis.size();
  IntMatrix m(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m(i, j) = entry(basis.labels[i], basis.labels[j]);
  return m;
}

IntVec pushforward0(const UniPoly& map, const IntVec& cycle, const Fiber0& source, const Fiber0& target) {
  IntVec out(target.points.size());
  double spread = 1;
  for (const auto& p : target.points) spread = std::max(spread, std::abs(p));
  for (size_t k = 0; k < source.points.size(); ++k) {
    if (cycle[k] == 0) continue;
    cplx y = map.eval(source.points[k]);
    int best = -1;
    double bestDist = std::numeric_limits<double>::infinity();
    for (size_t j = 0; j < target.points.size(); ++j) {
      double d = std::abs(target.points[j] - y);
      if (d < bestDist) bestDist = d, best = static_cast<int>(j);
    }
    if (best < 0 || bestDist > 1e-6 * spread)
      throw Error(ErrorKind::UnmatchedPoint, "image point has no match in the target fiber",
                  {{"point", {y.real(), y.imag()}}, {"distance", bestDist}});
    out[best] += cycle[k];
  }
  return out;
}

IntVec coordinates(const Basis0& basis, const IntVec& pointVector) {
  const int rows = static_cast<int>(basis.fiber.points.size()), r = basis.size();
  std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(r + 1));
  for (int i = 0; i < rows; ++i) {
    for (int k = 0; k < r; ++k) a[i][k] = basis.cycles[k][i];
    a[i][r] = pointVector[i];
  }
  std::vector<int> pivCol;
  int row = 0;
  for (int c = 0; c < r && row < rows; ++c) {
    int p = row;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[row]);
    mpq_class inv = 1 / a[row][c];
    for (auto& x : a[row]) x *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == row || a[i][c] == 0) continue;
      mpq_class f = a[i][c];
      for (int j = c; j <= r; ++j) a[i][j] -= f * a[row][j];
    }
    pivCol.push_back(c);
    ++row;
  }
  for (int i = row; i < rows; ++i)
    if (a[i][r] != 0) throw Error(ErrorKind::Internal, "vector is not in the span of the basis");
  IntVec out(r);
  for (int i = 0; i < row; ++i) {
    if (a[i][r].get_den() != 1) throw Error(ErrorKind::Internal, "non-integral basis coordinates");
    out[pivCol[i]] = a[i][r].get_num();
  }
  return out;
}

IntMatrix pushforward_matrix(const UniPoly& map, const Basis0& source, const Basis0& target) {
  IntMatrix m(target.size(), source.size());
  for (int k = 0; k < source.size(); ++k) {
    auto img = coordinates(target, pushforward0(map, source.cycles[k], source.fiber, target.fiber));
    for (int i = 0; i < target.size(); ++i) m(i, k) = img[i];
  }
  return m;
}

MonodromyOp0 monodromy0(const Basis0& basis, int valueIndex) {
  if (valueIndex < 0 || valueIndex >= static_cast<int>(basis.values.size()))
    throw Error(ErrorKind::UnknownCriticalValue, "critical value index out of range", {{"index", valueIndex}});
  int r = basis.size();
  IntMatrix G = basis.gram();
  IntMatrix M = IntMatrix::identity(r);
  for (int j : basis.cyclesAt(valueIndex))
    for (int k = 0; k < r; ++k) M(j, k) -= G(k, j);
  return {M, valueIndex, basis.values[valueIndex].label};
}

std::vector<MonodromyOp0> all_monodromy0(const Basis0& basis) {
  std::vector<MonodromyOp0> out;
  for (size_t v = 0; v < basis.values.size(); ++v) out.push_back(monodromy0(basis, static_cast<int>(v)));
  return out;
}

MonodromyOp0 induced_on_H0(const FiberPermutation& perm, const Basis0& basis) {
  int r = basis.size();
  IntMatrix M(r, r);
  for (int k = 0; k < r; ++k) {
    IntVec moved(basis.cycles[k].size());
    for (size_t p = 0; p < moved.size(); ++p) moved[perm.perm[p]] += basis.cycles[k][p];
    auto c = coordinates(basis, moved);
    for (int i = 0; i < r; ++i) M(i, k) = c[i];
  }
  return {M, -1, ""};
}

MonodromyOp0 oracle_monodromy0(const Basis0& basis, int valueIndex, const TrackOptions& options) {
  std::vector<cplx> values;
  for (const auto& v : basis.values) values.push_back(v.value);
  cplx v = values.at(valueIndex);
  double gap = std::numeric_limits<double>::infinity();
  for (const auto& u : values)
    if (u != v) gap = std::min(gap, std::abs(u - v));
  gap = std::min(gap, std::abs(v - basis.fiber.base));
  double nearBase = std::numeric_limits<double>::infinity();
  for (const auto& u : values) nearBase = std::min(nearBase, std::abs(u - basis.fiber.base));
  Loop loop = simple_loop(v, basis.fiber.base, 0.25 * gap, values, basis.sigma, std::min(0.05 * gap, 0.5 * nearBase));
  TrackOptions opts = options;
  if (opts.stages.empty()) opts.stages = basis.stages;
  auto perm = track(basis.poly, loop, basis.fiber.points, opts);
  auto op = induced_on_H0(perm, basis);
  op.valueIndex = valueIndex;
  op.valueLabel = basis.values[valueIndex].label;
  return op;
}

Lattice orbit_lattice0(const std::vector<MonodromyOp0>& generators, const IntVec& seed) {
  std::vector<IntMatrix> gens;
  for (const auto& g : generators) gens.push_back(g.matrix);
  return orbitClosure(gens, seed);
}

}  // namespace lefschetz
