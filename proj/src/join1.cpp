#include "lefschetz/join1.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>

#include "lefschetz/errors.hpp"

namespace lefschetz {

namespace {

JoinKind kindOf(const Label0& l, const Label0& r) {
  bool lt = l.kind == Kind0::Tangency, rt = r.kind == Kind0::Tangency;
  if (lt && rt) return JoinKind::Exceptional;
  if (lt) return JoinKind::TangencyX;
  if (rt) return JoinKind::TangencyY;
  if (l.kind == Kind0::Plain) return JoinKind::Plain;
  return JoinKind::PullBack;
}

int kindRank(JoinKind k) {
  switch (k) {
    case JoinKind::Plain:
    case JoinKind::PullBack: return 0;
    case JoinKind::TangencyX: return 1;
    case JoinKind::TangencyY: return 2;
    case JoinKind::Exceptional: return 3;
  }
  return 4;
}

// Angular order of the distinguished paths leaving the detour point, counterclockwise from the
// direction back to the base point.
std::vector<int> pathOrder(const Basis0& B) {
  std::vector<cplx> vals;
  for (const auto& v : B.values) vals.push_back(v.value);
  cplx b = B.fiber.base;
  cplx detour = b + cplx(0, B.sigma * detourHeight(b, vals));
  std::vector<double> ang;
  for (const auto& v : vals) ang.push_back(std::arg((v - detour) / (b - detour)));
  std::vector<int> idx(vals.size());
  for (size_t k = 0; k < idx.size(); ++k) idx[k] = static_cast<int>(k);
  std::sort(idx.begin(), idx.end(), [&](int u, int v) { return ang[u] < ang[v]; });
  std::vector<int> rank(vals.size());
  for (size_t k = 0; k < idx.size(); ++k) rank[idx[k]] = static_cast<int>(k);
  return rank;
}

// Upper-triangular part (in path order) of the dim-0 Gram matrix with unit diagonal.
IntMatrix variationPart(const Basis0& B) {
  auto rank = pathOrder(B);
  IntMatrix G = B.gram();
  int r = B.size();
  IntMatrix L(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (i == j)
        L(i, j) = 1;
      else if (rank[B.valueOf[i]] < rank[B.valueOf[j]])
        L(i, j) = G(i, j);
    }
  return L;
}

class TableBuilder {
 public:
  TableBuilder(const JoinBasis& b) : basis_(b), m_(b.size(), b.size()), set_(b.size(), std::vector<bool>(b.size())) {}

  void put(int p, int q, long v, const std::string& cite) {
    if (v == 0 || p < 0 || q < 0) return;
    if (p == q)
      throw Error(ErrorKind::InconsistentTable, "nonzero diagonal entry", {{"cycle", basis_.labels[p].str()}, {"case", cite}});
    assign(p, q, v, cite);
    assign(q, p, -v, cite);
  }

  IntMatrix result() const { return m_; }

 private:
  void assign(int p, int q, long v, const std::string& cite) {
    if (set_[p][q] && m_(p, q) != v)
      throw Error(ErrorKind::InconsistentTable, "pair receives two conflicting values",
                  {{"row", basis_.labels[p].str()},
                   {"col", basis_.labels[q].str()},
                   {"values", {m_(p, q).get_si(), v}},
                   {"cases", {cites_[{p, q}], cite}}});
    m_(p, q) = v;
    set_[p][q] = true;
    cites_[{p, q}] = cite;
  }

  const JoinBasis& basis_;
  IntMatrix m_;
  std::vector<std::vector<bool>> set_;
  std::map<std::pair<int, int>, std::string> cites_;
};

}  // namespace

const char* joinKindName(JoinKind k) {
  switch (k) {
    case JoinKind::Plain: return "Plain";
    case JoinKind::PullBack: return "PullBack";
    case JoinKind::TangencyX: return "TangencyX";
    case JoinKind::TangencyY: return "TangencyY";
    case JoinKind::Exceptional: return "Exceptional";
  }
  return "?";
}

const char* readingName(FReading r) {
  switch (r) {
    case FReading::TableCorrected: return "table-corrected";
    case FReading::TableVerbatim: return "table-verbatim";
    case FReading::Computed: return "join";
  }
  return "?";
}

const char* readingName(FFReading r) {
  switch (r) {
    case FFReading::TableA: return "table-A";
    case FFReading::TableB: return "table-B";
    case FFReading::Computed: return "join";
  }
  return "?";
}

int JoinBasis::indexOf(const std::string& label) const {
  for (int k = 0; k < size(); ++k)
    if (labels[k].str() == label) return k;
  throw Error(ErrorKind::InvalidInput, "unknown cycle label: " + label);
}

std::string JoinBasis::valueLabel(int v) const {
  return leftBasis.values[values[v].first].label + "+" + rightBasis.values[values[v].second].label;
}

int JoinBasis::valueIndex(const std::string& label) const {
  for (size_t v = 0; v < values.size(); ++v)
    if (valueLabel(static_cast<int>(v)) == label) return static_cast<int>(v);
  throw Error(ErrorKind::UnknownCriticalValue, "unknown critical value label: " + label);
}

std::vector<int> JoinBasis::cyclesAt(int v) const {
  std::vector<int> out;
  for (int k = 0; k < size(); ++k)
    if (valueOf[k] == v) out.push_back(k);
  return out;
}

std::vector<int> JoinBasis::ofKind(JoinKind k) const {
  std::vector<int> out;
  for (int p = 0; p < size(); ++p)
    if (labels[p].kind == k) out.push_back(p);
  return out;
}

nlohmann::json JoinBasis::toJson() const {
  nlohmann::json cyc = nlohmann::json::array(), vals = nlohmann::json::array();
  for (int k = 0; k < size(); ++k)
    cyc.push_back({{"label", labels[k].str()}, {"kind", joinKindName(labels[k].kind)}, {"value", valueLabel(valueOf[k])}});
  for (size_t v = 0; v < values.size(); ++v) {
    cplx u = leftBasis.values[values[v].first].value + rightBasis.values[values[v].second].value;
    vals.push_back({{"label", valueLabel(static_cast<int>(v))}, {"value", {u.real(), u.imag()}}});
  }
  return {{"which", which == Which::F ? "f" : "fF"}, {"a", a}, {"n", n}, {"size", size()},
          {"cycles", cyc}, {"critical_values", vals}};
}

JoinBasis join_basis(const Scenario& s, Which which) {
  JoinBasis B;
  B.which = which;
  B.a = s.a;
  B.n = s.n;
  if (which == Which::F) {
    B.leftBasis = outer_basis0(s, SideId::Left);
    B.rightBasis = outer_basis0(s, SideId::Right);
  } else {
    B.leftBasis = basis0(s, SideId::Left);
    B.rightBasis = basis0(s, SideId::Right);
  }
  struct Entry {
    JoinLabel label;
    int rank;
  };
  std::vector<Entry> entries;
  for (int i = 0; i < B.leftBasis.size(); ++i)
    for (int j = 0; j < B.rightBasis.size(); ++j) {
      JoinLabel l;
      l.left = B.leftBasis.labels[i];
      l.right = B.rightBasis.labels[j];
      l.kind = kindOf(l.left, l.right);
      l.leftIndex = i;
      l.rightIndex = j;
      entries.push_back({l, kindRank(l.kind)});
    }
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& u, const Entry& v) { return u.rank < v.rank; });
  std::map<std::pair<int, int>, int> valueIds;
  for (auto& e : entries) {
    std::pair<int, int> key{B.leftBasis.valueOf[e.label.leftIndex], B.rightBasis.valueOf[e.label.rightIndex]};
    if (!valueIds.count(key)) {
      valueIds[key] = static_cast<int>(B.values.size());
      B.values.push_back(key);
    }
    B.labels.push_back(e.label);
    B.valueOf.push_back(valueIds[key]);
  }
  return B;
}

IntMatrix join_form(const JoinBasis& basis) {
  IntMatrix Lg = variationPart(basis.leftBasis), Lh = variationPart(basis.rightBasis);
  int r = basis.size();
  IntMatrix Q(r, r);
  for (int p = 0; p < r; ++p)
    for (int q = 0; q < r; ++q) {
      const auto &x = basis.labels[p], &y = basis.labels[q];
      Q(p, q) = Lg(y.leftIndex, x.leftIndex) * Lh(y.rightIndex, x.rightIndex) -
                Lg(x.leftIndex, y.leftIndex) * Lh(x.rightIndex, y.rightIndex);
    }
  return Q;
}

IntMatrix intersection_f(const JoinBasis& basis, FReading reading) {
  if (basis.which != Which::F) throw Error(ErrorKind::InvalidInput, "intersection_f needs a basis for f");
  if (reading == FReading::Computed) return join_form(basis);
  const int a = basis.a;
  const long E = a % 2 == 0 ? 1 : -1, O = -E;
  std::map<std::pair<int, int>, int> pos;
  for (int k = 0; k < basis.size(); ++k) pos[{basis.labels[k].left.index, basis.labels[k].right.index}] = k;
  auto at = [&](int i, int j) {
    auto it = pos.find({i, j});
    return it == pos.end() ? -1 : it->second;
  };
  TableBuilder t(basis);
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= a; ++j) {
      int p = at(i, j);
      if (j % 2 == 1) t.put(p, at(i, j + 1), E, "(i=l,k=j+1,j odd)");
      if (i % 2 == 0) t.put(p, at(i + 1, j), E, "(j=k,l=i+1,i even)");
      if (i % 2 == 1 && j % 2 == 0)
        for (int l : {i + 1, i - 1}) t.put(p, at(l, j + 1), E, "(i odd,j even,l=i+-1,k=j+1)");
      if (j % 2 == 0) t.put(p, at(i, j + 1), O, "(i=l,k=j+1,j even)");
      if (i % 2 == 1) t.put(p, at(i + 1, j), O, "(j=k,l=i+1,i odd)");
      if (i % 2 == 0 && j % 2 == 1)
        for (int l : {i - 1, i + 1})
          t.put(p, at(l, reading == FReading::TableCorrected ? j + 1 : l + 1), O,
                reading == FReading::TableCorrected ? "(i even,j odd,l=i+-1,k=j+1)" : "(i even,j odd,l=i+-1,k=l+1)");
    }
  return t.result();
}

IntMatrix intersection_fF(const JoinBasis& basis, const IntMatrix& formF, FFReading reading) {
  if (basis.which != Which::FcompF) throw Error(ErrorKind::InvalidInput, "intersection_fF needs a basis for f∘F");
  if (reading == FFReading::Computed) return join_form(basis);
  const int a = basis.a, n = basis.n;
  // Value of <delta_i^1*gamma_j^1, delta_l^1*gamma_k^1> through the f table at label positions.
  auto leftPos = [&](int label) { return n % 2 == 1 ? label : a + 1 - label; };
  auto pp = [&](int i, int j, int l, int k) -> long {
    int p = (leftPos(i) - 1) * a + (leftPos(j) - 1), q = (leftPos(l) - 1) * a + (leftPos(k) - 1);
    long v = formF(p, q).get_si();
    return n % 2 == 1 ? v : -v;
  };
  std::map<std::tuple<int, int, int, int>, int> idx;  // (left index, left branch, right index, right branch)
  for (int k = 0; k < basis.size(); ++k) {
    const auto& l = basis.labels[k];
    idx[{l.left.index, l.left.branch, l.right.index, l.right.branch}] = k;
  }
  auto at = [&](int i, int m, int j, int s) {
    auto it = idx.find({i, m, j, s});
    return it == idx.end() ? -1 : it->second;
  };
  // The duplicated condition (n even, a odd, odd index) resolves to the first or second sign.
  auto yCoupling = [&](int s) -> long {
    if (s % 2 == 0) return 0;
    if (n % 2 == 1) return -1;
    if (a % 2 == 1) return reading == FFReading::TableA ? -1 : 1;
    return 0;
  };
  auto xCoupling = [&](int m) -> long {
    if (m % 2 == 0) return 0;
    if (n % 2 == 1) return 1;
    if (a % 2 == 1) return reading == FFReading::TableA ? 1 : -1;
    return 0;
  };
  TableBuilder t(basis);
  for (int p = 0; p < basis.size(); ++p)
    for (int q = p + 1; q < basis.size(); ++q) {
      const auto &x = basis.labels[p], &y = basis.labels[q];
      if (x.kind == JoinKind::PullBack && y.kind == JoinKind::PullBack) {
        if (x.left.branch == y.left.branch && x.right.branch == y.right.branch)
          t.put(p, q, pp(x.left.index, x.right.index, y.left.index, y.right.index), "pull-back block, m=m', s=s'");
      } else if (x.kind == JoinKind::TangencyX && y.kind == JoinKind::TangencyX) {
        if (x.left.index == y.left.index && x.right.branch == y.right.branch)
          t.put(p, q, pp(a, x.right.index, a, y.right.index), "tangency X block");
      } else if (x.kind == JoinKind::TangencyY && y.kind == JoinKind::TangencyY) {
        if (x.right.index == y.right.index && x.left.branch == y.left.branch)
          t.put(p, q, pp(x.left.index, a, y.left.index, a), "tangency Y block");
      }
    }
  for (int k = a + 1; k <= a + n - 1; ++k) {
    int s = k - a;
    for (int i = 1; i <= a; ++i)
      for (int m = 1; m <= n; ++m) {
        int ty = at(i, m, k, 0);
        long v = yCoupling(s);
        t.put(at(i, m, a, s), ty, v, "<d_i^m*g_a^s, d_i^m*g_{a+s}>");
        t.put(ty, at(i, m, a, s + 1), v, "<d_i^m*g_{a+s}, d_i^m*g_a^{s+1}>");
      }
    int mm = k - a;
    for (int j = 1; j <= a; ++j)
      for (int s2 = 1; s2 <= n; ++s2) {
        int tx = at(k, 0, j, s2);
        long v = xCoupling(mm);
        t.put(at(1, mm, j, s2), tx, v, "<d_1^m*g_j^s, d_{a+m}*g_j^s>");
        t.put(tx, at(1, mm + 1, j, s2), v, "<d_{a+m}*g_j^s, d_1^{m+1}*g_j^s>");
      }
  }
  return t.result();
}

MonodromyOp1 monodromy1(const JoinBasis& basis, const IntMatrix& form, int valueIndex) {
  if (valueIndex < 0 || valueIndex >= static_cast<int>(basis.values.size()))
    throw Error(ErrorKind::UnknownCriticalValue, "critical value index out of range", {{"index", valueIndex}});
  int r = basis.size();
  IntMatrix M = IntMatrix::identity(r);
  for (int j : basis.cyclesAt(valueIndex))
    for (int k = 0; k < r; ++k) M(j, k) -= form(k, j);
  return {M, valueIndex, basis.valueLabel(valueIndex)};
}

std::vector<MonodromyOp1> all_monodromy1(const JoinBasis& basis, const IntMatrix& form) {
  std::vector<MonodromyOp1> out;
  for (size_t v = 0; v < basis.values.size(); ++v) out.push_back(monodromy1(basis, form, static_cast<int>(v)));
  return out;
}

std::vector<IntMatrix> matrices(const std::vector<MonodromyOp1>& ops) {
  std::vector<IntMatrix> out;
  for (const auto& o : ops) out.push_back(o.matrix);
  return out;
}

IntMatrix pushforward_F(const JoinBasis& fF, const JoinBasis& f) {
  IntMatrix P(f.size(), fF.size());
  std::map<std::pair<int, int>, int> target;
  for (int k = 0; k < f.size(); ++k) target[{f.labels[k].left.index, f.labels[k].right.index}] = k;
  // Pull-back labels carry C-labels; f labels carry positions of the critical points of g and h.
  // The position of label i is i for n odd and a+1-i for n even, on both sides.
  const int a = fF.a, n = fF.n;
  auto posOf = [&](int label) { return n % 2 == 1 ? label : a + 1 - label; };
  for (int k = 0; k < fF.size(); ++k) {
    const auto& l = fF.labels[k];
    if (l.kind != JoinKind::PullBack) continue;
    P(target.at({posOf(l.left.index), posOf(l.right.index)}), k) = 1;
  }
  return P;
}

nlohmann::json FormValidation::toJson() const {
  return {{"skew", skew}, {"preserved", preserved}, {"kernel_invariant", kernelInvariant},
          {"equivariant", equivariant}, {"connected", connected}, {"ok", ok()}, {"violations", violations}};
}

FormValidation validate_form(const JoinBasis& fF, const IntMatrix& Q, const JoinBasis& f, const IntMatrix& Qf) {
  FormValidation v;
  constexpr size_t kMaxViolations = 20;
  auto note = [&](const std::string& s) {
    if (v.violations.size() < kMaxViolations) v.violations.push_back(s);
  };
  v.skew = true;
  for (int i = 0; i < Q.rows(); ++i)
    for (int j = 0; j < Q.cols(); ++j)
      if (Q(i, j) != -Q(j, i)) {
        v.skew = false;
        note("not skew at " + fF.labels[i].str() + ", " + fF.labels[j].str());
      }
  auto ops = all_monodromy1(fF, Q);
  v.preserved = true;
  for (const auto& op : ops)
    if (op.matrix.transpose() * Q * op.matrix != Q) {
      v.preserved = false;
      note("form not preserved by monodromy at " + op.valueLabel);
    }
  IntMatrix P = pushforward_F(fF, f);
  Lattice K = kernel(P);
  v.kernelInvariant = true;
  for (const auto& op : ops)
    for (const auto& row : K.hermiteBasis())
      if (!isZero(P * (op.matrix * row))) {
        v.kernelInvariant = false;
        note("kernel of F_* not invariant under monodromy at " + op.valueLabel);
        break;
      }
  v.equivariant = true;
  auto fOps = all_monodromy1(f, Qf);
  for (const auto& op : ops) {
    auto [lv, rv] = fF.values[op.valueIndex];
    const auto& ll = fF.leftBasis.values[lv].label;
    const auto& rl = fF.rightBasis.values[rv].label;
    IntMatrix target = IntMatrix::identity(f.size());
    for (const auto& fo : fOps) {
      auto [flv, frv] = f.values[fo.valueIndex];
      if (f.leftBasis.values[flv].label == ll && f.rightBasis.values[frv].label == rl) target = fo.matrix;
    }
    if (P * op.matrix != target * P) {
      v.equivariant = false;
      note("F_* does not intertwine monodromy at " + op.valueLabel);
    }
  }
  std::vector<bool> seen(Q.rows(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < Q.cols(); ++j)
      if (!seen[j] && Q(i, j) != 0) seen[j] = true, stack.push_back(j);
  }
  v.connected = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  if (!v.connected) note("Dynkin diagram of the form is disconnected");
  return v;
}

JoinContext join_context(const Scenario& s) {
  JoinContext c;
  c.f = join_basis(s, Which::F);
  c.fF = join_basis(s, Which::FcompF);
  c.formF = intersection_f(c.f, FReading::TableCorrected);
  std::optional<FFReading> chosen;
  for (auto r : {FFReading::TableA, FFReading::TableB, FFReading::Computed}) {
    try {
      IntMatrix Q = intersection_fF(c.fF, c.formF, r);
      if (validate_form(c.fF, Q, c.f, c.formF).ok()) {
        c.formFF = Q;
        chosen = r;
        break;
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InconsistentTable) throw;
    }
  }
  if (!chosen) {
    c.formFF = join_form(c.fF);
    chosen = FFReading::Computed;
  }
  c.reading = *chosen;
  return c;
}

nlohmann::json KernelReport::toJson(bool withBases) const {
  nlohmann::json rd = nlohmann::json::array();
  for (const auto& r : readings) {
    nlohmann::json o = {{"reading", readingName(r.reading)}, {"built", r.built}};
    if (r.built)
      o["validation"] = r.validation.toJson();
    else
      o["error"] = r.buildError;
    rd.push_back(o);
  }
  nlohmann::json j = {{"a", a},
                      {"n", n},
                      {"basis_size", basisSize},
                      {"nullity", nullity},
                      {"expected_nullity", expectedNullity},
                      {"readings", rd},
                      {"reading_found", readingFound},
                      {"chosen_reading", readingName(chosen)},
                      {"seed", seedLabel},
                      {"kernel_rank", kernel.rank()},
                      {"orbit_rank", orbit.rank()},
                      {"orbit_in_kernel", orbitInKernel},
                      {"orbit_equals_kernel", orbitEqualsKernel},
                      {"both_kinds_orbit_rank", orbitBothKinds.rank()},
                      {"both_kinds_equal_kernel", bothKindsEqualKernel},
                      {"nullity_matches", nullity == expectedNullity},
                      {"verdict", pass() ? "PASS" : "FAIL"}};
  if (withBases) {
    j["kernel"] = kernel.toJson();
    j["orbit"] = orbit.toJson();
  }
  return j;
}

KernelReport kernel_report(const Scenario& s) {
  KernelReport rep;
  rep.a = s.a;
  rep.n = s.n;
  JoinBasis f = join_basis(s, Which::F), fF = join_basis(s, Which::FcompF);
  IntMatrix Qf = intersection_f(f, FReading::TableCorrected);
  rep.basisSize = fF.size();
  int m = s.n * s.a + s.n - 1;
  rep.expectedNullity = m * m - s.a * s.a;
  IntMatrix Q;
  for (auto r : {FFReading::TableA, FFReading::TableB, FFReading::Computed}) {
    ReadingOutcome o;
    o.reading = r;
    try {
      IntMatrix cand = intersection_fF(fF, Qf, r);
      o.built = true;
      o.validation = validate_form(fF, cand, f, Qf);
      if (o.validation.ok() && !rep.readingFound) {
        rep.readingFound = true;
        rep.chosen = r;
        Q = cand;
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InconsistentTable) throw;
      o.buildError = e.what();
    }
    rep.readings.push_back(o);
  }
  if (!rep.readingFound) Q = join_form(fF);
  IntMatrix P = pushforward_F(fF, f);
  rep.kernel = kernel(P);
  rep.nullity = rep.kernel.rank();
  auto gens = matrices(all_monodromy1(fF, Q));
  auto xs = fF.ofKind(JoinKind::TangencyX), ys = fF.ofKind(JoinKind::TangencyY);
  int seed = xs.empty() ? 0 : xs.front();
  rep.seedLabel = fF.labels[seed].str();
  rep.orbit = orbitClosure(gens, unitVector(fF.size(), seed));
  rep.orbitInKernel = rep.kernel.contains(rep.orbit);
  rep.orbitEqualsKernel = rep.orbit == rep.kernel;
  std::vector<IntVec> seeds{unitVector(fF.size(), seed)};
  if (!ys.empty()) seeds.push_back(unitVector(fF.size(), ys.front()));
  rep.orbitBothKinds = orbitClosure(gens, seeds);
  rep.bothKindsEqualKernel = rep.orbitBothKinds == rep.kernel;
  return rep;
}

nlohmann::json SimplicityReport::toJson() const {
  nlohmann::json r = nlohmann::json::array();
  for (const auto& [l, k] : orbitRanks) r.push_back({{"seed", l}, {"orbit_rank", k}});
  return {{"a", a}, {"orbits", r}, {"verdict", simple ? "simple" : "not simple"}};
}

SimplicityReport simplicity_check(const JoinBasis& f, const IntMatrix& Qf) {
  SimplicityReport rep;
  rep.a = f.a;
  auto gens = matrices(all_monodromy1(f, Qf));
  rep.simple = true;
  for (int k = 0; k < f.size(); ++k) {
    int r = orbitClosure(gens, unitVector(f.size(), k)).rank();
    rep.orbitRanks.push_back({f.labels[k].str(), r});
    if (r != f.a * f.a) rep.simple = false;
  }
  return rep;
}

SimplicityReport simplicity_check(const Scenario& s) {
  JoinBasis f = join_basis(s, Which::F);
  return simplicity_check(f, intersection_f(f, FReading::TableCorrected));
}

nlohmann::json TangencyOrbitReport::toJson() const {
  return {{"seed", seedLabel},
          {"orbit_rank", orbitRank},
          {"tangency", {{"members", tangencyMembers}, {"total", tangencyTotal}}},
          {"exceptional", {{"members", exceptionalMembers}, {"total", exceptionalTotal}}},
          {"differences", {{"members", differenceMembers}, {"total", differenceTotal}}},
          {"nabla", {{"members", nablaMembers}, {"total", nablaTotal}}},
          {"pull_back_member", pullBackMember},
          {"missing", missing},
          {"complete", complete()}};
}

TangencyOrbitReport tangency_orbit_decomposition(const Scenario& s, const std::string& seedLabel) {
  JoinContext c = join_context(s);
  const JoinBasis& B = c.fF;
  const int D = B.size();
  TangencyOrbitReport rep;
  int seed = seedLabel.empty() ? B.ofKind(JoinKind::TangencyX).front() : B.indexOf(seedLabel);
  rep.seedLabel = B.labels[seed].str();
  Lattice orbit = orbitClosure(matrices(all_monodromy1(B, c.formFF)), unitVector(D, seed));
  rep.orbitRank = orbit.rank();
  constexpr size_t kMaxMissing = 40;
  auto miss = [&](const std::string& s) {
    if (rep.missing.size() < kMaxMissing) rep.missing.push_back(s);
  };
  for (auto kind : {JoinKind::TangencyX, JoinKind::TangencyY})
    for (int k : B.ofKind(kind)) {
      ++rep.tangencyTotal;
      if (orbit.contains(unitVector(D, k)))
        ++rep.tangencyMembers;
      else
        miss(B.labels[k].str());
    }
  for (int k : B.ofKind(JoinKind::Exceptional)) {
    ++rep.exceptionalTotal;
    if (orbit.contains(unitVector(D, k)))
      ++rep.exceptionalMembers;
    else
      miss(B.labels[k].str());
  }
  std::map<std::tuple<int, int, int, int>, int> idx;
  for (int k : B.ofKind(JoinKind::PullBack)) {
    const auto& l = B.labels[k];
    idx[{l.left.index, l.left.branch, l.right.index, l.right.branch}] = k;
  }
  auto diff = [&](int p, int q) {
    IntVec v(D);
    v[p] += 1;
    v[q] -= 1;
    return v;
  };
  const int a = s.a, n = s.n;
  for (int c1 = 1; c1 <= a; ++c1)
    for (int c2 = 1; c2 <= a; ++c2) {
      int base = idx.at({c1, 1, c2, 1});
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          if (i == 1 && j == 1) continue;
          int k = idx.at({c1, i, c2, j});
          ++rep.differenceTotal;
          if (orbit.contains(diff(k, base)))
            ++rep.differenceMembers;
          else
            miss(B.labels[k].str() + " - " + B.labels[base].str());
        }
      for (int i = 1; i < n; ++i)
        for (int j = 1; j <= n; ++j) {
          int u = idx.at({c1, i + 1, c2, j}), v = idx.at({c1, i, c2, j});
          int w = idx.at({c1, j, c2, i + 1}), z = idx.at({c1, j, c2, i});
          rep.nablaTotal += 2;
          rep.nablaMembers += orbit.contains(diff(u, v)) + orbit.contains(diff(w, z));
        }
    }
  rep.pullBackMember = orbit.contains(unitVector(D, idx.at({1, 1, 1, 1})));
  return rep;
}

}  // namespace lefschetz
