#include "lefschetz/petrov.hpp"

#include <algorithm>

#include "lefschetz/errors.hpp"

namespace lefschetz {

namespace {

using RatMatrix = std::vector<std::vector<Rat>>;

// Reduced row echelon form of [A | b]; returns pivot columns.
std::vector<int> rref(RatMatrix& m, int cols) {
  std::vector<int> pivots;
  int row = 0;
  for (int c = 0; c < cols && row < static_cast<int>(m.size()); ++c) {
    int p = row;
    while (p < static_cast<int>(m.size()) && m[p][c] == 0) ++p;
    if (p == static_cast<int>(m.size())) continue;
    std::swap(m[p], m[row]);
    Rat inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (int i = 0; i < static_cast<int>(m.size()); ++i) {
      if (i == row || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (size_t j = c; j < m[i].size(); ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

// Some solution of A x = b (free variables zero), or nothing.
std::optional<std::vector<Rat>> solve(const RatMatrix& A, const std::vector<Rat>& b, int cols) {
  RatMatrix m = A;
  for (size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
  auto pivots = rref(m, cols);
  for (size_t i = pivots.size(); i < m.size(); ++i)
    if (m[i][cols] != 0) return std::nullopt;
  std::vector<Rat> x(cols);
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m[i][cols];
  return x;
}

int rationalRank(RatMatrix m) {
  if (m.empty()) return 0;
  return static_cast<int>(rref(m, static_cast<int>(m[0].size())).size());
}

// Coefficient of dx^dy in dφ ^ dl.
BiPoly bracket(const BiPoly& phi, const BiPoly& l) { return phi.dx() * l.dy() - phi.dy() * l.dx(); }

int requireDirectSum(const BiPoly& l) {
  for (const auto& [m, c] : l.terms())
    if (m.first > 0 && m.second > 0)
      throw Error(ErrorKind::NotDirectSum, "l has a mixed monomial", {{"monomial", {m.first, m.second}}});
  int dx = l.degreeX(), dy = l.degreeY();
  if (dx < 1 || dx != dy)
    throw Error(ErrorKind::NotTransversal, "l = g(x) + h(y) needs deg g = deg h >= 1",
                {{"deg_g", dx}, {"deg_h", dy}});
  return dx;
}

UniPoly addMonomial(const UniPoly& p, int e, const Rat& c) { return p + UniPoly::monomial(e, c); }

}  // namespace

int PetrovBasis::indexOf(int i, int j) const {
  for (int k = 0; k < size(); ++k)
    if (labels[k] == Monomial{i, j}) return k;
  return -1;
}

PetrovBasis petrov_basis(int d) {
  PetrovBasis B;
  B.d = d;
  for (int i = 0; i <= d - 2; ++i)
    for (int j = 0; j <= d - 2; ++j) B.labels.push_back({i, j});
  return B;
}

bool transversal_check(const BiPoly& l) {
  int d = l.totalDegree();
  if (d < 1) return false;
  BiPoly ld = l.homogeneousPart(d);
  // Dehomogenize at y = 1; a repeated factor y shows up as a degree drop of two or more.
  std::vector<Rat> c(d + 1);
  for (const auto& [m, v] : ld.terms()) c[m.first] = v;
  UniPoly p(c);
  if (p.degree() < d - 1) return false;
  return p.degree() < 1 || isSquarefree(p);
}

UniPoly PetrovDecomposition::coefficient(int i, int j) const {
  auto it = h.find({i, j});
  return it == h.end() ? UniPoly() : it->second;
}

BiForm1 PetrovDecomposition::reconstruct(const BiPoly& l) const {
  BiForm1 out = multiply(zeta1, exteriorD(l)) + exteriorD(zeta2);
  for (const auto& [ij, p] : h) {
    BiPoly hl;
    BiPoly pw = BiPoly::constant(1);
    for (int e = 0; e <= p.degree(); ++e) {
      if (p.coeff(e) != 0) hl += pw * p.coeff(e);
      pw = pw * l;
    }
    out = out + multiply(hl, eta(ij.first, ij.second));
  }
  return out;
}

bool PetrovDecomposition::degreeBoundsHold(int weightedDegree) const {
  for (const auto& [ij, p] : h) {
    if (p.isZero()) continue;
    // deg h <= w/d - (i+1)/d - (j+1)/d  <=>  d*deg h + i + j + 2 <= w
    if (d * p.degree() + ij.first + ij.second + 2 > weightedDegree) return false;
  }
  return true;
}

bool PetrovDecomposition::constantCoefficients() const {
  return std::all_of(h.begin(), h.end(), [](const auto& kv) { return kv.second.degree() <= 0; });
}

nlohmann::json PetrovDecomposition::toJson() const {
  nlohmann::json hs = nlohmann::json::array();
  for (const auto& [ij, p] : h) hs.push_back({{"i", ij.first}, {"j", ij.second}, {"h", p.toJson("t")}});
  return {{"d", d}, {"h", hs}, {"zeta1", zeta1.toJson()}, {"zeta2", zeta2.toJson()}};
}

PetrovDecomposition decompose(const BiForm1& omega, const BiPoly& l) {
  const int d = requireDirectSum(l);
  const BiPoly ld = l.homogeneousPart(d);
  const PetrovBasis basis = petrov_basis(d);
  PetrovDecomposition out;
  out.d = d;
  std::vector<BiPoly> lPow{BiPoly::constant(1)}, ldPow{BiPoly::constant(1)};
  auto power = [](std::vector<BiPoly>& cache, const BiPoly& base, int e) -> const BiPoly& {
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * base);
    return cache[e];
  };

  BiPoly F = d1(omega);
  while (!F.isZero()) {
    const int k = F.totalDegree();
    const BiPoly Fk = F.homogeneousPart(k);
    struct Column {
      BiPoly poly;
      int i, j, e;  // e < 0 marks a bracket column x^i y^j
    };
    std::vector<Column> cols;
    for (const auto& [i, j] : basis.labels) {
      int rest = k - i - j;
      if (rest < 0 || rest % d != 0) continue;
      int e = rest / d;
      cols.push_back({power(ldPow, ld, e) * BiPoly::monomial(i, j), i, j, e});
    }
    for (int p = 0; p <= k - d + 2; ++p) {
      int q = k - d + 2 - p;
      cols.push_back({bracket(BiPoly::monomial(p, q), ld), p, q, -1});
    }
    RatMatrix A(k + 1, std::vector<Rat>(cols.size()));
    std::vector<Rat> b(k + 1);
    for (int r = 0; r <= k; ++r) {
      b[r] = Fk.coeff(r, k - r);
      for (size_t c = 0; c < cols.size(); ++c) A[r][c] = cols[c].poly.coeff(r, k - r);
    }
    auto x = solve(A, b, static_cast<int>(cols.size()));
    if (!x) throw Error(ErrorKind::Internal, "graded reduction has no solution", {{"degree", k}});
    for (size_t c = 0; c < cols.size(); ++c) {
      const Rat& v = (*x)[c];
      if (v == 0) continue;
      const auto& col = cols[c];
      if (col.e >= 0) {
        Rat coeff = v / (d * col.e + col.i + col.j + 2);
        out.h[{col.i, col.j}] = addMonomial(out.h[{col.i, col.j}], col.e, coeff);
        F -= d1(multiply(power(lPow, l, col.e), eta(col.i, col.j))) * coeff;
      } else {
        BiPoly phi = BiPoly::monomial(col.i, col.j, v);
        out.zeta1 += phi;
        F -= bracket(phi, l);
      }
    }
    if (F.totalDegree() >= k) throw Error(ErrorKind::Internal, "graded reduction did not lower the degree", {{"degree", k}});
  }
  for (auto it = out.h.begin(); it != out.h.end();) it = it->second.isZero() ? out.h.erase(it) : std::next(it);
  PetrovDecomposition partial = out;
  partial.zeta2 = BiPoly();
  out.zeta2 = potential(omega - partial.reconstruct(l));
  return out;
}

nlohmann::json RelativeExactness::toJson() const {
  nlohmann::json j = {{"exact", exact}};
  if (exact) {
    j["K"] = K.toJson();
    j["A"] = A.toJson();
  }
  return j;
}

RelativeExactness relatively_exact(const BiForm1& omega, const BiPoly& l) {
  auto dec = decompose(omega, l);
  RelativeExactness r;
  r.exact = dec.h.empty();
  if (r.exact) {
    r.K = dec.zeta2;
    r.A = dec.zeta1;
  }
  return r;
}

BiPoly f_of(const Scenario& s) { return BiPoly::fromX(s.g) + BiPoly::fromY(s.h); }
BiPoly fF_of(const Scenario& s) { return BiPoly::fromX(s.left.composite) + BiPoly::fromY(s.right.composite); }
BiPoly R_of(const Scenario& s) { return BiPoly::fromX(s.R); }
BiPoly S_of(const Scenario& s) { return BiPoly::fromY(s.S); }

nlohmann::json ExtensionReport::toJson() const {
  nlohmann::json rows = nlohmann::json::array();
  for (size_t r = 0; r < sources.size(); ++r) {
    nlohmann::json coeffs = nlohmann::json::object();
    for (size_t c = 0; c < targets.size(); ++c)
      if (matrix[r][c] != 0)
        coeffs["eta" + std::to_string(targets[c].first) + std::to_string(targets[c].second)] = formatRational(matrix[r][c]);
    rows.push_back({{"source", {sources[r].first, sources[r].second}}, {"coefficients", coeffs}});
  }
  return {{"a", a}, {"n", n}, {"D", D}, {"rows", rows}, {"rank", rank}, {"constant", constant},
          {"verdict", pass() ? "basis extends" : "fails"}};
}

ExtensionReport pullback_basis_extension(const Scenario& s) {
  ExtensionReport rep;
  rep.a = s.a;
  rep.n = s.n;
  rep.D = s.n * (s.a + 1);
  BiPoly l = fF_of(s), R = R_of(s), S = S_of(s);
  PetrovBasis target = petrov_basis(rep.D);
  rep.targets = target.labels;
  rep.constant = true;
  for (int i = 0; i < s.a; ++i)
    for (int j = 0; j < s.a; ++j) {
      auto dec = decompose(pullback(eta(i, j), R, S), l);
      if (!dec.constantCoefficients()) {
        for (const auto& [ij, p] : dec.h)
          if (p.degree() > 0)
            throw Error(ErrorKind::NonConstantCoefficient, "pulled-back basis form has a non-constant coefficient",
                        {{"source", {i, j}}, {"target", {ij.first, ij.second}}, {"h", p.toString("t")}});
      }
      std::vector<Rat> row(target.size());
      for (const auto& [ij, p] : dec.h) row[target.indexOf(ij.first, ij.second)] = p.coeff(0);
      rep.sources.push_back({i, j});
      rep.matrix.push_back(row);
    }
  rep.rank = rationalRank(rep.matrix);
  return rep;
}

BiForm1 tangent_vector_W(const Scenario& s, const BiPoly& P, const BiPoly& Q, const BiPoly& R1, const BiPoly& S1,
                         const BiForm1& alpha1) {
  if (R1.totalDegree() > s.n || S1.totalDegree() > s.n)
    throw Error(ErrorKind::DegreeViolation, "deformation of F exceeds degree n",
                {{"deg_R1", R1.totalDegree()}, {"deg_S1", S1.totalDegree()}, {"n", s.n}});
  if (alpha1.coefficientDegree() > s.a)
    throw Error(ErrorKind::DegreeViolation, "alpha1 exceeds degree a", {{"deg", alpha1.coefficientDegree()}, {"a", s.a}});
  BiPoly R = R_of(s), S = S_of(s);
  BiForm1 dR = exteriorD(R), dS = exteriorD(S);
  auto at = [&](const BiPoly& p) { return p.substitute(R, S); };
  BiForm1 W = multiply(at(P), exteriorD(S1)) - multiply(at(Q), exteriorD(R1));
  W = W + multiply(R1, multiply(at(P.dx()), dS) - multiply(at(Q.dx()), dR));
  W = W + multiply(S1, multiply(at(P.dy()), dS) - multiply(at(Q.dy()), dR));
  return W + pullback(alpha1, R, S);
}

BiForm1 hamiltonian_W(const Scenario& s, const BiPoly& R1, const BiPoly& S1, const BiForm1& alpha1) {
  BiPoly R = R_of(s), S = S_of(s), f = f_of(s);
  BiPoly K = R1 * f.dx().substitute(R, S) + S1 * f.dy().substitute(R, S);
  return exteriorD(K) + pullback(alpha1, R, S);
}

nlohmann::json TangentConeResult::toJson() const {
  nlohmann::json j = {{"member", member}};
  if (member) {
    j["alpha"] = alpha.toJson();
    j["K"] = K.toJson();
  } else {
    j["obstruction"] = obstruction;
  }
  return j;
}

TangentConeResult tangent_cone_membership(const BiForm1& omega, const Scenario& s) {
  TangentConeResult res;
  BiPoly l = fF_of(s), R = R_of(s), S = S_of(s);
  auto dec = decompose(omega, l);
  if (!dec.constantCoefficients()) {
    res.obstruction = "non-constant Petrov coefficient";
    return res;
  }
  const int D = s.n * (s.a + 1);
  PetrovBasis target = petrov_basis(D);
  std::vector<Monomial> sources;
  for (int i = 0; i < s.a; ++i)
    for (int j = 0; i + j < s.a; ++j) sources.push_back({i, j});
  RatMatrix A(target.size(), std::vector<Rat>(sources.size()));
  for (size_t c = 0; c < sources.size(); ++c) {
    auto dc = decompose(pullback(eta(sources[c].first, sources[c].second), R, S), l);
    for (const auto& [ij, p] : dc.h) A[target.indexOf(ij.first, ij.second)][c] = p.coeff(0);
  }
  std::vector<Rat> b(target.size());
  for (const auto& [ij, p] : dec.h) b[target.indexOf(ij.first, ij.second)] = p.coeff(0);
  auto alpha = solve(A, b, static_cast<int>(sources.size()));
  if (!alpha) {
    res.obstruction = "Petrov coefficients outside the span of the pulled-back basis forms";
    return res;
  }
  for (size_t c = 0; c < sources.size(); ++c)
    if ((*alpha)[c] != 0) res.alpha = res.alpha + eta(sources[c].first, sources[c].second) * (*alpha)[c];
  BiForm1 rho = omega - pullback(res.alpha, R, S);
  if (d1(rho).isZero()) {
    res.K = potential(rho);
    res.member = true;
    return res;
  }
  auto rel = relatively_exact(rho, l);
  if (!rel.exact) {
    res.obstruction = "remainder is not relatively exact";
    return res;
  }
  // ρ = dK + A d(f∘F) with A = ζ(R, S) gives α + ζ df.
  const int maxP = rel.A.degreeX() / s.n, maxQ = rel.A.degreeY() / s.n;
  std::vector<Monomial> mons;
  std::vector<BiPoly> cols;
  for (int p = 0; p <= maxP; ++p)
    for (int q = 0; q <= maxQ; ++q) {
      mons.push_back({p, q});
      cols.push_back(R.pow(p) * S.pow(q));
    }
  std::vector<Monomial> rows;
  for (const auto& c : cols)
    for (const auto& [m, v] : c.terms()) rows.push_back(m);
  for (const auto& [m, v] : rel.A.terms()) rows.push_back(m);
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  RatMatrix M(rows.size(), std::vector<Rat>(cols.size()));
  std::vector<Rat> rhs(rows.size());
  for (size_t r = 0; r < rows.size(); ++r) {
    rhs[r] = rel.A.coeff(rows[r].first, rows[r].second);
    for (size_t c = 0; c < cols.size(); ++c) M[r][c] = cols[c].coeff(rows[r].first, rows[r].second);
  }
  auto z = solve(M, rhs, static_cast<int>(cols.size()));
  if (!z) {
    res.obstruction = "relatively exact remainder is not a pull-back";
    return res;
  }
  BiPoly zeta;
  for (size_t c = 0; c < mons.size(); ++c) zeta.add(mons[c].first, mons[c].second, (*z)[c]);
  res.alpha = res.alpha + multiply(zeta, exteriorD(f_of(s)));
  res.K = rel.K;
  res.member = true;
  return res;
}

}  // namespace lefschetz
