#include "lefschetz/scenario.hpp"

#include <algorithm>
#include <cmath>

#include "lefschetz/errors.hpp"

namespace lefschetz {

namespace {

bool sameValue(double u, double v) {
  return std::abs(u - v) <= kCriticalValueTol * std::max({1.0, std::abs(u), std::abs(v)});
}

nlohmann::json ratsJson(const std::vector<Rat>& v) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : v) j.push_back(formatRational(r));
  return j;
}

void requireDistinct(const std::vector<Rat>& roots, const std::string& function) {
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j)
      if (roots[i] == roots[j])
        throw Error(ErrorKind::NotMorse, function + " has a repeated root",
                    {{"function", function}, {"repeated_root", formatRational(roots[i])}});
}

void requireDistinctValues(const std::vector<double>& values, const std::string& function) {
  for (size_t i = 0; i < values.size(); ++i)
    for (size_t j = i + 1; j < values.size(); ++j)
      if (sameValue(values[i], values[j]))
        throw Error(ErrorKind::NotMorse, function + " has two critical points with the same value",
                    {{"function", function}, {"colliding_values", {values[i], values[j]}}});
}

// Roots of p(x) - c for real c, required to be real.
std::vector<double> realPreimages(const UniPoly& p, double c) {
  std::vector<cplx> coeffs;
  for (const auto& v : p.coeffs()) coeffs.emplace_back(v.get_d(), 0.0);
  coeffs[0] -= c;
  auto rs = roots(coeffs);
  std::vector<double> out;
  for (const auto& r : rs.roots) {
    if (std::abs(r.imag()) > 1e-7 * std::max(1.0, std::abs(r))) return {};
    out.push_back(r.real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Side buildSide(const std::string& name, const std::string& innerName, const std::string& outerName,
               const std::vector<Rat>& innerRoots, const std::vector<Rat>& outerRoots, int a, int n) {
  Side s;
  s.name = name;
  s.innerRoots = innerRoots;
  s.outerRoots = outerRoots;
  std::sort(s.innerRoots.begin(), s.innerRoots.end());
  std::sort(s.outerRoots.begin(), s.outerRoots.end());
  s.inner = UniPoly::fromRoots(s.innerRoots);
  s.outer = UniPoly::fromRoots(s.outerRoots);
  s.composite = compose(s.outer, s.inner);

  s.innerCritical = realRoots(s.inner.derivative());
  s.outerCritical = realRoots(s.outer.derivative());
  std::vector<double> innerValues, outerValues;
  for (double q : s.innerCritical) innerValues.push_back(s.inner.eval(q));
  for (double p : s.outerCritical) outerValues.push_back(s.outer.eval(p));
  requireDistinctValues(innerValues, innerName);
  requireDistinctValues(outerValues, outerName);

  for (const auto& root : s.outerRoots) {
    auto pre = realPreimages(s.inner, root.get_d());
    if (static_cast<int>(pre.size()) != n || !isSquarefree(s.inner - UniPoly::constant(root)))
      throw Error(ErrorKind::ConditionViolation,
                  "condition 2: " + innerName + "(x) = " + formatRational(root) +
                      " does not have n distinct real roots",
                  {{"index", 2}, {"witness", {{"function", innerName}, {"value", formatRational(root)}}}});
    s.fiberPoints.insert(s.fiberPoints.end(), pre.begin(), pre.end());
  }
  std::sort(s.fiberPoints.begin(), s.fiberPoints.end());

  s.C.assign(a, 0.0);
  for (int i = 1; i <= a; ++i) {
    int label = c_label(i, a, n);
    s.labelOfOuterCritical.push_back(label);
    s.C[label - 1] = outerValues[i - 1];
    auto pts = realPreimages(s.inner, s.outerCritical[i - 1]);
    if (static_cast<int>(pts.size()) != n)
      throw Error(ErrorKind::ConditionViolation,
                  "condition 2: critical point of " + outerName + " has fewer than n real preimages",
                  {{"index", 2}, {"witness", {{"function", innerName}, {"value", s.outerCritical[i - 1]}}}});
    for (int j = 0; j < n; ++j)
      s.critical.push_back({pts[j], outerValues[i - 1], CompositeKind::PullBack, label, j + 1});
  }
  for (int k = 1; k <= n - 1; ++k) {
    double v = s.outer.eval(innerValues[k - 1]);
    s.Ctilde.push_back(v);
    s.critical.push_back({s.innerCritical[k - 1], v, CompositeKind::Tangency, a + k, 0});
  }
  std::sort(s.critical.begin(), s.critical.end(),
            [](const CompositeCritical& u, const CompositeCritical& v) { return u.x < v.x; });

  if (!isSquarefree(s.composite.derivative()))
    throw Error(ErrorKind::NotMorse, name + " has a degenerate critical point", {{"function", name}});
  std::vector<double> all(s.C);
  all.insert(all.end(), s.Ctilde.begin(), s.Ctilde.end());
  requireDistinctValues(all, name);

  for (size_t k = 0; k < s.Ctilde.size(); ++k)
    for (size_t i = 0; i < s.C.size(); ++i)
      if (!(std::abs(s.Ctilde[k]) > std::abs(s.C[i])))
        throw Error(ErrorKind::ConditionViolation,
                    "condition 4 fails for " + name,
                    {{"index", 4},
                     {"witness",
                      {{"function", name},
                       {"tangency_value", s.Ctilde[k]},
                       {"pullback_value", s.C[i]}}}});
  return s;
}

}  // namespace

int c_label(int i, int a, int n) { return (n % 2 == 1) ? i : a + 1 - i; }

Scenario build_scenario(const std::vector<Rat>& rootsR, const std::vector<Rat>& rootsS,
                        const std::vector<Rat>& rootsG, const std::vector<Rat>& rootsH) {
  int n = static_cast<int>(rootsR.size());
  int a = static_cast<int>(rootsG.size()) - 1;
  if (n < 2 || a < 1 || static_cast<int>(rootsS.size()) != n ||
      static_cast<int>(rootsH.size()) != a + 1)
    throw Error(ErrorKind::InvalidInput, "root lists need |R|=|S|=n>=2 and |g|=|h|=a+1>=2",
                {{"R", rootsR.size()}, {"S", rootsS.size()}, {"g", rootsG.size()}, {"h", rootsH.size()}});
  requireDistinct(rootsR, "R");
  requireDistinct(rootsS, "S");
  requireDistinct(rootsG, "g");
  requireDistinct(rootsH, "h");
  auto condition1 = [](const std::vector<Rat>& roots, const std::string& fn, bool strict) {
    for (const auto& r : roots)
      if (strict ? r <= 0 : r < 0)
        throw Error(ErrorKind::ConditionViolation,
                    "condition 1: root " + formatRational(r) + " of " + fn +
                        (strict ? " is not positive" : " is negative"),
                    {{"index", 1}, {"witness", {{"function", fn}, {"root", formatRational(r)}}}});
  };
  condition1(rootsR, "R", false);
  condition1(rootsS, "S", false);
  condition1(rootsG, "g", true);
  condition1(rootsH, "h", true);

  Scenario s;
  s.a = a;
  s.n = n;
  s.left = buildSide("gR", "R", "g", rootsR, rootsG, a, n);
  s.right = buildSide("hS", "S", "h", rootsS, rootsH, a, n);
  s.R = s.left.inner;
  s.g = s.left.outer;
  s.S = s.right.inner;
  s.h = s.right.outer;

  std::vector<double> lv(s.left.C), rv(s.right.C);
  lv.insert(lv.end(), s.left.Ctilde.begin(), s.left.Ctilde.end());
  rv.insert(rv.end(), s.right.Ctilde.begin(), s.right.Ctilde.end());
  for (double u : lv)
    for (double v : rv)
      if (sameValue(u, v))
        throw Error(ErrorKind::ConditionViolation,
                    "condition 3: g∘R and h∘S share a critical value",
                    {{"index", 3}, {"witness", {{"value", u}}}});
  return s;
}

Scenario default_scenario(int a, int n) {
  if (a < 1 || n < 2) throw Error(ErrorKind::InvalidInput, "default scenario needs a >= 1, n >= 2");
  std::vector<Rat> t;
  for (int i = 0; i < n; ++i) {
    Rat ti = Rat(2 * i) + Rat(i * i, 10);
    ti.canonicalize();
    t.push_back(ti);
  }
  UniPoly R = UniPoly::fromRoots(t);
  double M = 0;
  for (double q : realRoots(R.derivative())) {
    double v = R.eval(q);
    if (v > 0 && (M == 0 || v < M)) M = v;
  }
  double lo = M > 0 ? 0.4 * M : 2.0, hi = M > 0 ? 0.6 * M : 4.0;
  std::vector<Rat> s, sh, th;
  for (int i = 0; i <= a; ++i) {
    double frac = (i + 0.15 * i * i) / (a + 0.15 * a * a);
    Rat si = roundRational(lo + (hi - lo) * frac, 1000);
    s.push_back(si);
    Rat hi2 = si * Rat(107, 100) + Rat(1, 20);
    hi2.canonicalize();
    sh.push_back(hi2);
  }
  for (const auto& ti : t) {
    Rat v = ti + Rat(37, 100);
    v.canonicalize();
    th.push_back(v);
  }
  return build_scenario(t, th, s, sh);
}

Scenario scenario_from_json(const nlohmann::json& j) {
  static const std::vector<std::string> allowed{"n", "a", "R_roots", "S_roots", "g_roots", "h_roots"};
  if (!j.is_object()) throw Error(ErrorKind::InvalidInput, "scenario JSON must be an object");
  for (const auto& [key, value] : j.items())
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw Error(ErrorKind::InvalidInput, "unknown scenario key: " + key);
  auto rats = [&](const char* key) {
    if (!j.contains(key)) throw Error(ErrorKind::InvalidInput, std::string("missing key ") + key);
    std::vector<Rat> out;
    for (const auto& v : j.at(key))
      out.push_back(v.is_string() ? parseRational(v.get<std::string>()) : parseRational(v.dump()));
    return out;
  };
  auto R = rats("R_roots"), S = rats("S_roots"), g = rats("g_roots"), h = rats("h_roots");
  if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(R.size()))
    throw Error(ErrorKind::InvalidInput, "n does not match the number of R roots");
  if (j.contains("a") && j.at("a").get<int>() + 1 != static_cast<int>(g.size()))
    throw Error(ErrorKind::InvalidInput, "a does not match the number of g roots");
  return build_scenario(R, S, g, h);
}

nlohmann::json Scenario::toJson() const {
  return {{"n", n},
          {"a", a},
          {"R_roots", ratsJson(left.innerRoots)},
          {"S_roots", ratsJson(right.innerRoots)},
          {"g_roots", ratsJson(left.outerRoots)},
          {"h_roots", ratsJson(right.outerRoots)}};
}

CriticalData critical_data(const Scenario& s) {
  CriticalData cd;
  auto fill = [](const Side& side, CriticalData::PerSide& out) {
    out.C = side.C;
    out.Ctilde = side.Ctilde;
    for (const auto& cp : side.critical) {
      auto it = std::find_if(out.perValue.begin(), out.perValue.end(),
                             [&](const auto& e) { return sameValue(e.first, cp.value); });
      if (it == out.perValue.end())
        out.perValue.push_back({cp.value, {cp.x}});
      else
        it->second.push_back(cp.x);
    }
  };
  fill(s.left, cd.left);
  fill(s.right, cd.right);
  return cd;
}

nlohmann::json CriticalData::toJson() const {
  auto side = [](const PerSide& p) {
    nlohmann::json per = nlohmann::json::array();
    for (const auto& [v, pts] : p.perValue) per.push_back({{"value", v}, {"points", pts}});
    return nlohmann::json{{"C", p.C}, {"Ctilde", p.Ctilde}, {"per_value", per}};
  };
  return {{"gR", side(left)}, {"hS", side(right)}};
}

}  // namespace lefschetz
