#include "lefschetz/polycore.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include <Eigen/Dense>

#include "lefschetz/errors.hpp"

namespace lefschetz {

Rat parseRational(const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  if (text.empty()) throw Error(ErrorKind::InvalidInput, "empty rational literal");
  try {
    auto dot = text.find('.');
    if (dot == std::string::npos) {
      Rat r(text, 10);
      r.canonicalize();
      if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
      return r;
    }
    std::string intPart = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    bool negative = !intPart.empty() && intPart[0] == '-';
    if (!intPart.empty() && (intPart[0] == '-' || intPart[0] == '+')) intPart = intPart.substr(1);
    if (intPart.empty()) intPart = "0";
    for (char c : intPart + frac)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("digit");
    Int num(intPart + frac, 10);
    Int den = 1;
    for (size_t k = 0; k < frac.size(); ++k) den *= 10;
    Rat r(negative ? Int(-num) : num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::InvalidInput, "malformed rational literal: " + raw);
  }
}

std::string formatRational(const Rat& value) {
  Rat r(value);
  r.canonicalize();
  return r.get_str(10);
}

double toDouble(const Rat& value) { return value.get_d(); }

Rat roundRational(double value, long denominator) {
  Rat r(Int(static_cast<long>(std::llround(value * static_cast<double>(denominator)))),
        Int(denominator));
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

UniPoly::UniPoly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { normalize(); }

void UniPoly::normalize() {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::constant(const Rat& c) { return UniPoly(std::vector<Rat>{c}); }

UniPoly UniPoly::monomial(int degree, const Rat& c) {
  std::vector<Rat> v(degree + 1, Rat(0));
  v[degree] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::fromRoots(const std::vector<Rat>& roots) {
  UniPoly p = constant(1);
  for (const auto& r : roots) p = p * UniPoly{Rat(-r), Rat(1)};
  return p;
}

Rat UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

Rat UniPoly::leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

Rat UniPoly::operator()(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

cplx UniPoly::eval(cplx x) const {
  cplx acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

double UniPoly::eval(double x) const {
  double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rat> v(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * static_cast<long>(k);
  return UniPoly(std::move(v));
}

std::vector<double> UniPoly::coeffsDouble() const {
  std::vector<double> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(c.get_d());
  return v;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rat> v(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
  for (size_t k = 0; k < coeffs_.size(); ++k) v[k] += coeffs_[k];
  for (size_t k = 0; k < o.coeffs_.size(); ++k) v[k] += o.coeffs_[k];
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
  std::vector<Rat> v(coeffs_);
  for (auto& c : v) c = -c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (isZero() || o.isZero()) return {};
  std::vector<Rat> v(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const Rat& c) const {
  std::vector<Rat> v(coeffs_);
  for (auto& x : v) x *= c;
  return UniPoly(std::move(v));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.isZero()) throw Error(ErrorKind::InvalidInput, "division by the zero polynomial");
  std::vector<Rat> r(coeffs_);
  int dd = d.degree();
  if (degree() < dd) return {UniPoly(), *this};
  std::vector<Rat> q(degree() - dd + 1, Rat(0));
  for (int k = degree(); k >= dd; --k) {
    Rat c = r[k] / d.leading();
    q[k - dd] = c;
    if (c == 0) continue;
    for (int m = 0; m <= dd; ++m) r[k - dd + m] -= c * d.coeffs_[m];
  }
  r.resize(dd);
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly UniPoly::monic() const {
  if (isZero()) return {};
  Rat inv = 1 / leading();
  return *this * inv;
}

std::string UniPoly::toString(const std::string& var) const {
  if (isZero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rat& c = coeffs_[k];
    if (c == 0) continue;
    Rat a = abs(c);
    out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (a != 1 || k == 0) out << formatRational(a) << (k > 0 ? "*" : "");
    if (k >= 1) out << var;
    if (k >= 2) out << "^" << k;
    first = false;
  }
  return out.str();
}

nlohmann::json UniPoly::toJson(const std::string& var) const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : coeffs_) cs.push_back(formatRational(c));
  if (cs.empty()) cs.push_back("0");
  return {{"var", var}, {"coeffs", cs}};
}

UniPoly UniPoly::fromJson(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("coeffs"))
    throw Error(ErrorKind::InvalidInput, "polynomial JSON needs a coeffs array");
  std::vector<Rat> v;
  for (const auto& c : j.at("coeffs"))
    v.push_back(c.is_string() ? parseRational(c.get<std::string>())
                              : parseRational(c.dump()));
  return UniPoly(std::move(v));
}

UniPoly compose(const UniPoly& outer, const UniPoly& inner) {
  UniPoly acc;
  const auto& c = outer.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * inner + UniPoly::constant(*it);
  return acc;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly u = a, v = b;
  while (!v.isZero()) {
    auto r = u.divmod(v).second;
    u = v;
    v = r;
  }
  return u.monic();
}

bool isSquarefree(const UniPoly& p) {
  if (p.degree() <= 1) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

// ---------------------------------------------------------------- BiPoly

BiPoly BiPoly::constant(const Rat& c) { return monomial(0, 0, c); }

BiPoly BiPoly::monomial(int i, int j, const Rat& c) {
  BiPoly p;
  p.add(i, j, c);
  return p;
}

BiPoly BiPoly::fromX(const UniPoly& p) {
  BiPoly b;
  for (int k = 0; k <= p.degree(); ++k) b.add(k, 0, p.coeff(k));
  return b;
}

BiPoly BiPoly::fromY(const UniPoly& p) {
  BiPoly b;
  for (int k = 0; k <= p.degree(); ++k) b.add(0, k, p.coeff(k));
  return b;
}

Rat BiPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rat(0) : it->second;
}

void BiPoly::add(int i, int j, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int BiPoly::totalDegree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.first + m.second);
  return d;
}

int BiPoly::degreeX() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.first);
  return d;
}

int BiPoly::degreeY() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.second);
  return d;
}

BiPoly BiPoly::homogeneousPart(int k) const {
  BiPoly p;
  for (const auto& [m, c] : terms_)
    if (m.first + m.second == k) p.terms_.emplace(m, c);
  return p;
}

bool BiPoly::isConstant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

BiPoly BiPoly::dx() const {
  BiPoly p;
  for (const auto& [m, c] : terms_)
    if (m.first > 0) p.add(m.first - 1, m.second, c * m.first);
  return p;
}

BiPoly BiPoly::dy() const {
  BiPoly p;
  for (const auto& [m, c] : terms_)
    if (m.second > 0) p.add(m.first, m.second - 1, c * m.second);
  return p;
}

Rat BiPoly::operator()(const Rat& x, const Rat& y) const {
  Rat acc = 0;
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (int k = 0; k < m.first; ++k) t *= x;
    for (int k = 0; k < m.second; ++k) t *= y;
    acc += t;
  }
  return acc;
}

BiPoly BiPoly::substitute(const BiPoly& X, const BiPoly& Y) const {
  std::vector<BiPoly> xp{constant(1)}, yp{constant(1)};
  BiPoly acc;
  for (const auto& [m, c] : terms_) {
    while (static_cast<int>(xp.size()) <= m.first) xp.push_back(xp.back() * X);
    while (static_cast<int>(yp.size()) <= m.second) yp.push_back(yp.back() * Y);
    acc += xp[m.first] * yp[m.second] * c;
  }
  return acc;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  BiPoly p = *this;
  p += o;
  return p;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
  BiPoly p = *this;
  p -= o;
  return p;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [m, c] : o.terms_) add(m.first, m.second, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [m, c] : o.terms_) add(m.first, m.second, -c);
  return *this;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  BiPoly p;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) p.add(m1.first + m2.first, m1.second + m2.second, c1 * c2);
  return p;
}

BiPoly BiPoly::operator*(const Rat& c) const {
  if (c == 0) return {};
  BiPoly p = *this;
  for (auto& [m, v] : p.terms_) v *= c;
  return p;
}

BiPoly BiPoly::operator-() const { return *this * Rat(-1); }

BiPoly BiPoly::pow(int k) const {
  BiPoly acc = constant(1), base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

std::string BiPoly::toString() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rat a = abs(c);
    out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    bool unit = (m.first == 0 && m.second == 0);
    if (a != 1 || unit) out << formatRational(a) << (unit ? "" : "*");
    if (m.first >= 1) out << "x" << (m.first > 1 ? "^" + std::to_string(m.first) : "");
    if (m.first >= 1 && m.second >= 1) out << "*";
    if (m.second >= 1) out << "y" << (m.second > 1 ? "^" + std::to_string(m.second) : "");
    first = false;
  }
  return out.str();
}

nlohmann::json BiPoly::toJson() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, c] : terms_) arr.push_back({m.first, m.second, formatRational(c)});
  return {{"terms", arr}};
}

BiPoly BiPoly::fromJson(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("terms"))
    throw Error(ErrorKind::InvalidInput, "bivariate polynomial JSON needs a terms array");
  BiPoly p;
  for (const auto& t : j.at("terms")) {
    if (!t.is_array() || t.size() != 3)
      throw Error(ErrorKind::InvalidInput, "term must be [i, j, coefficient]");
    const auto& c = t[2];
    p.add(t[0].get<int>(), t[1].get<int>(),
          c.is_string() ? parseRational(c.get<std::string>()) : parseRational(c.dump()));
  }
  return p;
}

// ---------------------------------------------------------------- forms

int BiForm1::coefficientDegree() const { return std::max(P.totalDegree(), Q.totalDegree()); }

nlohmann::json BiForm1::toJson() const { return {{"P", P.toJson()}, {"Q", Q.toJson()}}; }

BiForm1 BiForm1::fromJson(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("P") || !j.contains("Q"))
    throw Error(ErrorKind::InvalidInput, "1-form JSON needs P and Q");
  return {BiPoly::fromJson(j.at("P")), BiPoly::fromJson(j.at("Q"))};
}

BiForm1 multiply(const BiPoly& f, const BiForm1& w) { return {f * w.P, f * w.Q}; }

BiForm1 exteriorD(const BiPoly& f) { return {f.dx(), f.dy()}; }

BiPoly d1(const BiForm1& form) { return form.Q.dx() - form.P.dy(); }

BiPoly potential(const BiForm1& form) {
  if (!d1(form).isZero()) throw Error(ErrorKind::Internal, "potential of a non-closed form");
  BiPoly K;
  for (const auto& [m, c] : form.P.terms()) K.add(m.first + 1, m.second, c / (m.first + 1));
  BiPoly rest = form.Q - K.dy();
  for (const auto& [m, c] : rest.terms()) {
    if (m.first != 0) throw Error(ErrorKind::Internal, "potential: residual depends on x");
    K.add(0, m.second + 1, c / (m.second + 1));
  }
  return K;
}

BiForm1 eta(int i, int j) {
  return {BiPoly::monomial(i, j + 1, -1), BiPoly::monomial(i + 1, j, 1)};
}

BiForm1 pullback(const BiForm1& form, const BiPoly& X, const BiPoly& Y) {
  BiPoly P = form.P.substitute(X, Y), Q = form.Q.substitute(X, Y);
  return {P * X.dx() + Q * Y.dx(), P * X.dy() + Q * Y.dy()};
}

// ---------------------------------------------------------------- roots

namespace {

double evalScale(const std::vector<cplx>& c, double r) {
  double s = 0, pw = 1;
  for (const auto& a : c) {
    s += std::abs(a) * pw;
    pw *= r;
  }
  return s;
}

cplx horner(const std::vector<cplx>& c, cplx x) {
  cplx acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool rootLess(const cplx& a, const cplx& b, double tol) {
  double scale = std::max({1.0, std::abs(a), std::abs(b)});
  if (std::abs(a.real() - b.real()) > tol * scale) return a.real() < b.real();
  return a.imag() < b.imag();
}

double& toleranceSlot() {
  static double tol = [] {
    if (const char* env = std::getenv("LEFSCHETZ_TOL")) {
      char* end = nullptr;
      double v = std::strtod(env, &end);
      if (end != env && v > 0 && std::isfinite(v)) return v;
    }
    return kDefaultRootTol;
  }();
  return tol;
}

}  // namespace

double default_tolerance() { return toleranceSlot(); }

void set_default_tolerance(double tol) {
  if (!(tol > 0) || !std::isfinite(tol)) throw Error(ErrorKind::InvalidInput, "tolerance must be positive");
  toleranceSlot() = tol;
}

ComplexRootSet roots(const std::vector<cplx>& coeffsIn, double tol) {
  if (tol <= 0) tol = default_tolerance();
  std::vector<cplx> c(coeffsIn);
  while (!c.empty() && c.back() == cplx(0)) c.pop_back();
  int n = static_cast<int>(c.size()) - 1;
  if (n < 1) throw Error(ErrorKind::InvalidInput, "roots of a constant polynomial");
  std::vector<cplx> dc(n);
  for (int k = 1; k <= n; ++k) dc[k - 1] = c[k] * static_cast<double>(k);

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 1; k < n; ++k) companion(k, k - 1) = 1.0;
  for (int k = 0; k < n; ++k) companion(k, n - 1) = -c[k] / c[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  std::vector<cplx> z(n);
  for (int k = 0; k < n; ++k) z[k] = solver.eigenvalues()(k);

  bool converged = false;
  for (int iter = 0; iter < kAberthIterationCap && !converged; ++iter) {
    converged = true;
    for (int k = 0; k < n; ++k) {
      cplx pv = horner(c, z[k]);
      double scale = evalScale(c, std::abs(z[k]));
      if (std::abs(pv) <= 1e-15 * scale) continue;
      cplx ratio = pv / horner(dc, z[k]);
      cplx sum = 0;
      for (int j = 0; j < n; ++j)
        if (j != k) sum += 1.0 / (z[k] - z[j]);
      cplx step = ratio / (1.0 - ratio * sum);
      z[k] -= step;
      if (std::abs(step) > 1e-14 * std::max(1.0, std::abs(z[k]))) converged = false;
    }
  }

  ComplexRootSet out;
  for (int k = 0; k < n; ++k) {
    double scale = evalScale(c, std::max(1.0, std::abs(z[k])));
    double res = std::abs(horner(c, z[k]));
    if (res > tol * scale)
      throw Error(ErrorKind::DidNotConverge, "Aberth iteration did not converge",
                  {{"residual", res}, {"scale", scale}});
    out.residualBound = std::max(out.residualBound, res);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(z[i] - z[j]) < tol * std::max(1.0, std::abs(z[i])))
        throw Error(ErrorKind::NonSquarefree, "two roots closer than tolerance",
                    {{"root", {z[i].real(), z[i].imag()}}});
  std::sort(z.begin(), z.end(), [tol](const cplx& a, const cplx& b) { return rootLess(a, b, tol); });
  out.roots = std::move(z);
  return out;
}

ComplexRootSet roots(const UniPoly& p, double tol) {
  if (p.degree() < 1) throw Error(ErrorKind::InvalidInput, "roots of a constant polynomial");
  if (!isSquarefree(p))
    throw Error(ErrorKind::NonSquarefree, "polynomial has a repeated root", {{"poly", p.toString()}});
  std::vector<cplx> c;
  for (const auto& v : p.coeffs()) c.emplace_back(v.get_d(), 0.0);
  return roots(c, tol);
}

std::vector<double> realRoots(const UniPoly& p, double tol) {
  auto rs = roots(p, tol);
  std::vector<double> out;
  for (const auto& r : rs.roots) {
    if (std::abs(r.imag()) > 1e-7 * std::max(1.0, std::abs(r)))
      throw Error(ErrorKind::ConditionViolation, "expected only real roots",
                  {{"poly", p.toString()}, {"root", {r.real(), r.imag()}}});
    out.push_back(r.real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lefschetz
