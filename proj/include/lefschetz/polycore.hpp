#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include <json.hpp>

namespace lefschetz {

using Rat = mpq_class;
using Int = mpz_class;
using cplx = std::complex<double>;

// Accepts "p/q", integers and finite decimals such as "-0.125".
Rat parseRational(const std::string& text);
std::string formatRational(const Rat& value);
double toDouble(const Rat& value);
// Nearest rational with the given denominator.
Rat roundRational(double value, long denominator);

class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs);
  UniPoly(std::initializer_list<Rat> coeffs);

  static UniPoly constant(const Rat& c);
  static UniPoly monomial(int degree, const Rat& c = 1);
  static UniPoly fromRoots(const std::vector<Rat>& roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool isZero() const { return coeffs_.empty(); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coeff(int k) const;
  Rat leading() const;

  Rat operator()(const Rat& x) const;
  cplx eval(cplx x) const;
  double eval(double x) const;
  UniPoly derivative() const;
  std::vector<double> coeffsDouble() const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Rat& c) const;
  UniPoly operator-() const;
  bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  // Euclidean division: *this = q * d + r with deg r < deg d.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
  UniPoly monic() const;

  std::string toString(const std::string& var = "x") const;
  nlohmann::json toJson(const std::string& var = "x") const;
  static UniPoly fromJson(const nlohmann::json& j);

 private:
  void normalize();
  std::vector<Rat> coeffs_;
};

UniPoly compose(const UniPoly& outer, const UniPoly& inner);
UniPoly gcd(const UniPoly& a, const UniPoly& b);
bool isSquarefree(const UniPoly& p);

using Monomial = std::pair<int, int>;

class BiPoly {
 public:
  BiPoly() = default;

  static BiPoly constant(const Rat& c);
  static BiPoly monomial(int i, int j, const Rat& c = 1);
  static BiPoly x() { return monomial(1, 0); }
  static BiPoly y() { return monomial(0, 1); }
  static BiPoly fromX(const UniPoly& p);
  static BiPoly fromY(const UniPoly& p);

  const std::map<Monomial, Rat>& terms() const { return terms_; }
  Rat coeff(int i, int j) const;
  void add(int i, int j, const Rat& c);
  bool isZero() const { return terms_.empty(); }
  int totalDegree() const;  // -1 for the zero polynomial
  int degreeX() const;
  int degreeY() const;
  BiPoly homogeneousPart(int k) const;
  bool isConstant() const;

  BiPoly dx() const;
  BiPoly dy() const;
  Rat operator()(const Rat& x, const Rat& y) const;
  // p(X, Y) for polynomial arguments.
  BiPoly substitute(const BiPoly& X, const BiPoly& Y) const;

  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly operator*(const Rat& c) const;
  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const BiPoly& o) const { return !(*this == o); }
  BiPoly pow(int k) const;

  std::string toString() const;
  nlohmann::json toJson() const;
  static BiPoly fromJson(const nlohmann::json& j);

 private:
  std::map<Monomial, Rat> terms_;
};

// P dx + Q dy.
struct BiForm1 {
  BiPoly P;
  BiPoly Q;

  BiForm1 operator+(const BiForm1& o) const { return {P + o.P, Q + o.Q}; }
  BiForm1 operator-(const BiForm1& o) const { return {P - o.P, Q - o.Q}; }
  BiForm1 operator*(const Rat& c) const { return {P * c, Q * c}; }
  bool operator==(const BiForm1& o) const { return P == o.P && Q == o.Q; }
  bool isZero() const { return P.isZero() && Q.isZero(); }
  // Largest total degree of the two coefficients.
  int coefficientDegree() const;
  // Degree with dx, dy of weight one; x^i y^j (x dy - y dx) has degree i+j+2.
  int weightedDegree() const { return isZero() ? -1 : coefficientDegree() + 1; }

  nlohmann::json toJson() const;
  static BiForm1 fromJson(const nlohmann::json& j);
};

BiForm1 multiply(const BiPoly& f, const BiForm1& w);
BiForm1 exteriorD(const BiPoly& f);
// Coefficient of dx^dy in d(P dx + Q dy), i.e. Q_x - P_y.
BiPoly d1(const BiForm1& form);
// K with dK = form and K(0,0) = 0; the form must be closed.
BiPoly potential(const BiForm1& form);
// x^i y^j (x dy - y dx).
BiForm1 eta(int i, int j);
// Pull back along (x, y) -> (X, Y).
BiForm1 pullback(const BiForm1& form, const BiPoly& X, const BiPoly& Y);

struct ComplexRootSet {
  std::vector<cplx> roots;
  double residualBound = 0.0;
};

constexpr double kDefaultRootTol = 1e-10;
constexpr int kAberthIterationCap = 500;

// Starts at LEFSCHETZ_TOL when set, else kDefaultRootTol. A tol <= 0 below means this value.
double default_tolerance();
void set_default_tolerance(double tol);

ComplexRootSet roots(const UniPoly& p, double tol = 0);
// Roots of a polynomial with complex coefficients (ascending degree).
ComplexRootSet roots(const std::vector<cplx>& coeffs, double tol = 0);
// Real roots of a polynomial whose roots are known to be real, ascending.
std::vector<double> realRoots(const UniPoly& p, double tol = 0);

}  // namespace lefschetz
