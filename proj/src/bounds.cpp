#include "lefschetz/bounds.hpp"

#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "lefschetz/errors.hpp"
#include "lefschetz/polycore.hpp"

namespace lefschetz {

long cyclicity_bound(long d, long n) {
  if (n < 2 || d < 1 || (d + 1) % n != 0 || (d + 1) / n < 2)
    throw Error(ErrorKind::InvalidFactorization, "d+1 must factor as n(a+1) with n >= 2 and a >= 1",
                {{"d", d}, {"n", n}});
  long m = (d + 1) / n;
  return (d + 1) * (d + 2) - ((n + 1) * (n + 2) + m * (m + 1)) - 1;
}

long pullback_cyclicity(long a, long n) {
  if (a < 1 || n < 2)
    throw Error(ErrorKind::InvalidFactorization, "need a >= 1 and n >= 2", {{"a", a}, {"n", n}});
  return cyclicity_bound(a * n + n - 1, n);
}

long hamiltonian_codim_bound(long d) {
  if (d < 2) throw Error(ErrorKind::InvalidInput, "need d >= 2", {{"d", d}});
  long twice = (d + 2) * (d - 1);
  if (twice % 2 != 0) throw Error(ErrorKind::Internal, "non-integral codimension");
  return twice / 2 - 1;
}

long logarithmic_bound(long d, const std::vector<long>& partition) {
  long sum = 0;
  for (long di : partition) {
    if (di < 1) throw Error(ErrorKind::BadPartition, "partition parts must be positive", {{"part", di}});
    sum += di;
  }
  if (partition.empty() || sum != d + 1)
    throw Error(ErrorKind::BadPartition, "partition must sum to d+1", {{"d", d}, {"sum", sum}});
  long total = (d + 1) * (d + 2) - 1;
  for (long di : partition) {
    long twice = (di + 1) * (di + 2);
    total -= twice / 2;
  }
  return total;
}

long mardesic_upper(long d) {
  long num = d * d * d * d + d * d - 2;
  if (num % 2 != 0) throw Error(ErrorKind::Internal, "non-integral bound");
  return num / 2;
}

double balanced_heuristic(long d) {
  return static_cast<double>(d * d + d) - 4 * std::sqrt(static_cast<double>(d + 1)) - 3;
}

nlohmann::json BoundReport::toJson() const {
  return {{"d", d},
          {"a", a},
          {"n", n},
          {"C", pullbackBound},
          {"hamiltonian_codim_bound", hamiltonianBound},
          {"logarithmic_all_ones", logarithmicMaxBound},
          {"mardesic_upper", mardesicUpper},
          {"balanced_heuristic", heuristic}};
}

std::string BoundReport::toText() const {
  std::ostringstream os;
  os << "d=" << d << " a=" << a << " n=" << n << "\n"
     << "C=" << pullbackBound << "\n"
     << "hamiltonian_codim_bound=" << hamiltonianBound << "\n"
     << "logarithmic_all_ones=" << logarithmicMaxBound << "\n"
     << "mardesic_upper=" << mardesicUpper << "\n"
     << "balanced_heuristic=" << std::fixed << std::setprecision(3) << heuristic << "\n";
  return os.str();
}

std::string BoundReport::toCsv() const {
  std::ostringstream os;
  os << "d,a,n,C,hamiltonian_codim_bound,logarithmic_all_ones,mardesic_upper,balanced_heuristic\n"
     << d << "," << a << "," << n << "," << pullbackBound << "," << hamiltonianBound << "," << logarithmicMaxBound
     << "," << mardesicUpper << "," << std::fixed << std::setprecision(6) << heuristic << "\n";
  return os.str();
}

BoundReport bound_report(long a, long n) {
  BoundReport r;
  r.a = a;
  r.n = n;
  r.pullbackBound = pullback_cyclicity(a, n);
  r.d = a * n + n - 1;
  r.hamiltonianBound = hamiltonian_codim_bound(r.d);
  r.logarithmicMaxBound = logarithmic_bound(r.d, std::vector<long>(r.d + 1, 1));
  r.mardesicUpper = mardesic_upper(r.d);
  r.heuristic = balanced_heuristic(r.d);
  return r;
}

nlohmann::json FactorizationTable::toJson() const {
  nlohmann::json rs = nlohmann::json::array();
  for (const auto& r : rows) rs.push_back({{"n", r.n}, {"a_plus_1", r.aPlus1}, {"C", r.C}, {"maximizer", r.maximizer}});
  return {{"d_plus_1", dPlus1}, {"d", dPlus1 - 1}, {"rows", rs}, {"balanced_heuristic", heuristic}};
}

std::string FactorizationTable::toText() const {
  std::ostringstream os;
  os << std::setw(6) << "n" << std::setw(8) << "a+1" << std::setw(10) << "C" << "\n";
  for (const auto& r : rows)
    os << std::setw(6) << r.n << std::setw(8) << r.aPlus1 << std::setw(10) << r.C << (r.maximizer ? "  max" : "") << "\n";
  os << "heuristic d^2+d-4sqrt(d+1)-3 = " << std::fixed << std::setprecision(3) << heuristic << "\n";
  return os.str();
}

std::string FactorizationTable::toCsv() const {
  std::ostringstream os;
  os << "n,a_plus_1,C,maximizer\n";
  for (const auto& r : rows) os << r.n << "," << r.aPlus1 << "," << r.C << "," << (r.maximizer ? 1 : 0) << "\n";
  return os.str();
}

FactorizationTable best_factorization(long dPlus1) {
  FactorizationTable t;
  t.dPlus1 = dPlus1;
  if (dPlus1 < 4) throw Error(ErrorKind::PrimeInput, "d+1 has no admissible factorization", {{"d_plus_1", dPlus1}});
  for (long n = 2; n <= dPlus1 / 2; ++n)
    if (dPlus1 % n == 0) t.rows.push_back({n, dPlus1 / n, cyclicity_bound(dPlus1 - 1, n), false});
  if (t.rows.empty()) throw Error(ErrorKind::PrimeInput, "d+1 is prime", {{"d_plus_1", dPlus1}});
  long best = t.rows.front().C;
  for (const auto& r : t.rows) best = std::max(best, r.C);
  for (auto& r : t.rows) r.maximizer = r.C == best;
  t.heuristic = balanced_heuristic(dPlus1 - 1);
  return t;
}

nlohmann::json IdentityCheck::toJson() const {
  return {{"closed_form_agrees", closedFormAgrees},
          {"q2_specialization_agrees", specializationAgrees},
          {"general_expanded", generalExpanded},
          {"closed_form", closedForm},
          {"notes", notes}};
}

IdentityCheck symbolic_identity_check() {
  IdentityCheck c;
  // p = x, q = y
  BiPoly p = BiPoly::x(), q = BiPoly::y(), one = BiPoly::constant(1);
  BiPoly pq = p * q;
  BiPoly general = pq * (pq + one) - ((q + one) * (q + one * 2) + p * (p + one)) - one;
  BiPoly closed = pq * pq + pq - q * q - q * 3 - p * p - p - one * 3;
  c.generalExpanded = general.toString();
  c.closedForm = closed.toString();
  c.closedFormAgrees = general == closed;
  BiPoly q2 = general.substitute(p, BiPoly::constant(2));
  BiPoly special = p * p * 3 + p - one * 13;
  c.specializationAgrees = q2 == special;
  if (!c.closedFormAgrees) c.notes.push_back("closed form differs from the general formula");
  if (!c.specializationAgrees) c.notes.push_back("q=2 specialization differs from 3p^2+p-13");
  return c;
}

}  // namespace lefschetz
