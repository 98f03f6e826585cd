#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace lefschetz {

// C = (d+1)(d+2) - ((n+1)(n+2) + ((d+1)/n)((d+1)/n + 1)) - 1; needs n >= 2, n | d+1, (d+1)/n >= 2.
long cyclicity_bound(long d, long n);
// cyclicity_bound at d = an + n - 1.
long pullback_cyclicity(long a, long n);
long hamiltonian_codim_bound(long d);
long logarithmic_bound(long d, const std::vector<long>& partition);
long mardesic_upper(long d);
// d^2 + d - 4 sqrt(d+1) - 3
double balanced_heuristic(long d);

struct BoundReport {
  long d = 0, a = 0, n = 0;
  long pullbackBound = 0;
  long hamiltonianBound = 0;
  long logarithmicMaxBound = 0;  // all-ones partition
  long mardesicUpper = 0;
  double heuristic = 0;
  nlohmann::json toJson() const;
  std::string toText() const;
  std::string toCsv() const;
};

BoundReport bound_report(long a, long n);

struct FactorizationRow {
  long n = 0, aPlus1 = 0;
  long C = 0;
  bool maximizer = false;
};

struct FactorizationTable {
  long dPlus1 = 0;
  std::vector<FactorizationRow> rows;  // sorted by n
  double heuristic = 0;
  nlohmann::json toJson() const;
  std::string toText() const;
  std::string toCsv() const;
};

FactorizationTable best_factorization(long dPlus1);

// Compares the general C formula at d+1 = pq against the closed form (pq)^2 + pq - q^2 - 3q - p^2 - p - 3
// as polynomials in p, q, and the q = 2 specialization 3p^2 + p - 13.
struct IdentityCheck {
  bool closedFormAgrees = false;
  bool specializationAgrees = false;
  std::string generalExpanded;
  std::string closedForm;
  std::vector<std::string> notes;
  nlohmann::json toJson() const;
};

IdentityCheck symbolic_identity_check();

}  // namespace lefschetz
