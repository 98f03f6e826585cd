#pragma once

#include <string>
#include <vector>

#include "lefschetz/polycore.hpp"

namespace lefschetz {

constexpr double kCriticalValueTol = 1e-9;

enum class CompositeKind { PullBack, Tangency };

// A critical point of g∘R (or h∘S).
struct CompositeCritical {
  double x = 0;
  double value = 0;
  CompositeKind kind = CompositeKind::PullBack;
  int label = 0;   // C-label 1..a for pull-back points, a+k for tangency points
  int branch = 0;  // 1..n among the pull-back points sharing a value, 0 for tangency
};

// One factor of F = (R, S) composed with the matching factor of f = g + h.
struct Side {
  std::string name;       // "gR" or "hS"
  UniPoly inner;          // R
  UniPoly outer;          // g
  UniPoly composite;      // g∘R
  std::vector<Rat> innerRoots;
  std::vector<Rat> outerRoots;
  std::vector<double> innerCritical;  // q_1 < ... < q_{n-1}
  std::vector<double> outerCritical;  // p_1 < ... < p_a
  std::vector<int> labelOfOuterCritical;  // C-label of p_i
  std::vector<double> C;       // C[i-1] = value labeled c_i
  std::vector<double> Ctilde;  // Ctilde[k-1] = value labeled c~_{a+k}
  std::vector<CompositeCritical> critical;  // all (na+n-1) critical points of g∘R, ascending x
  std::vector<double> fiberPoints;          // roots of g∘R, ascending
};

struct Scenario {
  int a = 0;
  int n = 0;
  UniPoly R, S, g, h;
  Side left;   // g∘R
  Side right;  // h∘S

  nlohmann::json toJson() const;
};

struct CriticalData {
  struct PerSide {
    std::vector<double> C;
    std::vector<double> Ctilde;
    // critical value -> critical points with that value (ascending)
    std::vector<std::pair<double, std::vector<double>>> perValue;
  };
  PerSide left, right;
  nlohmann::json toJson() const;
};

Scenario build_scenario(const std::vector<Rat>& rootsR, const std::vector<Rat>& rootsS,
                        const std::vector<Rat>& rootsG, const std::vector<Rat>& rootsH);
Scenario default_scenario(int a, int n);
Scenario scenario_from_json(const nlohmann::json& j);
CriticalData critical_data(const Scenario& s);

// C-label attached to the i-th critical point of g (1-based, ascending).
int c_label(int i, int a, int n);

}  // namespace lefschetz
