#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lefschetz/polycore.hpp"
#include "lefschetz/scenario.hpp"

namespace lefschetz {

struct PetrovBasis {
  int d = 0;
  std::vector<Monomial> labels;  // (i, j) with 0 <= i, j <= d-2

  BiForm1 form(int i, int j) const { return eta(i, j); }
  // A_ij = (i+1)/d + (j+1)/d
  Rat weight(int i, int j) const { return Rat(i + 1, d) + Rat(j + 1, d); }
  int size() const { return static_cast<int>(labels.size()); }
  int indexOf(int i, int j) const;
};

PetrovBasis petrov_basis(int d);

// True iff the leading form of l is a product of deg(l) pairwise distinct linear forms.
bool transversal_check(const BiPoly& l);

struct PetrovDecomposition {
  int d = 0;
  std::map<Monomial, UniPoly> h;  // h_ij(t), zero entries omitted
  BiPoly zeta1;
  BiPoly zeta2;

  UniPoly coefficient(int i, int j) const;
  // Σ h_ij(l) η_ij + ζ1 dl + dζ2
  BiForm1 reconstruct(const BiPoly& l) const;
  // deg h_ij <= floor(weightedDegree/d - A_ij) for every nonzero h_ij.
  bool degreeBoundsHold(int weightedDegree) const;
  bool constantCoefficients() const;
  nlohmann::json toJson() const;
};

// l must be g(x) + h(y) with deg g = deg h.
PetrovDecomposition decompose(const BiForm1& omega, const BiPoly& l);

struct RelativeExactness {
  bool exact = false;
  BiPoly K;  // ω = dK + A dl
  BiPoly A;
  nlohmann::json toJson() const;
};

RelativeExactness relatively_exact(const BiForm1& omega, const BiPoly& l);

BiPoly f_of(const Scenario& s);        // g(x) + h(y)
BiPoly fF_of(const Scenario& s);       // g(R(x)) + h(S(y))
BiPoly R_of(const Scenario& s);
BiPoly S_of(const Scenario& s);

struct ExtensionReport {
  int a = 0, n = 0, D = 0;
  std::vector<Monomial> sources;  // (i, j) of η_ij for f
  std::vector<Monomial> targets;  // Petrov labels of f∘F
  std::vector<std::vector<Rat>> matrix;  // constant coefficients, one row per source
  int rank = 0;
  bool constant = false;
  bool pass() const { return constant && rank == a * a; }
  nlohmann::json toJson() const;
};

// Decomposes every F*(η_ij) in the Petrov basis of f∘F. Throws NonConstantCoefficient.
ExtensionReport pullback_basis_extension(const Scenario& s);

// W for ω = P dy - Q dx with deformation (R1, S1) of F and α1 of f.
BiForm1 tangent_vector_W(const Scenario& s, const BiPoly& P, const BiPoly& Q, const BiPoly& R1, const BiPoly& S1,
                         const BiForm1& alpha1);
// d(R1 f_x(R,S) + S1 f_y(R,S)) + F*(α1), the case ω = df.
BiForm1 hamiltonian_W(const Scenario& s, const BiPoly& R1, const BiPoly& S1, const BiForm1& alpha1);

struct TangentConeResult {
  bool member = false;
  BiForm1 alpha;  // form in the (u, v) plane of f
  BiPoly K;
  std::string obstruction;
  nlohmann::json toJson() const;
};

TangentConeResult tangent_cone_membership(const BiForm1& omega, const Scenario& s);

}  // namespace lefschetz
