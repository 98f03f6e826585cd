#pragma once

#include <string>
#include <vector>

#include "lefschetz/oracle0.hpp"
#include "lefschetz/polycore.hpp"
#include "lefschetz/scenario.hpp"
#include "lefschetz/zlattice.hpp"

namespace lefschetz {

enum class Kind0 { Plain, PullBack, Tangency };

struct Label0 {
  Kind0 kind = Kind0::Plain;
  int index = 0;   // i for plain and pull-back cycles, a+k for tangency cycles
  int branch = 0;  // sheet j of a pull-back cycle
  char symbol = 'd';

  std::string str() const;
  bool operator==(const Label0& o) const {
    return kind == o.kind && index == o.index && branch == o.branch;
  }
};

struct Fiber0 {
  std::vector<cplx> points;
  cplx base;
};

struct CriticalValue0 {
  cplx value;
  std::string label;
};

struct Basis0 {
  UniPoly poly;
  std::vector<UniPoly> stages;  // inner first; empty for a plain polynomial
  Fiber0 fiber;
  int sigma = 1;  // +1: paths through the upper half-plane, -1: lower
  std::vector<Label0> labels;
  std::vector<IntVec> cycles;  // coefficients over fiber points
  std::vector<int> valueOf;    // index into values
  std::vector<CriticalValue0> values;

  int size() const { return static_cast<int>(cycles.size()); }
  IntMatrix gram() const;
  int indexOf(const std::string& label) const;
  int valueIndex(const std::string& label) const;
  std::vector<int> cyclesAt(int valueIndex) const;
  nlohmann::json toJson() const;
};

struct MonodromyOp0 {
  IntMatrix matrix;
  int valueIndex = -1;
  std::string valueLabel;
};

// Basis for a plain polynomial: delta_i = [t_i] - [t_{i+1}] for real-rooted input.
Basis0 basis0(const UniPoly& poly, cplx b = 0, int sigma = 1);

enum class SideId { Left, Right };
const Side& side(const Scenario& s, SideId id);
// Pull-back/tangency basis of g∘R (Left, upper half-plane) or h∘S (Right, lower half-plane).
Basis0 basis0(const Scenario& s, SideId id, cplx b = 0);
// Basis of g (Left) or h (Right) with values labeled by the scenario notation.
Basis0 outer_basis0(const Scenario& s, SideId id, cplx b = 0);

long intersection0(const IntVec& u, const IntVec& v);

// Encoded case table for g∘R; `corrected` selects the consistent sheet index for odd tangency rows.
IntMatrix pullback_table_reference(const Scenario& s, const Basis0& basis, bool corrected = true);
IntMatrix pullback_intersection_table(const Basis0& basis);

IntVec pushforward0(const UniPoly& map, const IntVec& cycle, const Fiber0& source, const Fiber0& target);
// Integer coordinates of a point-vector in the basis.
IntVec coordinates(const Basis0& basis, const IntVec& pointVector);
// Matrix of map_* : H0(source) -> H0(target) in basis coordinates.
IntMatrix pushforward_matrix(const UniPoly& map, const Basis0& source, const Basis0& target);

MonodromyOp0 monodromy0(const Basis0& basis, int valueIndex);
std::vector<MonodromyOp0> all_monodromy0(const Basis0& basis);

MonodromyOp0 induced_on_H0(const FiberPermutation& perm, const Basis0& basis);
// Monodromy along the simple loop of a critical value, computed by continuation.
MonodromyOp0 oracle_monodromy0(const Basis0& basis, int valueIndex, const TrackOptions& options = {});

struct TableComparison {
  int entries = 0;
  std::vector<std::string> mismatches;  // "row,col: computed vs reference"
  bool match() const { return mismatches.empty(); }
  nlohmann::json toJson() const;
};
TableComparison compare_tables(const IntMatrix& computed, const IntMatrix& reference,
                               const std::vector<std::string>& labels);

Lattice orbit_lattice0(const std::vector<MonodromyOp0>& generators, const IntVec& seed);

}  // namespace lefschetz
