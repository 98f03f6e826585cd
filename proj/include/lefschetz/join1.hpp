#pragma once

#include <string>
#include <vector>

#include "lefschetz/homology0.hpp"
#include "lefschetz/scenario.hpp"
#include "lefschetz/zlattice.hpp"

namespace lefschetz {

enum class JoinKind { Plain, PullBack, TangencyX, TangencyY, Exceptional };
const char* joinKindName(JoinKind k);

struct JoinLabel {
  Label0 left;
  Label0 right;
  JoinKind kind = JoinKind::Plain;
  int leftIndex = 0;   // position in the left dim-0 basis
  int rightIndex = 0;  // position in the right dim-0 basis

  std::string str() const { return left.str() + "*" + right.str(); }
};

enum class Which { F, FcompF };

struct JoinBasis {
  Which which = Which::F;
  int a = 0, n = 0;
  Basis0 leftBasis, rightBasis;
  std::vector<JoinLabel> labels;
  std::vector<int> valueOf;                    // index into values
  std::vector<std::pair<int, int>> values;     // formal pairs (left value, right value)

  int size() const { return static_cast<int>(labels.size()); }
  int indexOf(const std::string& label) const;
  std::string valueLabel(int v) const;
  int valueIndex(const std::string& label) const;
  std::vector<int> cyclesAt(int v) const;
  std::vector<int> ofKind(JoinKind k) const;
  nlohmann::json toJson() const;
};

JoinBasis join_basis(const Scenario& s, Which which);

// Readings of the f table: the case "(i even, j odd, l=i+-1, k=l+1)" taken verbatim or as k=j+1.
enum class FReading { TableCorrected, TableVerbatim, Computed };
// Readings of the f∘F table: the duplicated condition "(n even, a odd, odd index)" resolved to
// the first displayed sign (A) or the second (B); Computed is the join form of the dim-0 data.
enum class FFReading { TableA, TableB, Computed };
const char* readingName(FReading r);
const char* readingName(FFReading r);

// Intersection form of joins computed from the dim-0 Gram matrices and path orders.
IntMatrix join_form(const JoinBasis& basis);
IntMatrix intersection_f(const JoinBasis& basis, FReading reading = FReading::TableCorrected);
IntMatrix intersection_fF(const JoinBasis& basis, const IntMatrix& formF, FFReading reading);

struct MonodromyOp1 {
  IntMatrix matrix;
  int valueIndex = -1;
  std::string valueLabel;
};

MonodromyOp1 monodromy1(const JoinBasis& basis, const IntMatrix& form, int valueIndex);
std::vector<MonodromyOp1> all_monodromy1(const JoinBasis& basis, const IntMatrix& form);
std::vector<IntMatrix> matrices(const std::vector<MonodromyOp1>& ops);

// F_* from H1 of (f∘F)^{-1}(b) to H1 of f^{-1}(b), in join coordinates.
IntMatrix pushforward_F(const JoinBasis& fF, const JoinBasis& f);

struct FormValidation {
  bool skew = false;
  bool preserved = false;
  bool kernelInvariant = false;
  bool equivariant = false;
  bool connected = false;  // graph of nonzero entries
  std::vector<std::string> violations;
  bool ok() const { return skew && preserved && kernelInvariant && equivariant && connected; }
  nlohmann::json toJson() const;
};

FormValidation validate_form(const JoinBasis& fF, const IntMatrix& formFF, const JoinBasis& f,
                             const IntMatrix& formF);

struct ReadingOutcome {
  FFReading reading;
  bool built = false;  // false when the table was internally inconsistent
  std::string buildError;
  FormValidation validation;
};

struct KernelReport {
  int a = 0, n = 0;
  int basisSize = 0;
  int nullity = 0;
  int expectedNullity = 0;  // (na+n-1)^2 - a^2
  std::vector<ReadingOutcome> readings;
  bool readingFound = false;
  FFReading chosen = FFReading::Computed;
  std::string seedLabel;
  Lattice kernel;
  Lattice orbit;
  bool orbitInKernel = false;
  bool orbitEqualsKernel = false;
  // Supplementary: orbit of one tangency cycle of each kind together.
  Lattice orbitBothKinds;
  bool bothKindsEqualKernel = false;
  bool pass() const { return nullity == expectedNullity && orbitEqualsKernel; }
  nlohmann::json toJson(bool withBases = false) const;
};

KernelReport kernel_report(const Scenario& s);

struct SimplicityReport {
  int a = 0;
  std::vector<std::pair<std::string, int>> orbitRanks;
  bool simple = false;
  nlohmann::json toJson() const;
};

SimplicityReport simplicity_check(const JoinBasis& f, const IntMatrix& formF);
SimplicityReport simplicity_check(const Scenario& s);

struct TangencyOrbitReport {
  std::string seedLabel;
  int orbitRank = 0;
  int tangencyTotal = 0, tangencyMembers = 0;
  int exceptionalTotal = 0, exceptionalMembers = 0;
  int differenceTotal = 0, differenceMembers = 0;
  int nablaTotal = 0, nablaMembers = 0;
  bool pullBackMember = false;
  std::vector<std::string> missing;
  bool complete() const {
    return tangencyMembers == tangencyTotal && exceptionalMembers == exceptionalTotal &&
           differenceMembers == differenceTotal && nablaMembers == nablaTotal;
  }
  nlohmann::json toJson() const;
};

TangencyOrbitReport tangency_orbit_decomposition(const Scenario& s, const std::string& seedLabel = "");

// The join basis, the chosen f∘F form and the f form for a scenario.
struct JoinContext {
  JoinBasis f, fF;
  IntMatrix formF, formFF;
  FFReading reading = FFReading::Computed;
};
JoinContext join_context(const Scenario& s);

}  // namespace lefschetz
