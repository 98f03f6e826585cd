#pragma once

#include <vector>

#include <gmpxx.h>

#include <json.hpp>

namespace lefschetz {

using IntVec = std::vector<mpz_class>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}
  static IntMatrix identity(int n);
  static IntMatrix fromRows(const std::vector<std::vector<long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  mpz_class& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const mpz_class& operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& o) const;
  IntVec operator*(const IntVec& v) const;
  IntMatrix transpose() const;
  bool operator==(const IntMatrix& o) const;
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }
  IntVec row(int r) const;
  IntVec col(int c) const;
  bool isSkew() const;
  bool isSymmetric() const;

  nlohmann::json toJson() const;
  std::vector<std::vector<long>> toLongs() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<mpz_class> data_;
};

IntVec unitVector(int dim, int k);
bool isZero(const IntVec& v);
mpz_class dot(const IntVec& a, const IntVec& b);

mpz_class determinant(const IntMatrix& m);
int rank(const IntMatrix& m);
// Throws NonUnimodularGenerator unless det = +-1.
IntMatrix inverseUnimodular(const IntMatrix& m);

class Lattice {
 public:
  explicit Lattice(int ambientDim = 0) : dim_(ambientDim) {}

  int ambientDim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<IntVec>& hermiteBasis() const { return rows_; }

  // Returns true when the lattice grew.
  bool insert(const IntVec& v);
  bool contains(const IntVec& v) const;
  bool contains(const Lattice& other) const;
  bool operator==(const Lattice& o) const { return dim_ == o.dim_ && rows_ == o.rows_; }
  bool operator!=(const Lattice& o) const { return !(*this == o); }

  nlohmann::json toJson() const;

 private:
  static int pivotOf(const IntVec& v);
  void canonicalize();

  int dim_;
  std::vector<IntVec> rows_;
};

Lattice hnf(const std::vector<IntVec>& vectors, int ambientDim);
bool member(const Lattice& lattice, const IntVec& v);
bool equal(const Lattice& a, const Lattice& b);
// Saturated integer kernel {v : M v = 0}.
Lattice kernel(const IntMatrix& m);
// Smallest lattice containing seed and stable under the generators and their inverses.
Lattice orbitClosure(const std::vector<IntMatrix>& generators, const IntVec& seed);
Lattice orbitClosure(const std::vector<IntMatrix>& generators, const std::vector<IntVec>& seeds);

}  // namespace lefschetz
