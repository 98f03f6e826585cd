#include "lefschetz/zlattice.hpp"

#include <algorithm>

#include "lefschetz/errors.hpp"

namespace lefschetz {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

IntMatrix IntMatrix::fromRows(const std::vector<std::vector<long>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  IntMatrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const mpz_class& a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j)
        if (o(k, j) != 0) out(i, j) += a * o(k, j);
    }
  return out;
}

IntVec IntMatrix::operator*(const IntVec& v) const {
  IntVec out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k)
      if ((*this)(i, k) != 0 && v[k] != 0) out[i] += (*this)(i, k) * v[k];
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

IntVec IntMatrix::row(int r) const {
  return IntVec(data_.begin() + static_cast<long>(r) * cols_,
                data_.begin() + static_cast<long>(r + 1) * cols_);
}

IntVec IntMatrix::col(int c) const {
  IntVec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

bool IntMatrix::isSkew() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

bool IntMatrix::isSymmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < i; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

std::vector<std::vector<long>> IntMatrix::toLongs() const {
  std::vector<std::vector<long>> out(rows_, std::vector<long>(cols_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j).get_si();
  return out;
}

nlohmann::json IntMatrix::toJson() const { return toLongs(); }

IntVec unitVector(int dim, int k) {
  IntVec v(dim);
  v[k] = 1;
  return v;
}

bool isZero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const mpz_class& x) { return x == 0; });
}

mpz_class dot(const IntVec& a, const IntVec& b) {
  mpz_class s = 0;
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] != 0 && b[k] != 0) s += a[k] * b[k];
  return s;
}

namespace {

// Fraction-free Gaussian elimination; returns rank and (for square input) determinant.
std::pair<int, mpz_class> bareiss(IntMatrix a) {
  int n = a.rows(), m = a.cols();
  int r = 0;
  mpz_class prev = 1, sign = 1;
  for (int c = 0; c < m && r < n; ++c) {
    int p = r;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) continue;
    if (p != r) {
      for (int j = 0; j < m; ++j) std::swap(a(p, j), a(r, j));
      sign = -sign;
    }
    for (int i = r + 1; i < n; ++i) {
      for (int j = c + 1; j < m; ++j) {
        a(i, j) = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  mpz_class det = 0;
  if (n == m && r == n) det = sign * a(n - 1, n - 1);
  return {r, det};
}

}  // namespace

mpz_class determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidInput, "determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  return bareiss(m).second;
}

int rank(const IntMatrix& m) { return bareiss(m).first; }

IntMatrix inverseUnimodular(const IntMatrix& m) {
  int n = m.rows();
  if (n != m.cols()) throw Error(ErrorKind::NonUnimodularGenerator, "generator is not square");
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw Error(ErrorKind::NonUnimodularGenerator, "generator is singular");
    std::swap(a[p], a[c]);
    mpq_class inv = 1 / a[c][c];
    for (int j = 0; j < 2 * n; ++j) a[c][j] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      mpq_class f = a[i][c];
      for (int j = c; j < 2 * n; ++j)
        if (a[c][j] != 0) a[i][j] -= f * a[c][j];
    }
  }
  IntMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (a[i][n + j].get_den() != 1)
        throw Error(ErrorKind::NonUnimodularGenerator, "generator inverse is not integral");
      out(i, j) = a[i][n + j].get_num();
    }
  return out;
}

// ---------------------------------------------------------------- Lattice

int Lattice::pivotOf(const IntVec& v) {
  for (size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) return static_cast<int>(k);
  return -1;
}

bool Lattice::insert(const IntVec& input) {
  if (static_cast<int>(input.size()) != dim_)
    throw Error(ErrorKind::InvalidInput, "lattice vector dimension mismatch");
  IntVec v = input;
  bool changed = false;
  size_t i = 0;
  while (true) {
    int pv = pivotOf(v);
    if (pv < 0) break;
    while (i < rows_.size() && pivotOf(rows_[i]) < pv) ++i;
    if (i == rows_.size() || pivotOf(rows_[i]) > pv) {
      if (v[pv] < 0)
        for (auto& x : v) x = -x;
      rows_.insert(rows_.begin() + static_cast<long>(i), v);
      changed = true;
      break;
    }
    IntVec& r = rows_[i];
    const mpz_class a = r[pv], b = v[pv];
    if (b % a == 0) {
      mpz_class q = b / a;
      for (int k = pv; k < dim_; ++k)
        if (r[k] != 0) v[k] -= q * r[k];
      continue;
    }
    mpz_class g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_class ag = a / g, bg = b / g;
    IntVec nr(dim_), nv(dim_);
    for (int k = pv; k < dim_; ++k) {
      nr[k] = s * r[k] + t * v[k];
      nv[k] = ag * v[k] - bg * r[k];
    }
    if (nr[pv] < 0)
      for (auto& x : nr) x = -x;
    r = std::move(nr);
    v = std::move(nv);
    changed = true;
  }
  if (changed) canonicalize();
  return changed;
}

void Lattice::canonicalize() {
  for (size_t i = 0; i < rows_.size(); ++i) {
    int c = pivotOf(rows_[i]);
    const mpz_class& p = rows_[i][c];
    for (size_t j = 0; j < i; ++j) {
      if (rows_[j][c] == 0) continue;
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), rows_[j][c].get_mpz_t(), p.get_mpz_t());
      if (q == 0) continue;
      for (int k = c; k < dim_; ++k)
        if (rows_[i][k] != 0) rows_[j][k] -= q * rows_[i][k];
    }
  }
}

bool Lattice::contains(const IntVec& input) const {
  if (static_cast<int>(input.size()) != dim_)
    throw Error(ErrorKind::InvalidInput, "lattice vector dimension mismatch");
  IntVec v = input;
  for (const auto& r : rows_) {
    int c = pivotOf(r);
    if (v[c] == 0) continue;
    if (v[c] % r[c] != 0) return false;
    mpz_class q = v[c] / r[c];
    for (int k = c; k < dim_; ++k)
      if (r[k] != 0) v[k] -= q * r[k];
  }
  return isZero(v);
}

bool Lattice::contains(const Lattice& other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [this](const IntVec& v) { return contains(v); });
}

nlohmann::json Lattice::toJson() const {
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& r : rows_) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& x : r) row.push_back(x.get_si());
    basis.push_back(row);
  }
  return {{"ambient_dim", dim_}, {"rank", rank()}, {"hermite_basis", basis}};
}

Lattice hnf(const std::vector<IntVec>& vectors, int ambientDim) {
  Lattice l(ambientDim);
  for (const auto& v : vectors) l.insert(v);
  return l;
}

bool member(const Lattice& lattice, const IntVec& v) { return lattice.contains(v); }

bool equal(const Lattice& a, const Lattice& b) { return a == b; }

Lattice kernel(const IntMatrix& m) {
  int rows = m.rows(), n = m.cols();
  Lattice aug(rows + n);
  for (int k = 0; k < n; ++k) {
    IntVec v(rows + n);
    for (int i = 0; i < rows; ++i) v[i] = m(i, k);
    v[rows + k] = 1;
    aug.insert(v);
  }
  Lattice out(n);
  for (const auto& r : aug.hermiteBasis()) {
    bool inKernel = std::all_of(r.begin(), r.begin() + rows, [](const mpz_class& x) { return x == 0; });
    if (inKernel) out.insert(IntVec(r.begin() + rows, r.end()));
  }
  return out;
}

Lattice orbitClosure(const std::vector<IntMatrix>& generators, const std::vector<IntVec>& seeds) {
  if (seeds.empty()) throw Error(ErrorKind::InvalidInput, "orbit closure needs a seed");
  int dim = static_cast<int>(seeds[0].size());
  std::vector<IntMatrix> all;
  for (const auto& g : generators) {
    if (g.rows() != dim || g.cols() != dim)
      throw Error(ErrorKind::InvalidInput, "generator dimension mismatch");
    all.push_back(g);
    all.push_back(inverseUnimodular(g));
  }
  Lattice l(dim);
  std::vector<IntVec> work;
  for (const auto& s : seeds)
    if (l.insert(s)) work.push_back(s);
  while (!work.empty()) {
    IntVec v = std::move(work.back());
    work.pop_back();
    for (const auto& g : all) {
      IntVec w = g * v;
      if (l.insert(w)) work.push_back(std::move(w));
    }
  }
  return l;
}

Lattice orbitClosure(const std::vector<IntMatrix>& generators, const IntVec& seed) {
  return orbitClosure(generators, std::vector<IntVec>{seed});
}

}  // namespace lefschetz
