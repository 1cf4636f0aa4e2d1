#pragma once

// Exact linear algebra over F_p: dense matrices, canonical (RREF) subspaces,
// and the spin (cyclic closure) of vectors under a set of matrices.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "platocover/errors.hpp"
#include "platocover/gf.hpp"

namespace platocover {

using gf::PrimeField;
using gf::Residue;
using Vector = std::vector<Residue>;

/// Dense row-major matrix over F_p. Acts on column vectors: v -> M v.
class Matrix {
public:
  Matrix(const PrimeField& f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static Matrix identity(const PrimeField& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Matrix from_rows(const PrimeField& f, std::size_t cols, const std::vector<Vector>& rows) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw InvalidArgument("Matrix::from_rows: row length mismatch");
      std::copy(rows[i].begin(), rows[i].end(), m.row_ptr(i));
    }
    return m;
  }
  static Matrix from_columns(const PrimeField& f, std::size_t rows, const std::vector<Vector>& cols) {
    Matrix m(f, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw InvalidArgument("Matrix::from_columns: column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Residue& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  Residue operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  Residue* row_ptr(std::size_t i) { return a_.data() + i * cols_; }
  const Residue* row_ptr(std::size_t i) const { return a_.data() + i * cols_; }
  Vector row(std::size_t i) const { return Vector(row_ptr(i), row_ptr(i) + cols_); }
  Vector column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  const std::vector<Residue>& data() const { return a_; }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Vector apply(const Vector& v) const {
    if (v.size() != cols_) throw InvalidArgument("Matrix::apply: dimension mismatch");
    const std::uint64_t p = field_.modulus();
    Vector out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
      const Residue* r = row_ptr(i);
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < cols_; ++j) {
        acc += std::uint64_t{r[j]} * v[j];
        if ((j & 7) == 7) acc %= p;
      }
      out[i] = static_cast<Residue>(acc % p);
    }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InvalidArgument("Matrix product: dimension mismatch");
    const std::uint64_t p = a.field_.modulus();
    Matrix c(a.field_, a.rows_, b.cols_);
    std::vector<std::uint64_t> acc(b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      const Residue* ar = a.row_ptr(i);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const std::uint64_t x = ar[k];
        if (x == 0) continue;
        const Residue* br = b.row_ptr(k);
        for (std::size_t j = 0; j < b.cols_; ++j) acc[j] = (acc[j] + x * br[j]) % p;
      }
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = static_cast<Residue>(acc[j]);
    }
    return c;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("Matrix sum: dimension mismatch");
    Matrix c(a);
    for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] = a.field_.add(a.a_[i], b.a_[i]);
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("Matrix difference: dimension mismatch");
    Matrix c(a);
    for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] = a.field_.sub(a.a_[i], b.a_[i]);
    return c;
  }
  Matrix scaled(Residue s) const {
    Matrix c(*this);
    for (auto& v : c.a_) v = field_.mul(v, s);
    return c;
  }
  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](Residue v) { return v == 0; });
  }
  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  /// In-place reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> rref_in_place() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    const auto& f = field_;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t piv = r;
      while (piv < rows_ && (*this)(piv, c) == 0) ++piv;
      if (piv == rows_) continue;
      if (piv != r) std::swap_ranges(row_ptr(piv), row_ptr(piv) + cols_, row_ptr(r));
      Residue inv = f.inv((*this)(r, c));
      Residue* rr = row_ptr(r);
      for (std::size_t j = c; j < cols_; ++j) rr[j] = f.mul(rr[j], inv);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r) continue;
        Residue t = (*this)(i, c);
        if (t == 0) continue;
        Residue* ri = row_ptr(i);
        Residue nt = f.neg(t);
        for (std::size_t j = c; j < cols_; ++j)
          if (rr[j]) ri[j] = f.add(ri[j], f.mul(nt, rr[j]));
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() const {
    Matrix m(*this);
    return m.rref_in_place().size();
  }

  /// Basis (as rows) of the right kernel {v : M v = 0}.
  std::vector<Vector> nullspace() const {
    Matrix m(*this);
    auto pivots = m.rref_in_place();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vector> out;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      Vector v(cols_, 0);
      v[free] = 1;
      for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = field_.neg(m(i, free));
      out.push_back(std::move(v));
    }
    return out;
  }

  /// Inverse of a square matrix; throws when singular.
  Matrix inverse() const {
    if (rows_ != cols_) throw InvalidArgument("Matrix::inverse: not square");
    Matrix aug(field_, rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_ + i) = 1;
    }
    auto piv = aug.rref_in_place();
    if (piv.size() < rows_ || piv[rows_ - 1] >= cols_) throw InvalidArgument("Matrix::inverse: singular");
    Matrix inv(field_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
    return inv;
  }

  Matrix power(std::uint64_t e) const {
    Matrix r = identity(field_, rows_), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

private:
  PrimeField field_;
  std::size_t rows_, cols_;
  std::vector<Residue> a_;
};

inline bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; });
}

/// Linear subspace of F_p^n, stored as its unique RREF basis.
class Subspace {
public:
  Subspace(const PrimeField& f, std::size_t ambient) : basis_(f, 0, ambient) {}

  /// Span of the rows of `spanning`.
  explicit Subspace(Matrix spanning) : basis_(std::move(spanning)) { canonicalize(); }

  static Subspace span(const PrimeField& f, std::size_t ambient, const std::vector<Vector>& vectors) {
    return Subspace(Matrix::from_rows(f, ambient, vectors));
  }
  static Subspace zero(const PrimeField& f, std::size_t ambient) { return Subspace(f, ambient); }
  static Subspace full(const PrimeField& f, std::size_t ambient) {
    return Subspace(Matrix::identity(f, ambient));
  }

  const PrimeField& field() const { return basis_.field(); }
  std::size_t ambient() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  std::size_t codim() const { return ambient() - dim(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vector> vectors() const {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
    return out;
  }

  /// Reduces v against the basis; zero iff v lies in the subspace.
  Vector residual(Vector v) const {
    const auto& f = field();
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      Residue t = v[pivots_[i]];
      if (t == 0) continue;
      Residue nt = f.neg(t);
      const Residue* r = basis_.row_ptr(i);
      for (std::size_t j = pivots_[i]; j < ambient(); ++j)
        if (r[j]) v[j] = f.add(v[j], f.mul(nt, r[j]));
    }
    return v;
  }

  bool contains(const Vector& v) const {
    if (v.size() != ambient()) throw InvalidArgument("Subspace::contains: dimension mismatch");
    return is_zero_vector(residual(v));
  }
  bool contains(const Subspace& s) const {
    check_same(s);
    for (std::size_t i = 0; i < s.dim(); ++i)
      if (!contains(s.basis_.row(i))) return false;
    return true;
  }

  /// Coordinates of v (which must lie in the subspace) in the RREF basis.
  Vector coordinates(const Vector& v) const {
    Vector c(dim());
    for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
    return c;
  }
  /// Vector with the given basis coordinates.
  Vector combine(const Vector& coords) const {
    const auto& f = field();
    Vector v(ambient(), 0);
    for (std::size_t i = 0; i < dim(); ++i) {
      if (coords[i] == 0) continue;
      const Residue* r = basis_.row_ptr(i);
      for (std::size_t j = 0; j < ambient(); ++j) v[j] = f.add(v[j], f.mul(coords[i], r[j]));
    }
    return v;
  }

  /// Matrix of an operator preserving the subspace, in basis coordinates (column convention).
  Matrix restrict(const Matrix& op) const {
    Matrix r(field(), dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      Vector img = op.apply(basis_.row(j));
      if (!contains(img)) throw VerificationFailure("Subspace::restrict: operator does not preserve subspace");
      Vector c = coordinates(img);
      for (std::size_t i = 0; i < dim(); ++i) r(i, j) = c[i];
    }
    return r;
  }

  bool is_invariant(const Matrix& op) const {
    for (std::size_t j = 0; j < dim(); ++j)
      if (!contains(op.apply(basis_.row(j)))) return false;
    return true;
  }

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
  bool operator<(const Subspace& o) const {
    if (dim() != o.dim()) return dim() < o.dim();
    return basis_.data() < o.basis_.data();
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull ^ dim();
    for (auto v : basis_.data()) h = (h ^ v) * 1099511628211ull;
    return h;
  }

  friend Subspace sum(const Subspace& a, const Subspace& b) {
    a.check_same(b);
    Matrix m(a.field(), a.dim() + b.dim(), a.ambient());
    for (std::size_t i = 0; i < a.dim(); ++i) std::copy_n(a.basis_.row_ptr(i), a.ambient(), m.row_ptr(i));
    for (std::size_t i = 0; i < b.dim(); ++i) std::copy_n(b.basis_.row_ptr(i), a.ambient(), m.row_ptr(a.dim() + i));
    return Subspace(std::move(m));
  }

  /// {w : <w, v> = 0 for all v in the subspace} under the standard dot product.
  friend Subspace annihilator(const Subspace& s) {
    return Subspace::span(s.field(), s.ambient(), s.basis_.nullspace());
  }

  friend Subspace intersect(const Subspace& a, const Subspace& b) {
    a.check_same(b);
    return annihilator(sum(annihilator(a), annihilator(b)));
  }

  /// M S = span{M v : v in S}.
  friend Subspace image(const Subspace& s, const Matrix& m) {
    if (m.cols() != s.ambient()) throw InvalidArgument("image: dimension mismatch");
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < s.dim(); ++i) rows.push_back(m.apply(s.basis_.row(i)));
    return Subspace::span(s.field(), m.rows(), rows);
  }

  std::size_t quotient_dim() const { return codim(); }

private:
  void canonicalize() {
    pivots_ = basis_.rref_in_place();
    Matrix trimmed(basis_.field(), pivots_.size(), basis_.cols());
    for (std::size_t i = 0; i < pivots_.size(); ++i)
      std::copy_n(basis_.row_ptr(i), basis_.cols(), trimmed.row_ptr(i));
    basis_ = std::move(trimmed);
  }
  void check_same(const Subspace& o) const {
    if (ambient() != o.ambient() || !(field() == o.field()))
      throw InvalidArgument("Subspace: ambient dimension mismatch");
  }

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const { return s.hash(); }
};

/// Incrementally built echelon basis; used for spinning.
class EchelonBuilder {
public:
  EchelonBuilder(const PrimeField& f, std::size_t n) : field_(f), n_(n) {}

  /// Adds v if independent of what is stored; returns whether it was added.
  bool add(Vector v) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      Residue t = v[pivots_[i]];
      if (t == 0) continue;
      Residue nt = field_.neg(t);
      const Vector& r = rows_[i];
      for (std::size_t j = pivots_[i]; j < n_; ++j)
        if (r[j]) v[j] = field_.add(v[j], field_.mul(nt, r[j]));
    }
    std::size_t piv = 0;
    while (piv < n_ && v[piv] == 0) ++piv;
    if (piv == n_) return false;
    Residue inv = field_.inv(v[piv]);
    for (auto& x : v) x = field_.mul(x, inv);
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }
  std::size_t dim() const { return rows_.size(); }
  Subspace to_subspace() const { return Subspace::span(field_, n_, rows_); }

private:
  PrimeField field_;
  std::size_t n_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Smallest subspace containing the seeds and invariant under every generator.
inline Subspace spin(const std::vector<Matrix>& generators, const std::vector<Vector>& seeds,
                     const PrimeField& f, std::size_t n) {
  EchelonBuilder eb(f, n);
  std::vector<Vector> queue;
  for (const auto& s : seeds)
    if (eb.add(s)) queue.push_back(s);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : generators) {
      Vector w = g.apply(queue[head]);
      if (eb.add(w)) queue.push_back(std::move(w));
    }
  }
  return eb.to_subspace();
}

}  // namespace platocover
