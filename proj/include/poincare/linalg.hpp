#pragma once

// Exact linear algebra over Q: sparse vectors and matrices, canonical
// subspaces (full RREF with unit pivots) and the elimination routines the
// rest of the engine is built on.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "poincare/rational.hpp"

namespace poincare {

using Vec = std::vector<Rational>;

/// Sorted (index, value) pairs with no stored zeros.
class SparseVec {
 public:
  using Entry = std::pair<std::size_t, Rational>;

  SparseVec() = default;
  explicit SparseVec(std::vector<Entry> entries);

  static SparseVec from_dense(const Vec& dense);
  static SparseVec unit(std::size_t index, Rational value = 1);

  Vec to_dense(std::size_t n) const;

  bool empty() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }
  std::size_t lead() const { return entries_.front().first; }
  const std::vector<Entry>& entries() const { return entries_; }

  Rational at(std::size_t index) const;
  std::size_t max_index_plus_one() const { return entries_.empty() ? 0 : entries_.back().first + 1; }

  // this += c * x
  void axpy(const Rational& c, const SparseVec& x);
  void scale(const Rational& c);
  SparseVec shifted(std::size_t offset) const;

  friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.entries_ == b.entries_; }
  friend SparseVec operator+(SparseVec a, const SparseVec& b) {
    a.axpy(1, b);
    return a;
  }
  friend SparseVec operator-(SparseVec a, const SparseVec& b) {
    a.axpy(-1, b);
    return a;
  }
  friend SparseVec operator*(const Rational& c, SparseVec a) {
    a.scale(c);
    return a;
  }

 private:
  std::vector<Entry> entries_;
};

/// Row-major sparse matrix. Absent entries are zero.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::vector<SparseVec> rows, std::size_t cols);
  static Matrix from_dense(const std::vector<Vec>& rows);
  static Matrix from_columns(const std::vector<SparseVec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const SparseVec& row(std::size_t i) const { return data_[i]; }
  const std::vector<SparseVec>& row_data() const { return data_; }

  Rational at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Rational& value);
  void add_to(std::size_t i, std::size_t j, const Rational& value);
  void set_row(std::size_t i, SparseVec row);
  /// Copies `block` with its (0,0) entry landing on (r0,c0).
  void set_block(std::size_t r0, std::size_t c0, const Matrix& block);

  Matrix transpose() const;
  std::vector<SparseVec> columns() const;
  bool is_zero() const;
  std::size_t nnz() const;
  Rational trace() const;

  Vec apply(const Vec& x) const;
  SparseVec apply(const SparseVec& x) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& c, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVec> data_;
};

Matrix commutator(const Matrix& a, const Matrix& b);
Matrix anticommutator(const Matrix& a, const Matrix& b);
bool is_nilpotent(const Matrix& m);

/// A subspace of Q^n stored as its canonical reduced row-echelon basis:
/// unit pivots, zeros above and below each pivot, rows sorted by pivot.
/// Equal subspaces have identical bases.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, const std::vector<SparseVec>& vectors);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  bool is_full() const { return dim() == ambient_; }
  const std::vector<SparseVec>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Non-pivot coordinates, ascending. The unit vectors at these positions
  /// form the canonical complement.
  std::vector<std::size_t> complement_coordinates() const;

  bool contains(const SparseVec& v) const;
  bool contains(const Subspace& other) const;

  /// Normal form of v modulo this subspace; supported on non-pivot columns.
  SparseVec reduce(const SparseVec& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersection(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t ambient_;
  std::vector<SparseVec> rows_;
  std::vector<std::size_t> pivots_;
};

struct RrefResult {
  std::size_t rank = 0;
  Subspace row_space;
  Subspace null_space;
};

RrefResult rref(const Matrix& m);

/// Returns the solution with every free variable set to 0, or nullopt when
/// b is outside the column space.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

struct SubspaceOps {
  Subspace sum;
  Subspace intersection;
  bool contains = false;  // b is inside a
};

SubspaceOps subspace_ops(const Subspace& a, const Subspace& b);

/// Coefficient vectors c with sum_i c_i * vectors[i] = 0, as a canonical
/// basis of that kernel (ambient dimension = vectors.size()).
Subspace left_kernel(const std::vector<SparseVec>& vectors, std::size_t ambient_dim);

/// Expresses vectors in a fixed linearly independent basis.
class Coordinates {
 public:
  Coordinates(const std::vector<SparseVec>& basis, std::size_t ambient_dim);
  std::size_t size() const { return count_; }
  /// nullopt when v is outside the span.
  std::optional<Vec> of(const SparseVec& v) const;

 private:
  std::size_t ambient_;
  std::size_t count_;
  std::vector<SparseVec> rows_;  // [rref part | transform part]
  std::vector<std::size_t> pivots_;
};

std::optional<Matrix> inverse(const Matrix& m);
Rational determinant(const Matrix& m);

/// Bareiss elimination on an integer matrix (destroys its argument).
Integer integer_determinant(std::vector<std::vector<Integer>> a);

nlohmann::json to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

}  // namespace poincare
