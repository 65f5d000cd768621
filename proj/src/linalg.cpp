#include "poincare/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "poincare/error.hpp"

namespace poincare {

// ---------------------------------------------------------------------------
// SparseVec

SparseVec::SparseVec(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (auto& e : entries) {
    if (!entries_.empty() && entries_.back().first == e.first) {
      entries_.back().second += e.second;
    } else {
      entries_.push_back(std::move(e));
    }
  }
  std::erase_if(entries_, [](const Entry& e) { return e.second == 0; });
}

SparseVec SparseVec::from_dense(const Vec& dense) {
  SparseVec v;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) v.entries_.emplace_back(i, dense[i]);
  return v;
}

SparseVec SparseVec::unit(std::size_t index, Rational value) {
  SparseVec v;
  if (value != 0) v.entries_.emplace_back(index, std::move(value));
  return v;
}

Vec SparseVec::to_dense(std::size_t n) const {
  Vec out(n);
  for (const auto& [i, x] : entries_) {
    if (i >= n) throw DimensionMismatch("sparse vector index out of range");
    out[i] = x;
  }
  return out;
}

Rational SparseVec::at(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) return it->second;
  return 0;
}

void SparseVec::axpy(const Rational& c, const SparseVec& x) {
  if (c == 0 || x.empty()) return;
  std::vector<Entry> out;
  out.reserve(entries_.size() + x.entries_.size());
  auto a = entries_.begin();
  auto b = x.entries_.begin();
  while (a != entries_.end() || b != x.entries_.end()) {
    if (b == x.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == entries_.end() || b->first < a->first) {
      out.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      Rational s = a->second + c * b->second;
      if (s != 0) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(out);
}

void SparseVec::scale(const Rational& c) {
  if (c == 0) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.second *= c;
}

SparseVec SparseVec::shifted(std::size_t offset) const {
  SparseVec v = *this;
  for (auto& e : v.entries_) e.first += offset;
  return v;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i] = SparseVec::unit(i);
  return m;
}

Matrix Matrix::from_rows(std::vector<SparseVec> rows, std::size_t cols) {
  Matrix m;
  m.rows_ = rows.size();
  m.cols_ = cols;
  for (const auto& r : rows)
    if (r.max_index_plus_one() > cols) throw DimensionMismatch("row entry beyond column count");
  m.data_ = std::move(rows);
  return m;
}

Matrix Matrix::from_dense(const std::vector<Vec>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<SparseVec> data;
  data.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != cols) throw DimensionMismatch("ragged dense matrix");
    data.push_back(SparseVec::from_dense(r));
  }
  return from_rows(std::move(data), cols);
}

Matrix Matrix::from_columns(const std::vector<SparseVec>& cols, std::size_t rows) {
  std::vector<std::vector<SparseVec::Entry>> acc(rows);
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [i, x] : cols[j].entries()) {
      if (i >= rows) throw DimensionMismatch("column entry beyond row count");
      acc[i].emplace_back(j, x);
    }
  std::vector<SparseVec> data;
  data.reserve(rows);
  for (auto& a : acc) data.emplace_back(std::move(a));
  return from_rows(std::move(data), cols.size());
}

Rational Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw DimensionMismatch("matrix index out of range");
  return data_[i].at(j);
}

void Matrix::set(std::size_t i, std::size_t j, const Rational& value) {
  if (i >= rows_ || j >= cols_) throw DimensionMismatch("matrix index out of range");
  Rational delta = value - data_[i].at(j);
  data_[i].axpy(delta, SparseVec::unit(j));
}

void Matrix::add_to(std::size_t i, std::size_t j, const Rational& value) {
  if (i >= rows_ || j >= cols_) throw DimensionMismatch("matrix index out of range");
  data_[i].axpy(value, SparseVec::unit(j));
}

void Matrix::set_row(std::size_t i, SparseVec row) {
  if (i >= rows_ || row.max_index_plus_one() > cols_) throw DimensionMismatch("row out of range");
  data_[i] = std::move(row);
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& block) {
  if (r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_) throw DimensionMismatch("block does not fit");
  for (std::size_t i = 0; i < block.rows_; ++i)
    for (const auto& [j, x] : block.data_[i].entries()) set(r0 + i, c0 + j, x);
}

Matrix Matrix::transpose() const { return from_columns(data_, cols_); }

std::vector<SparseVec> Matrix::columns() const { return transpose().data_; }

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const SparseVec& r) { return r.empty(); });
}

std::size_t Matrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.nnz();
  return n;
}

Rational Matrix::trace() const {
  if (rows_ != cols_) throw DimensionMismatch("trace of non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += data_[i].at(i);
  return t;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
  Vec y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& [j, a] : data_[i].entries()) y[i] += a * x[j];
  return y;
}

SparseVec Matrix::apply(const SparseVec& x) const {
  if (x.max_index_plus_one() > cols_) throw DimensionMismatch("matrix-vector size mismatch");
  // Column-oriented accumulation keeps this cheap for sparse x.
  std::vector<SparseVec::Entry> out;
  for (std::size_t i = 0; i < rows_; ++i) {
    const auto& r = data_[i].entries();
    if (r.empty()) continue;
    Rational s = 0;
    auto a = r.begin();
    auto b = x.entries().begin();
    while (a != r.end() && b != x.entries().end()) {
      if (a->first < b->first) {
        ++a;
      } else if (b->first < a->first) {
        ++b;
      } else {
        s += a->second * b->second;
        ++a;
        ++b;
      }
    }
    if (s != 0) out.emplace_back(i, std::move(s));
  }
  return SparseVec(std::move(out));
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product size mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    SparseVec acc;
    for (const auto& [k, x] : a.data_[i].entries()) acc.axpy(x, b.data_[k]);
    c.data_[i] = std::move(acc);
  }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum size mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows_; ++i) c.data_[i].axpy(1, b.data_[i]);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference size mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows_; ++i) c.data_[i].axpy(-1, b.data_[i]);
  return c;
}

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix c = a;
  for (auto& r : c.data_) r.scale(s);
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }
Matrix anticommutator(const Matrix& a, const Matrix& b) { return a * b + b * a; }

bool is_nilpotent(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("nilpotency of non-square matrix");
  Matrix p = m;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    if (p.is_zero()) return true;
    p = p * m;
  }
  return p.is_zero();
}

// ---------------------------------------------------------------------------
// Echelon construction

namespace {

// Incremental row echelon form with unit leading entries. finish() turns it
// into the canonical reduced form.
class Echelon {
 public:
  explicit Echelon(std::size_t n) : n_(n), pivot_row_(n, kNone) {}

  bool insert(const SparseVec& v) {
    SparseVec r = reduce_leading(v);
    if (r.empty()) return false;
    Rational inv = 1 / r.entries().front().second;
    r.scale(inv);
    pivot_row_[r.lead()] = rows_.size();
    rows_.push_back(std::move(r));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

  // Full RREF, rows sorted by pivot.
  std::vector<SparseVec> finish() {
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rows_[a].lead() > rows_[b].lead(); });
    // Largest pivot first: that row is already clean of later pivots.
    for (std::size_t idx = 0; idx < order.size(); ++idx) {
      SparseVec& row = rows_[order[idx]];
      Vec scratch;
      bool dirty = false;
      for (const auto& [j, x] : row.entries()) {
        if (j != row.lead() && pivot_row_[j] != kNone) {
          dirty = true;
          break;
        }
      }
      if (!dirty) continue;
      SparseVec cleaned = row;
      for (const auto& [j, x] : row.entries()) {
        if (j == row.lead() || pivot_row_[j] == kNone) continue;
        cleaned.axpy(-x, rows_[pivot_row_[j]]);
      }
      row = std::move(cleaned);
    }
    std::vector<SparseVec> out;
    out.reserve(rows_.size());
    for (auto it = order.rbegin(); it != order.rend(); ++it) out.push_back(std::move(rows_[*it]));
    rows_.clear();
    return out;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  SparseVec reduce_leading(const SparseVec& v) const {
    if (v.max_index_plus_one() > n_) throw DimensionMismatch("vector longer than ambient dimension");
    // Stored rows only have entries at or right of their pivot, so one
    // left-to-right sweep over pivot columns clears them all.
    SparseVec r = v;
    std::size_t from = 0;
    while (true) {
      const auto& e = r.entries();
      auto it = std::lower_bound(e.begin(), e.end(), from, [](const SparseVec::Entry& x, std::size_t i) { return x.first < i; });
      while (it != e.end() && pivot_row_[it->first] == kNone) ++it;
      if (it == e.end()) break;
      std::size_t c = it->first;
      Rational f = it->second;
      r.axpy(-f, rows_[pivot_row_[c]]);
      from = c + 1;
    }
    return r;
  }

  std::size_t n_;
  std::vector<std::size_t> pivot_row_;
  std::vector<SparseVec> rows_;
};

}  // namespace

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<SparseVec>& vectors) {
  Echelon e(ambient_dim);
  for (const auto& v : vectors) {
    if (e.rank() == ambient_dim) break;
    e.insert(v);
  }
  Subspace s(ambient_dim);
  s.rows_ = e.finish();
  s.pivots_.reserve(s.rows_.size());
  for (const auto& r : s.rows_) s.pivots_.push_back(r.lead());
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    s.rows_.push_back(SparseVec::unit(i));
    s.pivots_.push_back(i);
  }
  return s;
}

std::vector<std::size_t> Subspace::complement_coordinates() const {
  std::vector<std::size_t> out;
  std::size_t p = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (p < pivots_.size() && pivots_[p] == c) {
      ++p;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

SparseVec Subspace::reduce(const SparseVec& v) const {
  if (v.max_index_plus_one() > ambient_) throw DimensionMismatch("vector longer than ambient dimension");
  if (rows_.empty() || v.empty()) return v;
  if (is_full()) return {};
  // Rows of a reduced basis vanish on each other's pivots, so the
  // coefficients can be read off v directly.
  SparseVec out = v;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Rational c = v.at(pivots_[k]);
    if (c != 0) out.axpy(-c, rows_[k]);
  }
  return out;
}

bool Subspace::contains(const SparseVec& v) const { return reduce(v).empty(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("subspace ambient mismatch");
  if (other.dim() > dim()) return false;
  return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const SparseVec& r) { return contains(r); });
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("subspace ambient mismatch");
  std::vector<SparseVec> all = rows_;
  all.insert(all.end(), other.rows_.begin(), other.rows_.end());
  return span(ambient_, all);
}

Subspace Subspace::intersection(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("subspace ambient mismatch");
  // Zassenhaus: rows (a, a) and (b, 0); rows with vanishing left half span
  // the intersection in their right half.
  std::vector<SparseVec> rows;
  for (const auto& a : rows_) rows.push_back(a + a.shifted(ambient_));
  for (const auto& b : other.rows_) rows.push_back(b);
  Subspace z = span(2 * ambient_, rows);
  std::vector<SparseVec> inter;
  for (const auto& r : z.rows_) {
    if (r.lead() < ambient_) continue;
    std::vector<SparseVec::Entry> e;
    for (const auto& [i, x] : r.entries()) e.emplace_back(i - ambient_, x);
    inter.emplace_back(std::move(e));
  }
  return span(ambient_, inter);
}

// ---------------------------------------------------------------------------
// Row reduction toolkit

RrefResult rref(const Matrix& m) {
  RrefResult out;
  out.row_space = Subspace::span(m.cols(), m.row_data());
  out.rank = out.row_space.dim();
  const auto& basis = out.row_space.basis();
  const auto& piv = out.row_space.pivots();
  std::vector<SparseVec> null;
  for (std::size_t f : out.row_space.complement_coordinates()) {
    std::vector<SparseVec::Entry> e{{f, Rational(1)}};
    for (std::size_t k = 0; k < basis.size(); ++k) {
      Rational x = basis[k].at(f);
      if (x != 0) e.emplace_back(piv[k], -x);
    }
    null.emplace_back(std::move(e));
  }
  out.null_space = Subspace::span(m.cols(), null);
  return out;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("solve: right-hand side length");
  std::vector<SparseVec> aug;
  aug.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    SparseVec r = a.row(i);
    r.axpy(b[i], SparseVec::unit(a.cols()));
    aug.push_back(std::move(r));
  }
  Subspace s = Subspace::span(a.cols() + 1, aug);
  Vec x(a.cols());
  for (std::size_t k = 0; k < s.dim(); ++k) {
    std::size_t p = s.pivots()[k];
    if (p == a.cols()) return std::nullopt;
    x[p] = s.basis()[k].at(a.cols());
  }
  return x;
}

SubspaceOps subspace_ops(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspace ambient mismatch");
  return {a.sum(b), a.intersection(b), a.contains(b)};
}

Subspace left_kernel(const std::vector<SparseVec>& vectors, std::size_t ambient_dim) {
  std::size_t k = vectors.size();
  std::vector<SparseVec> aug;
  aug.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (vectors[i].max_index_plus_one() > ambient_dim) throw DimensionMismatch("left_kernel: vector too long");
    SparseVec r = vectors[i];
    r.axpy(1, SparseVec::unit(ambient_dim + i));
    aug.push_back(std::move(r));
  }
  Subspace s = Subspace::span(ambient_dim + k, aug);
  std::vector<SparseVec> ker;
  for (const auto& r : s.basis()) {
    if (r.lead() < ambient_dim) continue;
    std::vector<SparseVec::Entry> e;
    for (const auto& [i, x] : r.entries()) e.emplace_back(i - ambient_dim, x);
    ker.emplace_back(std::move(e));
  }
  return Subspace::span(k, ker);
}

Coordinates::Coordinates(const std::vector<SparseVec>& basis, std::size_t ambient_dim)
    : ambient_(ambient_dim), count_(basis.size()) {
  std::vector<SparseVec> aug;
  aug.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    SparseVec r = basis[i];
    r.axpy(1, SparseVec::unit(ambient_dim + i));
    aug.push_back(std::move(r));
  }
  Subspace s = Subspace::span(ambient_dim + count_, aug);
  for (std::size_t k = 0; k < s.dim(); ++k) {
    if (s.pivots()[k] >= ambient_dim) throw Error("Coordinates: basis vectors are linearly dependent");
    rows_.push_back(s.basis()[k]);
    pivots_.push_back(s.pivots()[k]);
  }
}

std::optional<Vec> Coordinates::of(const SparseVec& v) const {
  if (v.max_index_plus_one() > ambient_) throw DimensionMismatch("Coordinates: vector too long");
  SparseVec rest = v;
  Vec c(count_);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Rational x = v.at(pivots_[k]);
    if (x == 0) continue;
    for (const auto& [i, y] : rows_[k].entries()) {
      if (i >= ambient_) c[i - ambient_] += x * y;
    }
    rest.axpy(-x, rows_[k]);
  }
  // Only the left half of the remainder matters.
  for (const auto& [i, y] : rest.entries())
    if (i < ambient_) return std::nullopt;
  return c;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
  std::size_t n = m.rows();
  std::vector<SparseVec> aug;
  for (std::size_t i = 0; i < n; ++i) {
    SparseVec r = m.row(i);
    r.axpy(1, SparseVec::unit(n + i));
    aug.push_back(std::move(r));
  }
  Subspace s = Subspace::span(2 * n, aug);
  if (s.dim() != n || (n > 0 && s.pivots().back() != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<SparseVec::Entry> e;
    for (const auto& [i, x] : s.basis()[k].entries())
      if (i >= n) e.emplace_back(i - n, x);
    inv.set_row(k, SparseVec(std::move(e)));
  }
  return inv;
}

Integer integer_determinant(std::vector<std::vector<Integer>> a) {
  std::size_t n = a.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
  std::size_t n = m.rows();
  // Scale each row to integers, then undo the scaling.
  Rational scale = 1;
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (const auto& [j, x] : m.row(i).entries()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (const auto& [j, x] : m.row(i).entries()) a[i][j] = x.get_num() * (l / x.get_den());
    scale *= Rational(l);
  }
  Rational d(integer_determinant(std::move(a)));
  return d / scale;
}

nlohmann::json to_json(const Matrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& [j, x] : m.row(i).entries()) entries.push_back({i, j, to_string(x)});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Matrix matrix_from_json(const nlohmann::json& j) {
  Matrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  for (const auto& e : j.at("entries")) m.set(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(), parse_rational(e.at(2).get<std::string>()));
  return m;
}

}  // namespace poincare
