#include "cubicmcm/poly_matrix.hpp"

#include <bit>
#include <deque>
#include <limits>
#include <sstream>

#include "cubicmcm/error.hpp"

namespace cubicmcm {

PolyMatrix::PolyMatrix(const Field& field, std::size_t nvars, std::size_t rows, std::size_t cols)
    : field_(field), nvars_(nvars), rows_(rows), cols_(cols), entries_(rows * cols, MultiPoly(field, nvars)) {}

PolyMatrix PolyMatrix::from_rows(const std::vector<std::vector<MultiPoly>>& rows) {
  if (rows.empty() || rows.front().empty()) fail(ErrorKind::DimensionMismatch, "empty matrix literal");
  const MultiPoly& first = rows.front().front();
  PolyMatrix m(first.field(), first.nvars(), rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) fail(ErrorKind::DimensionMismatch, "ragged matrix literal");
    for (std::size_t c = 0; c < m.cols_; ++c) {
      const MultiPoly& p = rows[r][c];
      if (p.nvars() != m.nvars_) fail(ErrorKind::ArityMismatch, "matrix entries in different rings");
      if (!(p.field() == m.field_)) fail(ErrorKind::FieldMismatch, "matrix entries over different fields");
      m.entries_[r * m.cols_ + c] = p;
    }
  }
  return m;
}

PolyMatrix PolyMatrix::identity(const Field& field, std::size_t nvars, std::size_t n) {
  return scalar(MultiPoly::constant(field, nvars, 1), n);
}

PolyMatrix PolyMatrix::scalar(const MultiPoly& p, std::size_t n) {
  PolyMatrix m(p.field(), p.nvars(), n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = p;
  return m;
}

MultiPoly& PolyMatrix::at(std::size_t r, std::size_t c) {
  if (r >= rows_ || c >= cols_) fail(ErrorKind::DimensionMismatch, "matrix index out of range");
  grading_.reset();
  return entries_[r * cols_ + c];
}

bool PolyMatrix::grading_consistent(const Grading& g) const {
  if (g.row_degrees.size() != rows_ || g.col_degrees.size() != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const MultiPoly& p = (*this)(r, c);
      if (p.is_zero()) continue;
      if (!p.is_homogeneous()) return false;
      if (*p.degree() != g.col_degrees[c] - g.row_degrees[r]) return false;
    }
  }
  return true;
}

void PolyMatrix::set_grading(const Grading& g) {
  if (g.row_degrees.size() != rows_ || g.col_degrees.size() != cols_) {
    fail(ErrorKind::DimensionMismatch, "degree vectors do not match the matrix shape");
  }
  for (const auto& p : entries_) {
    if (!p.is_homogeneous()) fail(ErrorKind::NotHomogeneous, "entry " + p.to_string() + " is not homogeneous");
  }
  if (!grading_consistent(g)) fail(ErrorKind::Inconsistent, "entry degrees contradict the degree vectors");
  grading_ = g;
}

void PolyMatrix::require_compatible(const PolyMatrix& o) const {
  if (nvars_ != o.nvars_) fail(ErrorKind::ArityMismatch, "matrices over rings with different variable counts");
  if (!(field_ == o.field_)) fail(ErrorKind::FieldMismatch, "matrices over different fields");
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  require_compatible(o);
  if (cols_ != o.rows_) {
    fail(ErrorKind::DimensionMismatch, "cannot multiply " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                                           " by " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  }
  PolyMatrix out(field_, nvars_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < o.cols_; ++c) {
      MultiPoly sum(field_, nvars_);
      for (std::size_t k = 0; k < cols_; ++k) {
        const MultiPoly& a = (*this)(r, k);
        const MultiPoly& b = o(k, c);
        if (a.is_zero() || b.is_zero()) continue;
        sum += a * b;
      }
      out.entries_[r * o.cols_ + c] = std::move(sum);
    }
  }
  // the composite of graded maps is graded when the middle modules agree
  if (grading_ && o.grading_ && o.grading_->row_degrees == grading_->col_degrees) {
    Grading g{grading_->row_degrees, o.grading_->col_degrees};
    if (out.grading_consistent(g)) out.grading_ = g;
  }
  return out;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  require_compatible(o);
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorKind::DimensionMismatch, "matrix sum shape mismatch");
  PolyMatrix out(field_, nvars_, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + o.entries_[i];
  return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const { return *this + (-o); }

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix out = *this;
  for (auto& p : out.entries_) p = -p;
  return out;
}

PolyMatrix PolyMatrix::operator*(const MultiPoly& p) const {
  PolyMatrix out(field_, nvars_, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] * p;
  return out;
}

PolyMatrix PolyMatrix::operator*(const Scalar& c) const {
  PolyMatrix out = *this;
  for (auto& p : out.entries_) p = p * c;
  if (c.is_zero()) out.grading_.reset();
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix out(field_, nvars_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.entries_[c * rows_ + r] = (*this)(r, c);
  }
  return out;
}

PolyMatrix PolyMatrix::minor(std::size_t row, std::size_t col) const {
  if (rows_ == 0 || cols_ == 0 || row >= rows_ || col >= cols_) {
    fail(ErrorKind::DimensionMismatch, "minor index out of range");
  }
  PolyMatrix out(field_, nvars_, rows_ - 1, cols_ - 1);
  std::size_t rr = 0;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r == row) continue;
    std::size_t cc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c == col) continue;
      out.entries_[rr * out.cols_ + cc] = (*this)(r, c);
      ++cc;
    }
    ++rr;
  }
  return out;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : entries_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.entries_ == b.entries_;
}

std::string PolyMatrix::to_string(const std::vector<std::string>& names) const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r == 0 ? "[" : " [");
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c != 0) os << ", ";
      os << (*this)(r, c).to_string(names);
    }
    os << "]";
    if (r + 1 != rows_) os << "\n";
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------

MultiPoly determinant(const PolyMatrix& m) {
  if (!m.is_square()) fail(ErrorKind::NotSquare, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return MultiPoly::constant(m.field(), m.nvars(), 1);
  if (n > 16) fail(ErrorKind::DimensionMismatch, "determinant supports at most 16 x 16 matrices");
  // minors[mask]: determinant of the first popcount(mask) rows restricted to the columns in mask
  std::vector<std::optional<MultiPoly>> minors(std::size_t(1) << n);
  minors[0] = MultiPoly::constant(m.field(), m.nvars(), 1);
  for (std::size_t row = 0; row < n; ++row) {
    std::vector<std::optional<MultiPoly>> next(minors.size());
    for (std::size_t mask = 0; mask < minors.size(); ++mask) {
      if (!minors[mask] || static_cast<std::size_t>(std::popcount(mask)) != row) continue;
      if (minors[mask]->is_zero()) continue;
      for (std::size_t col = 0; col < n; ++col) {
        const std::size_t bit = std::size_t(1) << col;
        if ((mask & bit) != 0) continue;
        const MultiPoly& entry = m(row, col);
        if (entry.is_zero()) continue;
        // expansion along the last row: sign (-1)^(row + position of col among the chosen columns)
        const auto position = static_cast<std::size_t>(std::popcount(mask & (bit - 1)));
        MultiPoly term = entry * *minors[mask];
        if ((row + position) % 2 == 1) term = -term;
        auto& slot = next[mask | bit];
        if (slot) {
          *slot += term;
        } else {
          slot = std::move(term);
        }
      }
    }
    minors = std::move(next);
  }
  const auto& full = minors.back();
  return full ? *full : MultiPoly(m.field(), m.nvars());
}

PolyMatrix adjugate(const PolyMatrix& m) {
  if (!m.is_square()) fail(ErrorKind::NotSquare, "adjugate of a non-square matrix");
  const std::size_t n = m.rows();
  PolyMatrix out(m.field(), m.nvars(), n, n);
  if (n == 0) return out;
  if (n == 1) {
    out.at(0, 0) = MultiPoly::constant(m.field(), m.nvars(), 1);
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      MultiPoly cof = determinant(m.minor(j, i));
      out.at(i, j) = (i + j) % 2 == 0 ? cof : -cof;
    }
  }
  return out;
}

std::vector<Scalar> solve_linear(const Field& field, const std::vector<std::vector<Scalar>>& a,
                                 const std::vector<Scalar>& b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) fail(ErrorKind::DimensionMismatch, "right-hand side length differs from row count");
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  std::vector<std::vector<Scalar>> aug(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    if (a[r].size() != cols) fail(ErrorKind::DimensionMismatch, "ragged coefficient matrix");
    aug[r] = a[r];
    aug[r].push_back(b[r]);
    for (const auto& s : aug[r]) {
      if (!(s.field() == field)) fail(ErrorKind::FieldMismatch, "linear system over another field");
    }
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t prow = 0;
  for (std::size_t c = 0; c < cols && prow < rows; ++c) {
    std::size_t found = rows;
    for (std::size_t r = prow; r < rows; ++r) {
      if (!aug[r][c].is_zero()) {
        found = r;
        break;
      }
    }
    if (found == rows) continue;
    std::swap(aug[prow], aug[found]);
    const Scalar inv = aug[prow][c].inverse();
    for (auto& s : aug[prow]) s *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == prow || aug[r][c].is_zero()) continue;
      const Scalar factor = aug[r][c];
      for (std::size_t k = c; k <= cols; ++k) aug[r][k] -= factor * aug[prow][k];
    }
    pivot_cols.push_back(c);
    ++prow;
  }
  for (std::size_t r = prow; r < rows; ++r) {
    if (!aug[r][cols].is_zero()) fail(ErrorKind::NoSolution, "inconsistent linear system");
  }
  std::vector<Scalar> x(cols, Scalar::zero(field));
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = aug[i][cols];
  return x;
}

namespace detail {

std::optional<std::vector<std::int64_t>> solve_degree_constraints(std::size_t nodes,
                                                                  const std::vector<DegreeConstraint>& edges,
                                                                  const std::vector<bool>& anchor) {
  struct Arc {
    std::size_t to;
    std::int64_t diff;
  };
  std::vector<std::vector<Arc>> adj(nodes);
  for (const auto& e : edges) {
    adj[e.from].push_back({e.to, e.diff});
    adj[e.to].push_back({e.from, -e.diff});
  }
  std::vector<std::optional<std::int64_t>> pot(nodes);
  for (std::size_t start = 0; start < nodes; ++start) {
    if (pot[start]) continue;
    std::vector<std::size_t> component{start};
    pot[start] = 0;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (const Arc& arc : adj[u]) {
        const std::int64_t want = *pot[u] + arc.diff;
        if (!pot[arc.to]) {
          pot[arc.to] = want;
          component.push_back(arc.to);
          queue.push_back(arc.to);
        } else if (*pot[arc.to] != want) {
          return std::nullopt;
        }
      }
    }
    bool has_anchor = false;
    std::int64_t low = std::numeric_limits<std::int64_t>::max();
    for (std::size_t v : component) {
      if (v < anchor.size() && anchor[v]) {
        if (!has_anchor) low = std::numeric_limits<std::int64_t>::max();
        has_anchor = true;
        low = std::min(low, *pot[v]);
      } else if (!has_anchor) {
        low = std::min(low, *pot[v]);
      }
    }
    for (std::size_t v : component) *pot[v] -= low;
  }
  std::vector<std::int64_t> out(nodes);
  for (std::size_t i = 0; i < nodes; ++i) out[i] = *pot[i];
  return out;
}

}  // namespace detail

Grading grading_infer(const PolyMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<detail::DegreeConstraint> edges;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const MultiPoly& p = m(r, c);
      if (p.is_zero()) continue;
      if (!p.is_homogeneous()) {
        fail(ErrorKind::NotHomogeneous, "entry (" + std::to_string(r) + "," + std::to_string(c) + ") = " +
                                            p.to_string() + " is not homogeneous");
      }
      edges.push_back({r, rows + c, *p.degree()});
    }
  }
  std::vector<bool> anchor(rows + cols, false);
  for (std::size_t r = 0; r < rows; ++r) anchor[r] = true;
  const auto pot = detail::solve_degree_constraints(rows + cols, edges, anchor);
  if (!pot) fail(ErrorKind::Inconsistent, "entry degrees admit no consistent grading");
  Grading g;
  g.row_degrees.assign(pot->begin(), pot->begin() + static_cast<std::ptrdiff_t>(rows));
  g.col_degrees.assign(pot->begin() + static_cast<std::ptrdiff_t>(rows), pot->end());
  return g;
}

}  // namespace cubicmcm
