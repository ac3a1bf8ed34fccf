#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubicmcm/poly.hpp"

namespace cubicmcm {

/// Row and column degrees of a graded map of free modules
/// (+)_j S(-col_j) -> (+)_i S(-row_i): entry (i,j) has degree col_j - row_i.
struct Grading {
  std::vector<std::int64_t> row_degrees;
  std::vector<std::int64_t> col_degrees;
  friend bool operator==(const Grading&, const Grading&) = default;
};

/// Dense matrix of MultiPoly over a common ring, with optional grading data.
class PolyMatrix {
 public:
  PolyMatrix(const Field& field, std::size_t nvars, std::size_t rows, std::size_t cols);
  /// All rows must have equal length and at least one entry overall.
  static PolyMatrix from_rows(const std::vector<std::vector<MultiPoly>>& rows);
  static PolyMatrix identity(const Field& field, std::size_t nvars, std::size_t n);
  /// p times the n x n identity.
  static PolyMatrix scalar(const MultiPoly& p, std::size_t n);

  const Field& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const MultiPoly& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  /// Mutable access drops any attached grading.
  MultiPoly& at(std::size_t r, std::size_t c);

  const std::optional<Grading>& grading() const noexcept { return grading_; }
  /// Validates every nonzero entry against the degree vectors.
  /// Throws Error(Inconsistent) or Error(NotHomogeneous).
  void set_grading(const Grading& g);
  void clear_grading() { grading_.reset(); }
  bool grading_consistent(const Grading& g) const;

  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix operator-(const PolyMatrix& o) const;
  PolyMatrix operator-() const;
  PolyMatrix operator*(const MultiPoly& p) const;
  PolyMatrix operator*(const Scalar& c) const;
  PolyMatrix transpose() const;
  /// Deletes row r and column c.
  PolyMatrix minor(std::size_t r, std::size_t c) const;

  bool is_zero() const;

  /// Compares entries only; grading is metadata.
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void require_compatible(const PolyMatrix& o) const;

  Field field_;
  std::size_t nvars_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<MultiPoly> entries_;
  std::optional<Grading> grading_;
};

/// Exact determinant by Laplace expansion over column subsets; no division.
MultiPoly determinant(const PolyMatrix& m);

/// Transpose of the cofactor matrix: m * adj(m) = adj(m) * m = det(m) * I.
PolyMatrix adjugate(const PolyMatrix& m);

/// One solution of a x = b over the field; free variables are set to zero
/// and pivots are the first nonzero entries in row-major order.
/// Throws Error(NoSolution) when the system is inconsistent.
std::vector<Scalar> solve_linear(const Field& field, const std::vector<std::vector<Scalar>>& a,
                                 const std::vector<Scalar>& b);

/// Recovers row/column degrees from the entry degrees. Each connected
/// component of the row/column incidence graph is anchored so its smallest
/// row degree is 0 (a component without rows anchors its smallest column).
/// Throws Error(NotHomogeneous) or Error(Inconsistent).
Grading grading_infer(const PolyMatrix& m);

namespace detail {

/// potential[to] - potential[from] = diff
struct DegreeConstraint {
  std::size_t from;
  std::size_t to;
  std::int64_t diff;
};

/// Solves difference constraints by propagation; every component is shifted
/// so the minimum over its `anchor` nodes (or over all its nodes if it has
/// none) is zero. Returns nullopt on conflicting constraints.
std::optional<std::vector<std::int64_t>> solve_degree_constraints(std::size_t nodes,
                                                                  const std::vector<DegreeConstraint>& edges,
                                                                  const std::vector<bool>& anchor);

}  // namespace detail

}  // namespace cubicmcm
