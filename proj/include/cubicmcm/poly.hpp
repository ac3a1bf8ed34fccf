#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cubicmcm/scalar.hpp"

namespace cubicmcm {

using Exponent = std::vector<std::uint32_t>;

/// Graded lexicographic order with x0 > x1 > ...; sorts larger monomials first.
struct GrlexDescending {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

std::uint64_t total_degree(const Exponent& e);

/// Names used for printing: x0, x1, x2 for three variables, then a0, a1, a2
/// for the six-variable ring of symbolic points; x0..x{n-1} otherwise.
std::vector<std::string> default_variable_names(std::size_t nvars);

/// Sparse polynomial over a Field in a fixed number of variables.
/// No zero coefficients are stored; terms iterate in canonical grlex order.
class MultiPoly {
 public:
  using TermMap = std::map<Exponent, Scalar, GrlexDescending>;

  MultiPoly(const Field& field, std::size_t nvars) : field_(field), nvars_(nvars) {}

  static MultiPoly constant(const Field& field, std::size_t nvars, const Scalar& c);
  static MultiPoly constant(const Field& field, std::size_t nvars, std::int64_t c) {
    return constant(field, nvars, Scalar(field, c));
  }
  static MultiPoly variable(const Field& field, std::size_t nvars, std::size_t index);
  static MultiPoly monomial(const Field& field, const Exponent& e, const Scalar& c);

  /// Parses e.g. "x0^3 + x1^3 - 3/2*x0*x1*x2"; parentheses and integer powers allowed.
  static MultiPoly parse(const Field& field, const std::vector<std::string>& names, std::string_view text);

  const Field& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t num_terms() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }

  Scalar coefficient(const Exponent& e) const;
  /// Adds c * x^e to this polynomial.
  void add_term(const Exponent& e, const Scalar& c);

  /// Total degree; nullopt stands for the degree of the zero polynomial (minus infinity).
  std::optional<int> degree() const;
  bool is_homogeneous() const;
  bool is_constant() const;

  Scalar eval(std::span<const Scalar> point) const;
  /// Replaces variable i by values[i]; all values share a ring.
  MultiPoly substitute(std::span<const MultiPoly> values) const;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Scalar& c) const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly pow(unsigned e) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// Canonical text form, terms in descending grlex order.
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void require_compatible(const MultiPoly& o) const;

  Field field_;
  std::size_t nvars_;
  TermMap terms_;
};

inline MultiPoly operator*(const Scalar& c, const MultiPoly& p) { return p * c; }

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

}  // namespace cubicmcm
