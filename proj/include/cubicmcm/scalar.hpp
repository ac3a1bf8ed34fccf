#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

namespace cubicmcm {

/// Coefficient field: Q or F_p for a prime p != 3.
class Field {
 public:
  static Field rational() { return Field(0); }
  /// Throws Error(InvalidField) unless p is a prime other than 3 and below 2^62.
  static Field prime(std::uint64_t p);
  /// "q", "rational", "fp:P" or "prime:P".
  static Field parse(const std::string& text);

  bool is_rational() const noexcept { return p_ == 0; }
  /// 0 for Q.
  std::uint64_t modulus() const noexcept { return p_; }

  /// Document form: "rational" or "prime:P".
  std::string descriptor() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

/// Exact element of a Field. Rationals are kept in lowest terms with a
/// positive denominator, residues in [0, p).
class Scalar {
 public:
  Scalar() : field_(Field::rational()), value_(mpq_class(0)) {}
  Scalar(const Field& field, std::int64_t value);
  /// Rational scalar.
  explicit Scalar(const mpq_class& value);

  static Scalar zero(const Field& field) { return Scalar(field, 0); }
  static Scalar one(const Field& field) { return Scalar(field, 1); }
  /// Accepts "n", "n/d" (either sign on n). For F_p the value is reduced mod p.
  static Scalar parse(const Field& field, const std::string& text);

  const Field& field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rational() const;
  std::uint64_t residue() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inverse() const;
  Scalar pow(unsigned e) const;

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Shortest form: "3", "-1/2"; residues as "0".."p-1".
  std::string to_string() const;
  /// Document form: rationals always as "num/den".
  std::string to_document_string() const;

 private:
  void require_same_field(const Scalar& o) const;

  Field field_;
  std::variant<mpq_class, std::uint64_t> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace cubicmcm
