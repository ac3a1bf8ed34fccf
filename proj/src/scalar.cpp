#include "cubicmcm/scalar.hpp"

#include <algorithm>
#include <ostream>

#include "cubicmcm/error.hpp"

namespace cubicmcm {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(u128(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e != 0) {
    if (e & 1u) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return result;
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1u) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic for all 64-bit n
  for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t(1) << 62)) fail(ErrorKind::InvalidField, "modulus too large");
  if (!is_prime(p)) fail(ErrorKind::InvalidField, std::to_string(p) + " is not prime");
  if (p == 3) fail(ErrorKind::InvalidField, "characteristic 3 is not supported (the Hesse form needs 3 invertible)");
  return Field(p);
}

Field Field::parse(const std::string& text) {
  if (text == "q" || text == "Q" || text == "rational") return rational();
  for (const std::string prefix : {"fp:", "prime:"}) {
    if (text.rfind(prefix, 0) == 0) {
      const std::string digits = text.substr(prefix.size());
      if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }) ||
          digits.size() > 19) {
        fail(ErrorKind::InvalidField, "bad modulus in field '" + text + "'");
      }
      return prime(std::stoull(digits));
    }
  }
  fail(ErrorKind::InvalidField, "unknown field '" + text + "' (expected q or fp:P)");
}

std::string Field::descriptor() const {
  return is_rational() ? "rational" : "prime:" + std::to_string(p_);
}

// ---------------------------------------------------------------------------

Scalar::Scalar(const Field& field, std::int64_t value) : field_(field) {
  if (field.is_rational()) {
    value_ = mpq_class(mpz_class(static_cast<long>(value)));
  } else {
    const std::int64_t p = static_cast<std::int64_t>(field.modulus());
    std::int64_t r = value % p;
    if (r < 0) r += p;
    value_ = static_cast<std::uint64_t>(r);
  }
}

Scalar::Scalar(const mpq_class& value) : field_(Field::rational()), value_(value) {
  std::get<mpq_class>(value_).canonicalize();
}

Scalar Scalar::parse(const Field& field, const std::string& text) {
  std::string t = text;
  t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }), t.end());
  const auto slash = t.find('/');
  const std::string num = t.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  auto valid_int = [](const std::string& s, bool allow_sign) {
    std::size_t start = (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start >= s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                       [](unsigned char c) { return std::isdigit(c); });
  };
  if (!valid_int(num, true) || !valid_int(den, false)) throw ParseError("malformed scalar '" + text + "'");
  mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw ParseError("zero denominator in '" + text + "'");
  if (field.is_rational()) return Scalar(mpq_class(n, d));
  Scalar out = zero(field);
  out.value_ = reduce_mpz(n, field.modulus());
  Scalar dd = zero(field);
  dd.value_ = reduce_mpz(d, field.modulus());
  if (dd.is_zero()) throw ParseError("denominator vanishes mod " + std::to_string(field.modulus()));
  return out / dd;
}

bool Scalar::is_zero() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_) == 0;
  return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_) == 1;
  return std::get<std::uint64_t>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) fail(ErrorKind::FieldMismatch, "not a rational scalar");
  return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rational()) fail(ErrorKind::FieldMismatch, "not a prime-field scalar");
  return std::get<std::uint64_t>(value_);
}

void Scalar::require_same_field(const Scalar& o) const {
  if (!(field_ == o.field_)) {
    fail(ErrorKind::FieldMismatch, "scalars over " + field_.descriptor() + " and " + o.field_.descriptor());
  }
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (field_.is_rational()) {
    std::get<mpq_class>(out.value_) = -std::get<mpq_class>(value_);
  } else {
    const std::uint64_t v = std::get<std::uint64_t>(value_);
    out.value_ = v == 0 ? 0 : field_.modulus() - v;
  }
  return out;
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(o);
  Scalar out = *this;
  if (field_.is_rational()) {
    std::get<mpq_class>(out.value_) = std::get<mpq_class>(value_) + std::get<mpq_class>(o.value_);
  } else {
    const std::uint64_t p = field_.modulus();
    const std::uint64_t s = std::get<std::uint64_t>(value_) + std::get<std::uint64_t>(o.value_);
    out.value_ = s >= p ? s - p : s;
  }
  return out;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(o);
  Scalar out = *this;
  if (field_.is_rational()) {
    std::get<mpq_class>(out.value_) = std::get<mpq_class>(value_) * std::get<mpq_class>(o.value_);
  } else {
    out.value_ = mulmod(std::get<std::uint64_t>(value_), std::get<std::uint64_t>(o.value_), field_.modulus());
  }
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
  Scalar out = *this;
  if (field_.is_rational()) {
    std::get<mpq_class>(out.value_) = 1 / std::get<mpq_class>(value_);
  } else {
    const std::uint64_t p = field_.modulus();
    out.value_ = powmod(std::get<std::uint64_t>(value_), p - 2, p);
  }
  return out;
}

Scalar Scalar::operator/(const Scalar& o) const {
  require_same_field(o);
  return *this * o.inverse();
}

Scalar Scalar::pow(unsigned e) const {
  Scalar result = one(field_);
  Scalar base = *this;
  while (e != 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<std::uint64_t>(value_));
}

std::string Scalar::to_document_string() const {
  if (!field_.is_rational()) return to_string();
  const mpq_class& q = std::get<mpq_class>(value_);
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace cubicmcm
