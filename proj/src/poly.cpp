#include "cubicmcm/poly.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "cubicmcm/error.hpp"

namespace cubicmcm {

std::uint64_t total_degree(const Exponent& e) {
  std::uint64_t sum = 0;
  for (auto v : e) sum += v;
  return sum;
}

bool GrlexDescending::operator()(const Exponent& a, const Exponent& b) const {
  const auto da = total_degree(a);
  const auto db = total_degree(b);
  if (da != db) return da > db;
  return b < a;  // lexicographically larger first
}

std::vector<std::string> default_variable_names(std::size_t nvars) {
  if (nvars == 6) return {"x0", "x1", "x2", "a0", "a1", "a2"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

MultiPoly MultiPoly::constant(const Field& field, std::size_t nvars, const Scalar& c) {
  MultiPoly p(field, nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(const Field& field, std::size_t nvars, std::size_t index) {
  if (index >= nvars) fail(ErrorKind::ArityMismatch, "variable index out of range");
  Exponent e(nvars, 0);
  e[index] = 1;
  return monomial(field, e, Scalar::one(field));
}

MultiPoly MultiPoly::monomial(const Field& field, const Exponent& e, const Scalar& c) {
  MultiPoly p(field, e.size());
  p.add_term(e, c);
  return p;
}

Scalar MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Scalar& c) {
  if (e.size() != nvars_) fail(ErrorKind::ArityMismatch, "exponent length does not match variable count");
  if (!(c.field() == field_)) fail(ErrorKind::FieldMismatch, "coefficient from another field");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<int> MultiPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return static_cast<int>(total_degree(terms_.begin()->first));
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto d = total_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_) {
    if (total_degree(e) != d) return false;
  }
  return true;
}

bool MultiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && degree() == 0); }

Scalar MultiPoly::eval(std::span<const Scalar> point) const {
  if (point.size() != nvars_) fail(ErrorKind::ArityMismatch, "evaluation point has the wrong arity");
  for (const auto& s : point) {
    if (!(s.field() == field_)) fail(ErrorKind::FieldMismatch, "evaluation point from another field");
  }
  Scalar sum = Scalar::zero(field_);
  for (const auto& [e, c] : terms_) {
    Scalar term = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] != 0) term *= point[i].pow(e[i]);
    }
    sum += term;
  }
  return sum;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> values) const {
  if (values.size() != nvars_) fail(ErrorKind::ArityMismatch, "substitution needs one value per variable");
  if (values.empty()) {
    // constant polynomial in zero variables
    return *this;
  }
  const Field& f = values[0].field();
  const std::size_t n = values[0].nvars();
  for (const auto& v : values) {
    if (!(v.field() == f) || v.nvars() != n) fail(ErrorKind::ArityMismatch, "substituted values live in different rings");
  }
  if (!(f == field_)) fail(ErrorKind::FieldMismatch, "substitution into another field");
  MultiPoly out(f, n);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = constant(f, n, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] != 0) term = term * values[i].pow(e[i]);
    }
    out += term;
  }
  return out;
}

void MultiPoly::require_compatible(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) fail(ErrorKind::ArityMismatch, "polynomials in different numbers of variables");
  if (!(field_ == o.field_)) fail(ErrorKind::FieldMismatch, "polynomials over different fields");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly out = *this;
  out += o;
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly out = *this;
  out -= o;
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  require_compatible(o);
  MultiPoly out(field_, nvars_);
  Exponent e(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::operator*(const Scalar& c) const {
  if (!(c.field() == field_)) fail(ErrorKind::FieldMismatch, "scalar from another field");
  MultiPoly out(field_, nvars_);
  if (c.is_zero()) return out;
  for (const auto& [e, coef] : terms_) out.terms_.emplace(e, coef * c);
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(field_, nvars_, Scalar::one(field_));
  MultiPoly base = *this;
  while (e != 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names_in) const {
  const std::vector<std::string> names = names_in.empty() ? default_variable_names(nvars_) : names_in;
  if (names.size() != nvars_) fail(ErrorKind::ArityMismatch, "wrong number of variable names");
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string coef = c.to_string();
    bool negative = false;
    if (field_.is_rational() && coef[0] == '-') {
      negative = true;
      coef.erase(0, 1);
    }
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool is_const = total_degree(e) == 0;
    bool need_star = false;
    if (is_const || coef != "1") {
      os << coef;
      need_star = true;
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << names[i];
      if (e[i] != 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

// ---------------------------------------------------------------------------
// Recursive-descent parser for the canonical text form (and a bit more).

namespace {

class PolyParser {
 public:
  PolyParser(const Field& field, const std::vector<std::string>& names, std::string_view text)
      : field_(field), names_(names), text_(text) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const { throw ParseError(msg, 1, pos_ + 1); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) error("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  MultiPoly expr() {
    MultiPoly out(field_, names_.size());
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    MultiPoly t = term();
    out = negate ? -t : t;
    while (true) {
      if (accept('+')) {
        out += term();
      } else if (accept('-')) {
        out -= term();
      } else {
        break;
      }
    }
    return out;
  }

  MultiPoly term() {
    MultiPoly out = power();
    while (true) {
      if (accept('*')) {
        out = out * power();
      } else if (accept('/')) {
        const Scalar d = Scalar::parse(field_, digits());
        if (d.is_zero()) error("division by zero");
        out = out * d.inverse();
      } else {
        break;
      }
    }
    return out;
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (accept('^')) {
      const std::string e = digits();
      if (e.size() > 4) error("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(e)));
    }
    return base;
  }

  MultiPoly atom() {
    skip_ws();
    if (pos_ >= text_.size()) error("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) error("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return MultiPoly::constant(field_, names_.size(), Scalar::parse(field_, digits()));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return MultiPoly::variable(field_, names_.size(), i);
      }
      pos_ = start;
      error("unknown variable '" + name + "'");
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  const Field& field_;
  const std::vector<std::string>& names_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(const Field& field, const std::vector<std::string>& names, std::string_view text) {
  return PolyParser(field, names, text).parse();
}

}  // namespace cubicmcm
