#include "cubicmcm/charge_lattice.hpp"

#include <ostream>

#include "checked_int.hpp"
#include "cubicmcm/error.hpp"

namespace cubicmcm {

Charge Charge::operator-() const { return {checked_neg(r), checked_neg(d)}; }

std::string to_string(const Charge& c) {
  return "(" + std::to_string(c.r) + "," + std::to_string(c.d) + ")";
}

std::ostream& operator<<(std::ostream& os, const Charge& c) { return os << to_string(c); }

LatticeAuto::LatticeAuto(std::int64_t m00, std::int64_t m01, std::int64_t m10, std::int64_t m11)
    : m00_(m00), m01_(m01), m10_(m10), m11_(m11) {
  if (determinant() != 1) {
    fail(ErrorKind::InvalidDescriptor, "lattice automorphism must have determinant 1");
  }
}

std::int64_t LatticeAuto::determinant() const {
  return checked_sub(checked_mul(m00_, m11_), checked_mul(m01_, m10_));
}

LatticeAuto LatticeAuto::operator*(const LatticeAuto& o) const {
  return {checked_add(checked_mul(m00_, o.m00_), checked_mul(m01_, o.m10_)),
          checked_add(checked_mul(m00_, o.m01_), checked_mul(m01_, o.m11_)),
          checked_add(checked_mul(m10_, o.m00_), checked_mul(m11_, o.m10_)),
          checked_add(checked_mul(m10_, o.m01_), checked_mul(m11_, o.m11_))};
}

LatticeAuto LatticeAuto::operator-() const {
  return {checked_neg(m00_), checked_neg(m01_), checked_neg(m10_), checked_neg(m11_)};
}

LatticeAuto LatticeAuto::inverse() const {
  return {m11_, checked_neg(m01_), checked_neg(m10_), m00_};
}

LatticeAuto LatticeAuto::pow(std::int64_t k) const {
  LatticeAuto base = k < 0 ? inverse() : *this;
  // |k| without overflowing on INT64_MIN
  std::uint64_t e = k < 0 ? std::uint64_t(-(k + 1)) + 1 : std::uint64_t(k);
  LatticeAuto result = identity();
  while (e != 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

std::int64_t euler_form(const Charge& c1, const Charge& c2) {
  return checked_sub(checked_mul(c1.r, c2.d), checked_mul(c1.d, c2.r));
}

Charge apply_auto(const LatticeAuto& m, const Charge& c) {
  return {checked_add(checked_mul(m.m00(), c.r), checked_mul(m.m01(), c.d)),
          checked_add(checked_mul(m.m10(), c.r), checked_mul(m.m11(), c.d))};
}

Charge sigma_power(std::int64_t k, const Charge& c) {
  const std::int64_t e = ((k % 3) + 3) % 3;
  Charge out = c;
  for (std::int64_t i = 0; i < e; ++i) out = apply_auto(LatticeAuto::sigma(), out);
  return out;
}

bool in_domain3(const Charge& c) { return c.r > 0 && c.d >= 0 && __int128(c.d) < 3 * __int128(c.r); }

bool in_domain6(const Charge& c) {
  return c.r > 0 && c.d >= 0 && 2 * __int128(c.d) < 3 * __int128(c.r);
}

namespace {

void check_domain_bounds(const Charge& c) {
  // 3r and 2d must be representable in domain tests
  constexpr std::int64_t kLimit = std::int64_t(1) << 60;
  if (c.r > kLimit || c.r < -kLimit || c.d > kLimit || c.d < -kLimit) {
    fail(ErrorKind::Overflow, "charge " + to_string(c) + " too large");
  }
}

}  // namespace

Reduction reduce3(const Charge& c) {
  if (c.is_zero()) fail(ErrorKind::ZeroCharge, "the zero charge has no fundamental-domain representative");
  check_domain_bounds(c);
  Reduction found;
  int hits = 0;
  Charge image = c;
  for (int k = 0; k < 3; ++k) {
    if (in_domain3(image)) {
      found = {k, image};
      ++hits;
    }
    image = apply_auto(LatticeAuto::sigma(), image);
  }
  CUBICMCM_ASSERT(hits == 1, "orbit of " + to_string(c) + " meets the order-3 domain " +
                                 std::to_string(hits) + " times");
  return found;
}

Reduction reduce6(const Charge& c) {
  if (c.is_zero()) fail(ErrorKind::ZeroCharge, "the zero charge has no fundamental-domain representative");
  check_domain_bounds(c);
  const LatticeAuto gen = -LatticeAuto::sigma();
  Reduction found;
  int hits = 0;
  Charge image = c;
  for (int k = 0; k < 6; ++k) {
    if (in_domain6(image)) {
      found = {k, image};
      ++hits;
    }
    image = apply_auto(gen, image);
  }
  CUBICMCM_ASSERT(hits == 1, "orbit of " + to_string(c) + " meets the order-6 domain " +
                                 std::to_string(hits) + " times");
  return found;
}

bool is_sheaf_charge(const Charge& c) { return c.r > 0 || (c.r == 0 && c.d > 0); }

Charge ShiftedSheaf::charge() const { return (shift % 2 == 0) ? sheaf : -sheaf; }

ShiftedSheaf natural_representative(const Charge& c) {
  if (c.is_zero()) fail(ErrorKind::ZeroCharge, "the zero charge has no representative object");
  if (is_sheaf_charge(c)) return {c, 0};
  return {-c, 1};
}

namespace {

// Phases of sheaves lie in (0,1]; phase(g1) < phase(g2) iff <g1,g2> > 0.
// sigma raises the phase by an amount in (0,2).
ShiftedSheaf sigma_step(const ShiftedSheaf& x) {
  const Charge v = apply_auto(LatticeAuto::sigma(), x.sheaf);
  if (!is_sheaf_charge(v)) return {-v, checked_add(x.shift, 1)};
  const std::int64_t ef = euler_form(x.sheaf, v);
  CUBICMCM_ASSERT(ef != 0, "sigma fixed a ray");
  return {v, ef > 0 ? x.shift : checked_add(x.shift, 2)};
}

}  // namespace

ShiftedSheaf apply_sigma(const ShiftedSheaf& x, std::int64_t k) {
  if (!is_sheaf_charge(x.sheaf)) {
    fail(ErrorKind::InvalidDescriptor, "sheaf charge " + to_string(x.sheaf) + " is not effective");
  }
  // sigma^3 = [2]
  const std::int64_t q = k >= 0 ? k / 3 : -((-k + 2) / 3);
  const std::int64_t rem = k - 3 * q;
  ShiftedSheaf out{x.sheaf, checked_add(x.shift, checked_mul(2, q))};
  for (std::int64_t i = 0; i < rem; ++i) out = sigma_step(out);
  return out;
}

OrbitEntry orbit_V(std::int64_t j) {
  static constexpr OrbitEntry kBase[3] = {{{1, 0}, 1}, {{1, 3}, 1}, {{2, 3}, 2}};
  const std::int64_t j0 = ((j % 3) + 3) % 3;
  const std::int64_t i = (j - j0) / 3;
  const OrbitEntry& base = kBase[j0];
  return {base.sheaf, checked_add(base.shift, checked_mul(2, i))};
}

DomainTransport transport_to_domain(const ShiftedSheaf& x) {
  const Reduction red = reduce3(x.charge());
  ShiftedSheaf y = apply_sigma(x, red.k);
  CUBICMCM_ASSERT(y.charge() == red.charge, "phase tracking disagrees with the charge action");
  CUBICMCM_ASSERT(y.shift % 2 == 0, "domain representative in odd cohomological degree");
  DomainTransport out;
  out.sigma_steps = red.k;
  out.charge = red.charge;
  out.cohomological_shift = y.shift;
  out.degree_shift = checked_sub(red.k, checked_mul(3, y.shift / 2));
  return out;
}

}  // namespace cubicmcm
