#include "cubicmcm/betti.hpp"

#include <algorithm>
#include <sstream>

#include "checked_int.hpp"
#include "cubicmcm/error.hpp"

namespace cubicmcm {

std::string to_string(Variant v) {
  switch (v) {
    case Variant::Generic: return "generic";
    case Variant::Atiyah: return "atiyah";
    case Variant::SpecialS: return "special";
  }
  return "?";
}

Variant parse_variant(const std::string& text) {
  std::string t = text;
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "generic" || t == "g") return Variant::Generic;
  if (t == "atiyah" || t == "f") return Variant::Atiyah;
  if (t == "special" || t == "specials" || t == "s") return Variant::SpecialS;
  fail(ErrorKind::InvalidDescriptor, "unknown variant '" + text + "'");
}

void ObjectDescriptor::validate() const {
  if (!in_domain3(charge)) {
    fail(ErrorKind::InvalidDescriptor,
         "charge " + cubicmcm::to_string(charge) + " is outside the fundamental domain r > 0, 0 <= d < 3r");
  }
  switch (variant) {
    case Variant::Generic: break;
    case Variant::Atiyah:
      if (charge.d != 0) {
        fail(ErrorKind::InvalidDescriptor, "Atiyah bundles have degree 0, got " + cubicmcm::to_string(charge));
      }
      break;
    case Variant::SpecialS:
      if (3 * charge.r != 2 * charge.d) {
        fail(ErrorKind::InvalidDescriptor,
             "special bundles S_l have charge (2l,3l), got " + cubicmcm::to_string(charge));
      }
      break;
  }
  if (variant != Variant::Generic && lambda) {
    fail(ErrorKind::InvalidDescriptor, "discrete families carry no point label");
  }
}

ObjectDescriptor ObjectDescriptor::atiyah(std::int64_t r) {
  ObjectDescriptor d{{r, 0}, Variant::Atiyah, std::nullopt};
  d.validate();
  return d;
}

ObjectDescriptor ObjectDescriptor::special(std::int64_t l) {
  ObjectDescriptor d{{checked_mul(2, l), checked_mul(3, l)}, Variant::SpecialS, std::nullopt};
  d.validate();
  return d;
}

ObjectDescriptor ObjectDescriptor::generic(std::int64_t r, std::int64_t d,
                                           std::optional<std::string> lambda) {
  ObjectDescriptor out{{r, d}, Variant::Generic, std::move(lambda)};
  out.validate();
  return out;
}

std::string to_string(const ObjectDescriptor& desc) {
  switch (desc.variant) {
    case Variant::Atiyah: return "F_" + std::to_string(desc.charge.r);
    case Variant::SpecialS: return "S_" + std::to_string(desc.charge.r / 2);
    case Variant::Generic: break;
  }
  const bool g_family = 3 * desc.charge.r - 2 * desc.charge.d > 0;
  std::string out = g_family ? "G" : "H";
  if (desc.lambda) out += "_" + *desc.lambda;
  return out + to_string(desc.charge);
}

// ---------------------------------------------------------------------------

BettiTable::BettiTable(const std::map<Key, std::int64_t>& entries) {
  for (const auto& [key, value] : entries) set(key.first, key.second, value);
}

std::int64_t BettiTable::window(int i, std::int64_t j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::set(int i, std::int64_t j, std::int64_t value) {
  if (i != 0 && i != 1) fail(ErrorKind::InvalidDescriptor, "Betti window stores i in {0,1} only");
  if (value < 0) fail(ErrorKind::InvalidDescriptor, "Betti numbers are nonnegative");
  if (value == 0) {
    entries_.erase({i, j});
  } else {
    entries_[{i, j}] = value;
  }
}

BettiTable BettiTable::shifted(std::int64_t s) const {
  BettiTable out;
  for (const auto& [key, value] : entries_) out.entries_[{key.first, checked_add(key.second, s)}] = value;
  return out;
}

std::optional<std::int64_t> BettiTable::min_generator_degree() const {
  std::optional<std::int64_t> best;
  for (const auto& [key, value] : entries_) {
    if (key.first == 0 && (!best || key.second < *best)) best = key.second;
  }
  return best;
}

BettiTable BettiTable::normalized() const {
  const auto m = min_generator_degree();
  return m ? shifted(-*m) : *this;
}

std::int64_t BettiTable::total(int i) const {
  std::int64_t sum = 0;
  for (const auto& [key, value] : entries_) {
    if (key.first == i) sum = checked_add(sum, value);
  }
  return sum;
}

std::string to_string(const BettiTable& t) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [key, value] : t.entries()) {
    if (!first) os << ", ";
    first = false;
    os << "(" << key.first << "," << key.second << "):" << value;
  }
  os << "}";
  return os.str();
}

std::int64_t betti_at(const BettiTable& table, std::int64_t i, std::int64_t j) {
  // i = 2q + i0 with i0 in {0,1}; beta_{i0 + 2q, j} = beta_{i0, j - 3q}
  const std::int64_t i0 = ((i % 2) + 2) % 2;
  const std::int64_t q = (i - i0) / 2;
  return table.window(static_cast<int>(i0), checked_sub(j, checked_mul(3, q)));
}

// ---------------------------------------------------------------------------

std::int64_t h0(std::int64_t r, std::int64_t d, bool is_atiyah) {
  if (r < 1) fail(ErrorKind::InvalidBundle, "bundle rank must be at least 1");
  if (is_atiyah && d != 0) fail(ErrorKind::InvalidBundle, "Atiyah bundles have degree 0");
  if (d < 0) return 0;
  if (d == 0 && is_atiyah) return 1;
  return d;
}

std::int64_t h1(std::int64_t r, std::int64_t d, bool is_atiyah) {
  return h0(r, checked_neg(d), is_atiyah);
}

BettiTable betti_table(const ObjectDescriptor& desc) {
  desc.validate();
  const std::int64_t r = desc.charge.r;
  const std::int64_t d = desc.charge.d;
  const bool atiyah = desc.variant == Variant::Atiyah;
  const bool special = desc.variant == Variant::SpecialS;
  const std::int64_t slope_gap = checked_sub(checked_mul(3, r), checked_mul(2, d));  // 3r - 2d

  BettiTable t;
  // beta_{0,-1} vanishes on the domain
  t.set(0, 0, h0(r, d, atiyah));
  t.set(0, 1, slope_gap < 0 ? 0 : (special ? 1 : slope_gap));
  t.set(1, 1, slope_gap > 0 ? 0 : (special ? 1 : -slope_gap));
  t.set(1, 2, checked_sub(checked_mul(3, r), d));
  t.set(1, 3, h1(r, d, atiyah));
  return t;
}

GeneralBetti betti_general(const Charge& c, Variant variant) {
  const DomainTransport tr = transport_to_domain(natural_representative(c));
  ObjectDescriptor rep{tr.charge, variant, std::nullopt};
  try {
    rep.validate();
  } catch (const Error&) {
    fail(ErrorKind::VariantMismatch, "variant " + to_string(variant) + " does not fit the domain representative " +
                                         to_string(tr.charge) + " of " + to_string(c));
  }
  GeneralBetti out;
  out.table = betti_table(rep);
  out.representative = rep;
  out.internal_shift = tr.sigma_steps;
  out.cohomological_shift = tr.cohomological_shift;
  out.degree_shift = tr.degree_shift;
  return out;
}

std::int64_t betti_at(const GeneralBetti& general, std::int64_t i, std::int64_t j) {
  return betti_at(general.table, i, checked_sub(j, general.degree_shift));
}

std::int64_t ResolutionTerm::rank() const {
  std::int64_t sum = 0;
  for (const auto& [deg, mult] : degrees) sum = checked_add(sum, mult);
  return sum;
}

std::vector<ResolutionTerm> complete_resolution(const ObjectDescriptor& desc, std::int64_t steps) {
  if (steps < 0) fail(ErrorKind::InvalidDescriptor, "steps must be nonnegative");
  const BettiTable table = betti_table(desc);
  std::vector<ResolutionTerm> out;
  for (std::int64_t i = -steps; i <= steps; ++i) {
    ResolutionTerm term;
    term.position = i;
    const std::int64_t i0 = ((i % 2) + 2) % 2;
    const std::int64_t q = (i - i0) / 2;
    for (const auto& [key, value] : table.entries()) {
      if (key.first == i0) term.degrees[checked_add(key.second, checked_mul(3, q))] = value;
    }
    out.push_back(std::move(term));
  }
  return out;
}

SyzygyResult descriptor_syzygy(const ObjectDescriptor& desc) {
  desc.validate();
  // syz corresponds to the shift [-1] on D^b(E)
  const DomainTransport tr = transport_to_domain(ShiftedSheaf{desc.charge, -1});
  SyzygyResult out;
  out.descriptor.charge = tr.charge;
  out.degree_shift = tr.degree_shift;
  switch (desc.variant) {
    case Variant::Atiyah:
      out.descriptor.variant = Variant::SpecialS;
      CUBICMCM_ASSERT(tr.charge == (Charge{2 * desc.charge.r, 3 * desc.charge.r}),
                      "syzygy of F_r must land on S_r");
      break;
    case Variant::SpecialS:
      out.descriptor.variant = Variant::Atiyah;
      CUBICMCM_ASSERT(tr.charge == (Charge{desc.charge.r / 2, 0}), "syzygy of S_l must land on F_l");
      break;
    case Variant::Generic:
      out.descriptor.variant = Variant::Generic;
      out.descriptor.lambda = desc.lambda;
      break;
  }
  out.descriptor.validate();
  return out;
}

// ---------------------------------------------------------------------------

std::int64_t LaurentPoly::at(std::int64_t exponent) const {
  const std::int64_t idx = exponent - low;
  if (idx < 0 || idx >= static_cast<std::int64_t>(coeffs.size())) return 0;
  return coeffs[static_cast<std::size_t>(idx)];
}

std::int64_t LaurentPoly::eval_at_one() const {
  std::int64_t sum = 0;
  for (auto c : coeffs) sum = checked_add(sum, c);
  return sum;
}

void LaurentPoly::trim() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs.size() && coeffs[lead] == 0) ++lead;
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(lead));
  low = coeffs.empty() ? 0 : low + static_cast<std::int64_t>(lead);
}

std::string to_string(const LaurentPoly& p, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
    std::int64_t c = p.coeffs[k];
    if (c == 0) continue;
    const std::int64_t e = p.low + static_cast<std::int64_t>(k);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const std::int64_t mag = c < 0 ? -c : c;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << var;
    if (e != 1) os << "^" << e;
  }
  if (first) os << "0";
  return os.str();
}

HilbertData hilbert_data(const BettiTable& table) {
  HilbertData out;
  std::int64_t lo = 0, hi = -1;
  bool any = false;
  for (const auto& [key, value] : table.entries()) {
    if (!any) {
      lo = hi = key.second;
      any = true;
    }
    lo = std::min(lo, key.second);
    hi = std::max(hi, key.second);
  }
  LaurentPoly b;
  b.low = lo;
  if (any) b.coeffs.assign(static_cast<std::size_t>(hi - lo + 1), 0);
  for (const auto& [key, value] : table.entries()) {
    auto& slot = b.coeffs[static_cast<std::size_t>(key.second - lo)];
    slot = key.first == 0 ? checked_add(slot, value) : checked_sub(slot, value);
  }
  // P = B / (1 - t): partial sums, the last one is B(1) and must vanish
  LaurentPoly p;
  p.low = b.low;
  std::int64_t running = 0;
  for (auto c : b.coeffs) {
    running = checked_add(running, c);
    p.coeffs.push_back(running);
  }
  CUBICMCM_ASSERT(running == 0, "B(1) != 0: (1-t) does not divide B");
  b.trim();
  p.trim();
  out.numerator_b = b;
  out.p = p;
  out.multiplicity = p.eval_at_one();
  out.generators = table.total(0);
  CUBICMCM_ASSERT(out.multiplicity % 3 == 0, "multiplicity is not divisible by e(R) = 3");
  out.module_rank = out.multiplicity / 3;
  return out;
}

HilbertData hilbert_data(const ObjectDescriptor& desc) { return hilbert_data(betti_table(desc)); }

std::vector<std::int64_t> hilbert_coefficients(const ObjectDescriptor& desc, std::int64_t n) {
  if (n < 0) fail(ErrorKind::InvalidDescriptor, "number of terms must be nonnegative");
  const HilbertData hd = hilbert_data(desc);
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(n + 1));
  // [t^k] P(t)/(1-t)^2 = sum_{m <= k} p_m (k - m + 1)
  for (std::int64_t k = 0; k <= n; ++k) {
    std::int64_t sum = 0;
    for (std::size_t idx = 0; idx < hd.p.coeffs.size(); ++idx) {
      const std::int64_t m = hd.p.low + static_cast<std::int64_t>(idx);
      if (m > k) break;
      sum = checked_add(sum, checked_mul(hd.p.coeffs[idx], k - m + 1));
    }
    out.push_back(sum);
  }
  return out;
}

bool is_ulrich(const ObjectDescriptor& desc) {
  const HilbertData hd = hilbert_data(desc);
  return hd.generators == hd.multiplicity;
}

bool is_ulrich(const Charge& c, Variant variant) {
  const GeneralBetti g = betti_general(c, variant);
  const HilbertData hd = hilbert_data(g.table);
  return hd.generators == hd.multiplicity;
}

}  // namespace cubicmcm
