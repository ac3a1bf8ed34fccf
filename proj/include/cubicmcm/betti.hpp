#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubicmcm/charge_lattice.hpp"

namespace cubicmcm {

enum class Variant { Generic, Atiyah, SpecialS };

std::string to_string(Variant v);
/// Accepts "generic", "atiyah", "special" (also "specials", "s").
Variant parse_variant(const std::string& text);

/// An indecomposable bundle with charge in the order-3 fundamental domain.
/// Atiyah marks the bundles F_r (charge (r,0)); SpecialS marks
/// S_l = sigma^{-1}(F_l[-1]) (charge (2l,3l)). `lambda` is a display label only.
struct ObjectDescriptor {
  Charge charge;
  Variant variant = Variant::Generic;
  std::optional<std::string> lambda;

  /// Throws Error(InvalidDescriptor) when the charge is outside the domain or
  /// the variant does not fit the charge.
  void validate() const;

  static ObjectDescriptor atiyah(std::int64_t r);
  static ObjectDescriptor special(std::int64_t l);
  static ObjectDescriptor generic(std::int64_t r, std::int64_t d,
                                  std::optional<std::string> lambda = std::nullopt);

  friend bool operator==(const ObjectDescriptor&, const ObjectDescriptor&) = default;
};

std::string to_string(const ObjectDescriptor& desc);

/// Graded Betti numbers beta_{i,j} for i in {0,1}; zero entries are not stored.
/// All other homological degrees follow from beta_{i+2,j} = beta_{i,j-3}.
class BettiTable {
 public:
  using Key = std::pair<int, std::int64_t>;  // (i, j)

  BettiTable() = default;
  explicit BettiTable(const std::map<Key, std::int64_t>& entries);

  /// Stored value for i in {0,1}; 0 when absent.
  std::int64_t window(int i, std::int64_t j) const;
  void set(int i, std::int64_t j, std::int64_t value);

  const std::map<Key, std::int64_t>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  /// Table of M(-s): every internal degree moves up by s.
  BettiTable shifted(std::int64_t s) const;
  /// Shift so that the smallest generator degree (i = 0) is 0.
  BettiTable normalized() const;
  /// Smallest j with beta_{0,j} != 0.
  std::optional<std::int64_t> min_generator_degree() const;

  std::int64_t total(int i) const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<Key, std::int64_t> entries_;
};

std::string to_string(const BettiTable& t);

/// beta_{i,j} for any i via the 2-periodic fold.
std::int64_t betti_at(const BettiTable& table, std::int64_t i, std::int64_t j);

/// dim H^0 of an indecomposable bundle of rank r, degree d.
std::int64_t h0(std::int64_t r, std::int64_t d, bool is_atiyah);
/// dim H^1 via Serre duality, h0 of the dual bundle.
std::int64_t h1(std::int64_t r, std::int64_t d, bool is_atiyah);

BettiTable betti_table(const ObjectDescriptor& desc);

struct GeneralBetti {
  BettiTable table;             ///< table of the domain representative
  ObjectDescriptor representative;
  int internal_shift = 0;       ///< k from reduce3
  std::int64_t cohomological_shift = 0;
  /// beta_{i,j}(M) = betti_at(table, i, j - degree_shift)
  std::int64_t degree_shift = 0;
};

/// Betti data for the natural object of charge c (sheaf, or sheaf[1] when
/// -c is effective). `variant` applies to the domain representative.
GeneralBetti betti_general(const Charge& c, Variant variant);

/// beta_{i,j} of the object described by `general`.
std::int64_t betti_at(const GeneralBetti& general, std::int64_t i, std::int64_t j);

struct ResolutionTerm {
  std::int64_t position = 0;                    ///< homological index i
  std::map<std::int64_t, std::int64_t> degrees;  ///< j -> multiplicity
  std::int64_t rank() const;
};

/// Free modules of the complete resolution for i = -steps..steps.
std::vector<ResolutionTerm> complete_resolution(const ObjectDescriptor& desc, std::int64_t steps);

struct SyzygyResult {
  ObjectDescriptor descriptor;
  /// beta_{i,j}(syz M) = betti_at(betti_table(descriptor), i, j - degree_shift)
  std::int64_t degree_shift = 0;
};

SyzygyResult descriptor_syzygy(const ObjectDescriptor& desc);

/// Integer Laurent polynomial sum_k coeffs[k] t^(low + k).
struct LaurentPoly {
  std::int64_t low = 0;
  std::vector<std::int64_t> coeffs;

  std::int64_t at(std::int64_t exponent) const;
  std::int64_t eval_at_one() const;
  void trim();
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
};

std::string to_string(const LaurentPoly& p, const std::string& var = "t");

struct HilbertData {
  LaurentPoly numerator_b;  ///< B(t) = sum beta_{0,j} t^j - sum beta_{1,j} t^j
  LaurentPoly p;            ///< P(t) = B(t)/(1-t)
  std::int64_t multiplicity = 0;   ///< e = P(1)
  std::int64_t generators = 0;     ///< mu
  std::int64_t module_rank = 0;    ///< e/3, not the bundle rank
};

HilbertData hilbert_data(const BettiTable& table);
HilbertData hilbert_data(const ObjectDescriptor& desc);

/// dim M_k for k = 0..n from H_M = P(t)/(1-t)^2.
std::vector<std::int64_t> hilbert_coefficients(const ObjectDescriptor& desc, std::int64_t n);

bool is_ulrich(const ObjectDescriptor& desc);
/// For a general charge: the variant refers to the domain representative.
/// Ulrich-ness is invariant under the internal shifts used in the transport.
bool is_ulrich(const Charge& c, Variant variant);

}  // namespace cubicmcm
