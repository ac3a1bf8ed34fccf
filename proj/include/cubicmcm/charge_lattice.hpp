#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace cubicmcm {

/// Class of an object of D^b(E) in K_0(E)/rad, written as (rank, degree).
/// Basis: the structure sheaf is (1,0), a skyscraper of length one is (0,1).
struct Charge {
  std::int64_t r = 0;
  std::int64_t d = 0;

  bool is_zero() const noexcept { return r == 0 && d == 0; }
  Charge operator-() const;
  friend bool operator==(const Charge&, const Charge&) = default;
};

std::string to_string(const Charge& c);
std::ostream& operator<<(std::ostream& os, const Charge& c);

/// Element of SL_2(Z) acting on charges as a column vector.
class LatticeAuto {
 public:
  /// Throws Error(InvalidDescriptor) unless the determinant is 1.
  LatticeAuto(std::int64_t m00, std::int64_t m01, std::int64_t m10, std::int64_t m11);

  static LatticeAuto identity() { return {1, 0, 0, 1}; }
  /// Induced by the twist with the structure sheaf: [[1,-1],[0,1]].
  static LatticeAuto twist_structure_sheaf() { return {1, -1, 0, 1}; }
  /// Induced by tensoring with O(x): [[1,0],[1,1]].
  static LatticeAuto twist_point() { return {1, 0, 1, 1}; }
  /// Action of the degree-shift functor on charges: B^3 A = [[1,-1],[3,-2]].
  static LatticeAuto sigma() { return {1, -1, 3, -2}; }

  std::int64_t m00() const noexcept { return m00_; }
  std::int64_t m01() const noexcept { return m01_; }
  std::int64_t m10() const noexcept { return m10_; }
  std::int64_t m11() const noexcept { return m11_; }
  std::int64_t determinant() const;

  LatticeAuto operator*(const LatticeAuto& other) const;
  LatticeAuto operator-() const;
  LatticeAuto pow(std::int64_t k) const;
  LatticeAuto inverse() const;

  friend bool operator==(const LatticeAuto&, const LatticeAuto&) = default;

 private:
  std::int64_t m00_, m01_, m10_, m11_;
};

/// <c1, c2> = r1*d2 - d1*r2.
std::int64_t euler_form(const Charge& c1, const Charge& c2);

Charge apply_auto(const LatticeAuto& m, const Charge& c);

/// [sigma]^k c; [sigma] has order three.
Charge sigma_power(std::int64_t k, const Charge& c);

/// r > 0 and 0 <= d < 3r.
bool in_domain3(const Charge& c);
/// r > 0 and 3r > 2d >= 0.
bool in_domain6(const Charge& c);

struct Reduction {
  int k = 0;
  Charge charge;
  friend bool operator==(const Reduction&, const Reduction&) = default;
};

/// Unique k in {0,1,2} with [sigma]^k c in the order-3 fundamental domain.
Reduction reduce3(const Charge& c);
/// Unique k in {0..5} with (-[sigma])^k c in the order-6 fundamental domain.
Reduction reduce6(const Charge& c);

/// An indecomposable object of D^b(E) up to isomorphism data we track:
/// a sheaf with charge `sheaf` placed in cohomological degree -shift, i.e. G[shift].
/// The sheaf charge always lies in the half plane r > 0 or (r = 0, d > 0).
struct ShiftedSheaf {
  Charge sheaf;
  std::int64_t shift = 0;

  /// Charge of the complex G[shift], i.e. (-1)^shift times the sheaf charge.
  Charge charge() const;
  friend bool operator==(const ShiftedSheaf&, const ShiftedSheaf&) = default;
};

/// True iff c has positive rank, or zero rank and positive degree.
bool is_sheaf_charge(const Charge& c);

/// The object of charge c placed in cohomological degree 0 or -1.
ShiftedSheaf natural_representative(const Charge& c);

/// Applies sigma^k, tracking the cohomological shift through the phase lift
/// fixed by sigma^3 = [2].
ShiftedSheaf apply_sigma(const ShiftedSheaf& x, std::int64_t k);

struct OrbitEntry {
  Charge sheaf;
  std::int64_t shift = 0;
  friend bool operator==(const OrbitEntry&, const OrbitEntry&) = default;
};

/// V_j = sigma^j(O[1]) as (sheaf charge, cohomological shift).
OrbitEntry orbit_V(std::int64_t j);

/// Result of moving an object into the order-3 fundamental domain.
struct DomainTransport {
  int sigma_steps = 0;          ///< k with [sigma]^k c in the domain
  Charge charge;                ///< representative charge in the domain
  std::int64_t cohomological_shift = 0;  ///< sigma^k X = G'[2m]; this is 2m
  /// s with beta_{i,j}(X) = beta_{i, j - s}(G'); equals k - 3m.
  std::int64_t degree_shift = 0;
};

DomainTransport transport_to_domain(const ShiftedSheaf& x);

}  // namespace cubicmcm
