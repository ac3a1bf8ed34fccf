#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cubicmcm/betti.hpp"
#include "cubicmcm/poly_matrix.hpp"

namespace cubicmcm {

/// x0^3 + x1^3 + x2^3 - 3 psi x0 x1 x2 with psi^3 != 1.
struct HesseCubic {
  Scalar psi;
  MultiPoly f;

  const Field& field() const noexcept { return psi.field(); }
};

/// Throws Error(SingularCubic) when psi^3 = 1.
HesseCubic hesse(const Scalar& psi);

/// Projective representative [a0:a1:a2]. Operations that need the point on
/// the curve check it themselves.
struct CurvePoint {
  std::array<Scalar, 3> a;

  const Scalar& operator[](std::size_t i) const { return a[i]; }
  bool has_zero_coordinate() const;
  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

std::string to_string(const CurvePoint& p);

bool on_curve(const HesseCubic& curve, const CurvePoint& p);

/// A and B square of the same size with AB = BA = f I. The grading, when
/// present, is attached to A; the one of B is induced (rows = cols of A,
/// cols = rows of A + deg f).
struct MatrixFactorization {
  MultiPoly f;
  PolyMatrix A;
  PolyMatrix B;
};

struct MfReport {
  bool shapes_ok = false;
  bool ab_ok = false;
  bool ba_ok = false;
  bool f_homogeneous = false;
  bool grading_ok = false;
  bool minimal = false;
  /// Grading of A: the attached one when present, else the inferred one.
  std::optional<Grading> grading;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

MfReport verify_mf(const MatrixFactorization& mf);

/// Grading of the pair: A's degree vectors constrained jointly by the
/// entries of A and B. Rows of A are anchored at minimum 0 per component.
/// Throws Error(NotHomogeneous) or Error(Inconsistent).
Grading infer_pair_grading(const MatrixFactorization& mf);

/// {A1,B1} (x) {A2,B2} with
///   A = [[A1(x)I, I(x)A2], [-I(x)B2, B1(x)I]],
///   B = [[B1(x)I, -I(x)A2], [I(x)B2, A1(x)I]],
/// a factorization of f1 + f2 of size 2 n1 n2.
MatrixFactorization tensor_mf(const MatrixFactorization& m1, const MatrixFactorization& m2);

/// The 1 x 1 factorization {a, b} of a b.
MatrixFactorization rank_one_mf(const MultiPoly& a, const MultiPoly& b);

/// Iterated tensor product of the pairs, left to right. Throws
/// Error(InhomogeneousInput) when the products a_i b_i are not homogeneous
/// of one common degree, Error(ZeroPolynomial) when their sum vanishes.
MatrixFactorization koszul_mf(const std::vector<std::pair<MultiPoly, MultiPoly>>& pairs);

/// Koszul factorization for x0 (x0^2) + x1^2 (x1) + (x2^2 - 3 psi x0 x1) x2.
MatrixFactorization koszul_hesse(const HesseCubic& curve);

/// The 4 x 4 Koszul pair written out entry by entry.
MatrixFactorization koszul_reference(const HesseCubic& curve);

/// 3 x 3 Moore matrix in the forms a_i and variables x_i:
///   [[a0 x0, a2 x2, a1 x1], [a2 x1, a1 x0, a0 x2], [a1 x2, a0 x1, a2 x0]].
PolyMatrix moore_template(const std::array<MultiPoly, 3>& a, const std::array<MultiPoly, 3>& x);
/// Closed form of adj of the Moore matrix (quadratic entries).
PolyMatrix moore_adjugate_template(const std::array<MultiPoly, 3>& a, const std::array<MultiPoly, 3>& x);
/// a0 a1 a2 (x0^3 + x1^3 + x2^3) - (a0^3 + a1^3 + a2^3) x0 x1 x2
MultiPoly moore_identity(const std::array<MultiPoly, 3>& a, const std::array<MultiPoly, 3>& x);

/// Moore matrix of a concrete point, over k[x0,x1,x2].
PolyMatrix moore_matrix(const CurvePoint& p);
/// Variables and point coordinates as indeterminates of k[x0,x1,x2,a0,a1,a2].
std::array<MultiPoly, 3> symbolic_x(const Field& field);
std::array<MultiPoly, 3> symbolic_a(const Field& field);

/// B = adj(A) / (a0 a1 a2). Throws Error(NotOnCurve), Error(OrderThreePoint).
MatrixFactorization moore_mf(const HesseCubic& curve, const CurvePoint& p);

/// l1, l2 the first linearly independent pair among the minors of
/// [[a0,a1,a2],[x0,x1,x2]] in the order (m12,m01), (m12,m02), (m01,m02);
/// f = l1 f1 + l2 f2 solved over the quadric coefficients;
/// A = [[l2, f1], [-l1, f2]], B = [[f2, -f1], [l1, l2]].
/// Throws Error(NotOnCurve).
MatrixFactorization skyscraper_mf(const HesseCubic& curve, const CurvePoint& p);

/// Explicit 2 x 2 skyscraper matrix with l1 = a1 x2 - a2 x1, l2 = a0 x1 - a1 x0
/// and a quadratic second row.
PolyMatrix skyscraper_template(const std::array<MultiPoly, 3>& a, const std::array<MultiPoly, 3>& x);

/// A from skyscraper_template, B = adj(A) / (a0 a1 a2).
/// Throws Error(NotOnCurve), Error(InflectionPoint).
MatrixFactorization skyscraper_explicit(const HesseCubic& curve, const CurvePoint& p);

enum class MfSide { A, B };

std::string to_string(MfSide side);
MfSide parse_side(const std::string& text);

/// Generator / relation degrees of coker A (side A) or coker B (side B),
/// shifted so the smallest generator degree is 0.
/// Throws Error(NotMinimal), Error(Inconsistent), Error(NotHomogeneous).
BettiTable betti_from_mf(const MatrixFactorization& mf, MfSide side);

/// Projective points of the curve over F_p with first nonzero coordinate 1,
/// in lexicographic order of residues. Costs O(p^2) evaluations.
std::vector<CurvePoint> point_search(const HesseCubic& curve, bool require_nonzero_coords);

/// Rational points from primitive integer triples with max |a_i| <= height,
/// scaled so the first nonzero coordinate is 1.
std::vector<CurvePoint> rational_point_search(const HesseCubic& curve, std::int64_t height,
                                              bool require_nonzero_coords);

}  // namespace cubicmcm
