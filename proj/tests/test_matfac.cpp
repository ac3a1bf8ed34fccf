#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "cubicmcm/error.hpp"
#include "cubicmcm/matfac.hpp"

using namespace cubicmcm;

namespace {

const std::vector<std::string> kXyz{"x0", "x1", "x2"};

MultiPoly P(const Field& f, std::string_view text) { return MultiPoly::parse(f, kXyz, text); }

CurvePoint point(const Field& f, std::int64_t a, std::int64_t b, std::int64_t c) {
  return CurvePoint{{Scalar(f, a), Scalar(f, b), Scalar(f, c)}};
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalError;
}

BettiTable normalized(const ObjectDescriptor& d) { return betti_table(d).normalized(); }

// Every projective point over F_p, first nonzero coordinate scaled to 1.
std::vector<CurvePoint> brute_points(const HesseCubic& c) {
  const std::int64_t p = static_cast<std::int64_t>(c.field().modulus());
  std::vector<CurvePoint> out;
  for (std::int64_t a = 0; a < p; ++a) {
    for (std::int64_t b = 0; b < p; ++b) {
      for (std::int64_t z = 0; z < p; ++z) {
        if (a == 0 && b == 0 && z == 0) continue;
        const std::int64_t lead = a != 0 ? a : (b != 0 ? b : z);
        if (lead != 1) continue;
        const CurvePoint q = point(c.field(), a, b, z);
        if (on_curve(c, q)) out.push_back(q);
      }
    }
  }
  return out;
}

std::set<std::string> as_set(const std::vector<CurvePoint>& pts) {
  std::set<std::string> s;
  for (const auto& p : pts) s.insert(to_string(p));
  return s;
}

}  // namespace

TEST(Hesse, Construction) {
  const Field q = Field::rational();
  EXPECT_EQ(hesse(Scalar(q, 0)).f, P(q, "x0^3 + x1^3 + x2^3"));
  EXPECT_EQ(hesse(Scalar(q, 2)).f, P(q, "x0^3 + x1^3 + x2^3 - 6*x0*x1*x2"));
  EXPECT_EQ(kind_of([&] { hesse(Scalar(q, 1)); }), ErrorKind::SingularCubic);
  const Field f7 = Field::prime(7);
  for (std::int64_t psi : {1, 2, 4}) EXPECT_EQ(kind_of([&] { hesse(Scalar(f7, psi)); }), ErrorKind::SingularCubic);
  EXPECT_NO_THROW(hesse(Scalar(f7, 3)));
}

TEST(Tensor, TwoVariableExample) {
  const Field q = Field::rational();
  const MatrixFactorization m =
      tensor_mf(rank_one_mf(P(q, "x0"), P(q, "x0^2")), rank_one_mf(P(q, "x1^2"), P(q, "x1")));
  EXPECT_EQ(m.f, P(q, "x0^3 + x1^3"));
  EXPECT_EQ(m.A.rows(), 2u);
  EXPECT_EQ(m.A * m.B, PolyMatrix::scalar(m.f, 2));
  EXPECT_EQ(m.B * m.A, PolyMatrix::scalar(m.f, 2));
  EXPECT_TRUE(verify_mf(m).ok());
}

TEST(Tensor, Mismatches) {
  const MatrixFactorization a = rank_one_mf(P(Field::rational(), "x0"), P(Field::rational(), "x0"));
  const MatrixFactorization b = rank_one_mf(P(Field::prime(7), "x0"), P(Field::prime(7), "x0"));
  EXPECT_EQ(kind_of([&] { tensor_mf(a, b); }), ErrorKind::FieldMismatch);
}

TEST(Koszul, Errors) {
  const Field q = Field::rational();
  EXPECT_EQ(kind_of([&] { koszul_mf({}); }), ErrorKind::ZeroPolynomial);
  EXPECT_EQ(kind_of([&] { koszul_mf({{P(q, "x0"), P(q, "x0")}, {P(q, "x1"), P(q, "x1^2")}}); }),
            ErrorKind::InhomogeneousInput);
  EXPECT_EQ(kind_of([&] { koszul_mf({{P(q, "x0"), P(q, "x1")}, {P(q, "-x1"), P(q, "x0")}}); }),
            ErrorKind::ZeroPolynomial);
}

TEST(Koszul, HesseMatchesReference) {
  for (const Field& field : {Field::rational(), Field::prime(7), Field::prime(11)}) {
    for (std::int64_t psi : {0, 3, 5}) {
      const Scalar s(field, psi);
      if ((s.pow(3) - Scalar::one(field)).is_zero()) continue;
      const HesseCubic c = hesse(s);
      const MatrixFactorization k = koszul_hesse(c);
      const MatrixFactorization ref = koszul_reference(c);
      EXPECT_EQ(k.f, c.f);
      EXPECT_EQ(k.A, ref.A);
      EXPECT_EQ(k.B, ref.B);
      const MfReport rep = verify_mf(k);
      EXPECT_TRUE(rep.ok());
      EXPECT_TRUE(rep.minimal);
      ASSERT_TRUE(rep.grading.has_value());
      EXPECT_EQ(*rep.grading, (Grading{{0, 0, 0, 1}, {1, 2, 2, 2}}));
    }
  }
}

TEST(Koszul, BettiReadout) {
  const HesseCubic c = hesse(Scalar(Field::rational(), 0));
  const MatrixFactorization k = koszul_reference(c);
  EXPECT_EQ(betti_from_mf(k, MfSide::B), normalized(ObjectDescriptor::atiyah(1)));
  EXPECT_EQ(betti_from_mf(k, MfSide::A), normalized(ObjectDescriptor::special(1)));
}

TEST(Verify, DetectsFailures) {
  const Field q = Field::rational();
  const HesseCubic c = hesse(Scalar(q, 0));
  MatrixFactorization k = koszul_reference(c);
  k.B.at(0, 0) += P(q, "x0");
  const MfReport rep = verify_mf(k);
  EXPECT_FALSE(rep.ok());
  EXPECT_FALSE(rep.ab_ok);
  // a unit entry makes the pair non-minimal
  const MatrixFactorization triv = rank_one_mf(P(q, "1"), c.f);
  const MfReport r2 = verify_mf(triv);
  EXPECT_TRUE(r2.ab_ok);
  EXPECT_FALSE(r2.minimal);
  EXPECT_EQ(kind_of([&] { betti_from_mf(triv, MfSide::A); }), ErrorKind::NotMinimal);
}

TEST(Moore, SymbolicIdentities) {
  for (const Field& field : {Field::rational(), Field::prime(7)}) {
    const auto a = symbolic_a(field);
    const auto x = symbolic_x(field);
    const PolyMatrix m = moore_template(a, x);
    const MultiPoly id = moore_identity(a, x);
    EXPECT_EQ(determinant(m), id);
    EXPECT_EQ(adjugate(m), moore_adjugate_template(a, x));
    EXPECT_EQ(m * moore_adjugate_template(a, x), PolyMatrix::scalar(id, 3));
    // the explicit 2 x 2 skyscraper matrix has the same determinant
    EXPECT_EQ(determinant(skyscraper_template(a, x)), id);
  }
}

TEST(Moore, RationalPoint) {
  const Field q = Field::rational();
  const HesseCubic c = hesse(Scalar(q, 2));
  const CurvePoint p = point(q, 1, 2, 3);
  ASSERT_TRUE(on_curve(c, p));
  const MatrixFactorization m = moore_mf(c, p);
  EXPECT_EQ(determinant(m.A), P(q, "6") * c.f);
  const MfReport rep = verify_mf(m);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(betti_from_mf(m, MfSide::A), normalized(ObjectDescriptor::generic(1, 0)));
  EXPECT_EQ(betti_from_mf(m, MfSide::A), BettiTable({{{0, 0}, 3}, {{1, 1}, 3}}));
}

TEST(Moore, FiniteFieldPoints) {
  for (std::uint64_t p : {5u, 11u}) {
    const Field f = Field::prime(p);
    const HesseCubic c = hesse(Scalar(f, 3));
    const auto pts = point_search(c, true);
    ASSERT_FALSE(pts.empty());
    for (const auto& pt : pts) {
      const MatrixFactorization m = moore_mf(c, pt);
      EXPECT_TRUE(verify_mf(m).ok()) << to_string(pt);
      const Scalar prod = pt[0] * pt[1] * pt[2];
      EXPECT_EQ(determinant(m.A), c.f * prod);
    }
  }
}

TEST(Moore, Errors) {
  const Field q = Field::rational();
  const HesseCubic c = hesse(Scalar(q, 0));
  EXPECT_EQ(kind_of([&] { moore_mf(c, point(q, 0, -1, 1)); }), ErrorKind::OrderThreePoint);
  EXPECT_EQ(kind_of([&] { moore_mf(c, point(q, 1, 1, 1)); }), ErrorKind::NotOnCurve);
  EXPECT_EQ(kind_of([&] { moore_mf(c, point(q, 0, 0, 0)); }), ErrorKind::DegeneratePoint);
  const CurvePoint wrong_field = point(Field::prime(7), 0, 6, 1);
  EXPECT_EQ(kind_of([&] { moore_mf(c, wrong_field); }), ErrorKind::FieldMismatch);
}

TEST(Skyscraper, FermatPoint) {
  const Field q = Field::rational();
  const HesseCubic c = hesse(Scalar(q, 0));
  const MatrixFactorization m = skyscraper_mf(c, point(q, 0, -1, 1));
  EXPECT_EQ(m.A.rows(), 2u);
  EXPECT_TRUE(verify_mf(m).ok());
  // A = [[l2, f1], [-l1, f2]] re-expands to f
  EXPECT_EQ(m.A(0, 0) * m.A(1, 1) - m.A(0, 1) * m.A(1, 0), c.f);
  EXPECT_EQ(m.A(0, 0).degree(), 1);
  EXPECT_EQ(m.A(0, 1).degree(), 2);
  EXPECT_EQ(betti_from_mf(m, MfSide::B), normalized(ObjectDescriptor::generic(1, 1)));
  EXPECT_EQ(betti_from_mf(m, MfSide::A), normalized(ObjectDescriptor::generic(1, 2)));
}

TEST(Skyscraper, AllPointsOverSmallFields) {
  for (std::uint64_t p : {5u, 7u, 11u}) {
    const Field f = Field::prime(p);
    for (std::int64_t psi = 0; psi < static_cast<std::int64_t>(p); ++psi) {
      const Scalar s(f, psi);
      if ((s.pow(3) - Scalar::one(f)).is_zero()) continue;
      const HesseCubic c = hesse(s);
      for (const auto& pt : point_search(c, false)) {
        const MatrixFactorization m = skyscraper_mf(c, pt);
        EXPECT_TRUE(verify_mf(m).ok()) << p << " " << psi << " " << to_string(pt);
        EXPECT_EQ(determinant(m.A), c.f);
        EXPECT_EQ(betti_from_mf(m, MfSide::B), normalized(ObjectDescriptor::generic(1, 1)));
      }
    }
  }
}

TEST(Skyscraper, Explicit) {
  const Field f = Field::prime(11);
  const HesseCubic c = hesse(Scalar(f, 3));
  for (const auto& pt : point_search(c, true)) {
    const MatrixFactorization m = skyscraper_explicit(c, pt);
    EXPECT_TRUE(verify_mf(m).ok()) << to_string(pt);
    EXPECT_EQ(m.A * m.B, PolyMatrix::scalar(c.f, 2));
  }
  const HesseCubic fermat = hesse(Scalar(Field::rational(), 0));
  EXPECT_EQ(kind_of([&] { skyscraper_explicit(fermat, point(Field::rational(), 0, -1, 1)); }),
            ErrorKind::InflectionPoint);
  EXPECT_EQ(kind_of([&] { skyscraper_mf(fermat, point(Field::rational(), 1, 1, 1)); }), ErrorKind::NotOnCurve);
}

TEST(Points, MatchBruteForce) {
  for (std::uint64_t p : {5u, 7u, 11u, 13u}) {
    const Field f = Field::prime(p);
    for (std::int64_t psi = 0; psi < static_cast<std::int64_t>(p); ++psi) {
      const Scalar s(f, psi);
      if ((s.pow(3) - Scalar::one(f)).is_zero()) continue;
      const HesseCubic c = hesse(s);
      const auto all = brute_points(c);
      EXPECT_EQ(as_set(point_search(c, false)), as_set(all));
      std::vector<CurvePoint> nz;
      for (const auto& q : all) {
        if (!q.has_zero_coordinate()) nz.push_back(q);
      }
      EXPECT_EQ(as_set(point_search(c, true)), as_set(nz));
    }
  }
}

TEST(Points, SevenHasOnlyInflectionPoints) {
  const Field f = Field::prime(7);
  for (std::int64_t psi : {0, 3, 5, 6}) {
    const HesseCubic c = hesse(Scalar(f, psi));
    const auto pts = point_search(c, false);
    EXPECT_EQ(pts.size(), 9u);
    for (const auto& q : pts) EXPECT_TRUE(q.has_zero_coordinate());
  }
  const HesseCubic c = hesse(Scalar(f, 0));
  EXPECT_EQ(as_set(point_search(c, false)).count("[0:1:6]"), 1u);
}

TEST(Points, Rational) {
  const Field q = Field::rational();
  const auto pts = rational_point_search(hesse(Scalar(q, 2)), 5, true);
  EXPECT_EQ(as_set(pts).count("[1:2:3]"), 1u);
  for (const auto& p : pts) EXPECT_TRUE(on_curve(hesse(Scalar(q, 2)), p));
  EXPECT_TRUE(rational_point_search(hesse(Scalar(q, 0)), 6, true).empty());
  EXPECT_FALSE(rational_point_search(hesse(Scalar(q, 0)), 1, false).empty());
}

TEST(MfSide, Parse) {
  EXPECT_EQ(parse_side("a"), MfSide::A);
  EXPECT_EQ(parse_side("B"), MfSide::B);
  EXPECT_EQ(to_string(MfSide::A), "A");
  EXPECT_THROW(parse_side("C"), Error);
}
