#include "cubicmcm/matfac.hpp"

#include <numeric>

#include "cubicmcm/error.hpp"

namespace cubicmcm {

namespace {

constexpr std::size_t kVars = 3;

MultiPoly var(const Field& field, std::size_t nvars, std::size_t i) { return MultiPoly::variable(field, nvars, i); }

std::array<MultiPoly, 3> point_constants(const CurvePoint& p) {
  const Field& k = p[0].field();
  return {MultiPoly::constant(k, kVars, p[0]), MultiPoly::constant(k, kVars, p[1]),
          MultiPoly::constant(k, kVars, p[2])};
}

std::array<MultiPoly, 3> plain_x(const Field& field) {
  return {var(field, kVars, 0), var(field, kVars, 1), var(field, kVars, 2)};
}

void require_point(const HesseCubic& curve, const CurvePoint& p) {
  for (const auto& c : p.a) {
    if (!(c.field() == curve.field())) fail(ErrorKind::FieldMismatch, "point and curve over different fields");
  }
  if (p[0].is_zero() && p[1].is_zero() && p[2].is_zero()) {
    fail(ErrorKind::DegeneratePoint, "(0,0,0) is not a projective point");
  }
  if (!on_curve(curve, p)) fail(ErrorKind::NotOnCurve, to_string(p) + " is not on the curve");
}

PolyMatrix kron(const PolyMatrix& m, const PolyMatrix& n) {
  PolyMatrix out(m.field(), m.nvars(), m.rows() * n.rows(), m.cols() * n.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < n.rows(); ++k) {
        for (std::size_t l = 0; l < n.cols(); ++l) {
          if (n(k, l).is_zero()) continue;
          out.at(i * n.rows() + k, j * n.cols() + l) = m(i, j) * n(k, l);
        }
      }
    }
  }
  return out;
}

PolyMatrix blocks(const PolyMatrix& tl, const PolyMatrix& tr, const PolyMatrix& bl, const PolyMatrix& br) {
  const std::size_t h = tl.rows();
  const std::size_t w = tl.cols();
  PolyMatrix out(tl.field(), tl.nvars(), 2 * h, 2 * w);
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = 0; j < w; ++j) {
      out.at(i, j) = tl(i, j);
      out.at(i, w + j) = tr(i, j);
      out.at(h + i, j) = bl(i, j);
      out.at(h + i, w + j) = br(i, j);
    }
  }
  return out;
}

std::vector<Exponent> monomials_of_degree(std::size_t nvars, std::uint32_t degree) {
  std::vector<Exponent> out;
  Exponent e(nvars, 0);
  // descending lex on the first variables gives grlex descending within one degree
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i + 1 == nvars) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (std::uint32_t v = left + 1; v-- > 0;) {
      e[i] = v;
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, degree);
  return out;
}

bool independent_linear_forms(const MultiPoly& l1, const MultiPoly& l2) {
  if (l1.is_zero() || l2.is_zero()) return false;
  std::array<Scalar, 3> u;
  std::array<Scalar, 3> v;
  for (std::size_t i = 0; i < kVars; ++i) {
    Exponent e(kVars, 0);
    e[i] = 1;
    u[i] = l1.coefficient(e);
    v[i] = l2.coefficient(e);
  }
  for (std::size_t i = 0; i < kVars; ++i) {
    for (std::size_t j = i + 1; j < kVars; ++j) {
      if (!(u[i] * v[j] - u[j] * v[i]).is_zero()) return true;
    }
  }
  return false;
}

std::string degree_list(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace

HesseCubic hesse(const Scalar& psi) {
  const Field& k = psi.field();
  if (psi.pow(3).is_one()) fail(ErrorKind::SingularCubic, "psi^3 = 1 gives a singular cubic (psi = " + psi.to_string() + ")");
  const auto x = plain_x(k);
  MultiPoly f = x[0].pow(3) + x[1].pow(3) + x[2].pow(3) - x[0] * x[1] * x[2] * (Scalar(k, 3) * psi);
  return HesseCubic{psi, std::move(f)};
}

bool CurvePoint::has_zero_coordinate() const { return a[0].is_zero() || a[1].is_zero() || a[2].is_zero(); }

std::string to_string(const CurvePoint& p) {
  return "[" + p[0].to_string() + ":" + p[1].to_string() + ":" + p[2].to_string() + "]";
}

bool on_curve(const HesseCubic& curve, const CurvePoint& p) { return curve.f.eval(p.a).is_zero(); }

// ---------------------------------------------------------------------------

Grading infer_pair_grading(const MatrixFactorization& mf) {
  const std::size_t n = mf.A.rows();
  if (!mf.A.is_square() || !mf.B.is_square() || mf.B.rows() != n) {
    fail(ErrorKind::DimensionMismatch, "A and B must be square of the same size");
  }
  if (mf.f.is_zero() || !mf.f.is_homogeneous()) fail(ErrorKind::NotHomogeneous, "f is not a nonzero form");
  const std::int64_t w = *mf.f.degree();
  std::vector<detail::DegreeConstraint> edges;
  auto entry_degree = [](const MultiPoly& p, const char* name, std::size_t i, std::size_t j) {
    if (!p.is_homogeneous()) {
      fail(ErrorKind::NotHomogeneous, std::string(name) + "(" + std::to_string(i) + "," + std::to_string(j) +
                                          ") = " + p.to_string() + " is not homogeneous");
    }
    return static_cast<std::int64_t>(*p.degree());
  };
  // nodes 0..n-1: rows of A; n..2n-1: columns of A
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!mf.A(i, j).is_zero()) edges.push_back({i, n + j, entry_degree(mf.A(i, j), "A", i, j)});
      if (!mf.B(i, j).is_zero()) edges.push_back({n + i, j, entry_degree(mf.B(i, j), "B", i, j) - w});
    }
  }
  std::vector<bool> anchor(2 * n, false);
  for (std::size_t i = 0; i < n; ++i) anchor[i] = true;
  const auto pot = detail::solve_degree_constraints(2 * n, edges, anchor);
  if (!pot) fail(ErrorKind::Inconsistent, "entry degrees of A and B admit no common grading");
  Grading g;
  g.row_degrees.assign(pot->begin(), pot->begin() + static_cast<std::ptrdiff_t>(n));
  g.col_degrees.assign(pot->begin() + static_cast<std::ptrdiff_t>(n), pot->end());
  return g;
}

MfReport verify_mf(const MatrixFactorization& mf) {
  MfReport rep;
  const std::size_t n = mf.A.rows();
  const bool same_ring = mf.A.nvars() == mf.f.nvars() && mf.B.nvars() == mf.f.nvars() &&
                         mf.A.field() == mf.f.field() && mf.B.field() == mf.f.field();
  rep.shapes_ok = same_ring && mf.A.is_square() && mf.B.is_square() && mf.B.rows() == n && n > 0;
  if (!rep.shapes_ok) {
    rep.failures.push_back("A and B must be nonempty square matrices of one size over the ring of f");
    return rep;
  }
  rep.f_homogeneous = !mf.f.is_zero() && mf.f.is_homogeneous() && *mf.f.degree() >= 1;
  if (!rep.f_homogeneous) rep.failures.push_back("f is not a form of positive degree");

  const PolyMatrix fI = PolyMatrix::scalar(mf.f, n);
  rep.ab_ok = mf.A * mf.B == fI;
  if (!rep.ab_ok) rep.failures.push_back("A*B != f*I");
  rep.ba_ok = mf.B * mf.A == fI;
  if (!rep.ba_ok) rep.failures.push_back("B*A != f*I");

  rep.minimal = true;
  for (const PolyMatrix* m : {&mf.A, &mf.B}) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const MultiPoly& p = (*m)(i, j);
        if (!p.is_zero() && p.terms().count(Exponent(p.nvars(), 0)) != 0) rep.minimal = false;
      }
    }
  }
  if (!rep.minimal) rep.failures.push_back("a matrix entry has a nonzero constant term (not minimal)");

  if (rep.f_homogeneous) {
    if (mf.A.grading()) {
      const Grading& g = *mf.A.grading();
      Grading gb{g.col_degrees, g.row_degrees};
      for (auto& d : gb.col_degrees) d += *mf.f.degree();
      rep.grading_ok = mf.A.grading_consistent(g) && mf.B.grading_consistent(gb);
      rep.grading = g;
      if (!rep.grading_ok) rep.failures.push_back("attached grading does not fit the entries of A and B");
    } else {
      try {
        rep.grading = infer_pair_grading(mf);
        rep.grading_ok = true;
      } catch (const Error& e) {
        rep.failures.push_back(std::string("no consistent grading: ") + e.what());
      }
    }
  } else {
    rep.failures.push_back("grading not checked");
  }
  return rep;
}

MatrixFactorization rank_one_mf(const MultiPoly& a, const MultiPoly& b) {
  MatrixFactorization mf{a * b, PolyMatrix::from_rows({{a}}), PolyMatrix::from_rows({{b}})};
  return mf;
}

MatrixFactorization tensor_mf(const MatrixFactorization& m1, const MatrixFactorization& m2) {
  if (!(m1.f.field() == m2.f.field())) fail(ErrorKind::FieldMismatch, "factorizations over different fields");
  if (m1.f.nvars() != m2.f.nvars()) fail(ErrorKind::ArityMismatch, "factorizations over different rings");
  const Field& k = m1.f.field();
  const std::size_t nv = m1.f.nvars();
  const PolyMatrix i1 = PolyMatrix::identity(k, nv, m1.A.rows());
  const PolyMatrix i2 = PolyMatrix::identity(k, nv, m2.A.rows());
  const PolyMatrix a1 = kron(m1.A, i2);
  const PolyMatrix b1 = kron(m1.B, i2);
  const PolyMatrix a2 = kron(i1, m2.A);
  const PolyMatrix b2 = kron(i1, m2.B);
  return MatrixFactorization{m1.f + m2.f, blocks(a1, a2, -b2, b1), blocks(b1, -a2, b2, a1)};
}

MatrixFactorization koszul_mf(const std::vector<std::pair<MultiPoly, MultiPoly>>& pairs) {
  if (pairs.empty()) fail(ErrorKind::ZeroPolynomial, "no pairs given");
  std::optional<int> degree;
  MultiPoly sum(pairs.front().first.field(), pairs.front().first.nvars());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const MultiPoly prod = pairs[i].first * pairs[i].second;
    if (prod.is_zero()) continue;
    if (!prod.is_homogeneous()) {
      fail(ErrorKind::InhomogeneousInput, "product of pair " + std::to_string(i) + " is not homogeneous");
    }
    if (degree && *degree != *prod.degree()) {
      fail(ErrorKind::InhomogeneousInput, "pair " + std::to_string(i) + " has degree " +
                                              std::to_string(*prod.degree()) + ", expected " + std::to_string(*degree));
    }
    degree = prod.degree();
    sum += prod;
  }
  if (sum.is_zero()) fail(ErrorKind::ZeroPolynomial, "sum of products is zero");
  MatrixFactorization mf = rank_one_mf(pairs.front().first, pairs.front().second);
  for (std::size_t i = 1; i < pairs.size(); ++i) mf = tensor_mf(mf, rank_one_mf(pairs[i].first, pairs[i].second));
  return mf;
}

MatrixFactorization koszul_hesse(const HesseCubic& curve) {
  const Field& k = curve.field();
  const auto x = plain_x(k);
  const MultiPoly q = x[2].pow(2) - x[0] * x[1] * (Scalar(k, 3) * curve.psi);
  MatrixFactorization mf = koszul_mf({{x[0], x[0].pow(2)}, {x[1].pow(2), x[1]}, {q, x[2]}});
  CUBICMCM_ASSERT(mf.f == curve.f, "Koszul pairs do not sum to the Hesse cubic");
  return mf;
}

MatrixFactorization koszul_reference(const HesseCubic& curve) {
  const Field& k = curve.field();
  const auto x = plain_x(k);
  const MultiPoly z(k, kVars);
  const MultiPoly q = x[2].pow(2) - x[0] * x[1] * (Scalar(k, 3) * curve.psi);
  const MultiPoly x00 = x[0].pow(2);
  const MultiPoly x11 = x[1].pow(2);
  PolyMatrix a = PolyMatrix::from_rows({
      {x[0], x11, q, z},
      {-x[1], x00, z, q},
      {-x[2], z, x00, -x11},
      {z, -x[2], x[1], x[0]},
  });
  PolyMatrix b = PolyMatrix::from_rows({
      {x00, -x11, -q, z},
      {x[1], x[0], z, -q},
      {x[2], z, x[0], x11},
      {z, x[2], -x[1], x00},
  });
  return MatrixFactorization{curve.f, std::move(a), std::move(b)};
}

// ---------------------------------------------------------------------------

PolyMatrix moore_template(const std::array<MultiPoly, 3>& a, const std::array<MultiPoly, 3>& x) {
  return PolyMatrix::from_rows({
      {a[0] * x[0], a[2] * x[2], a[1] * x[1]},
      {a[2] * x[1], a[1] * x[0], a[0] * x[2]},
      {a[1] * x[2], a[0] * x[1], a[2] * x[0]},
  });
}

PolyMatrix moore_adjugate_template(const std::array<MultiPoly, 3>& a, const std::array<MultiPoly, 3>& x) {
  auto sq = [](const MultiPoly& p) { return p * p; };
  return PolyMatrix::from_rows({
      {a[1] * a[2] * sq(x[0]) - sq(a[0]) * x[1] * x[2], a[0] * a[1] * sq(x[1]) - sq(a[2]) * x[0] * x[2],
       a[0] * a[2] * sq(x[2]) - sq(a[1]) * x[0] * x[1]},
      {a[0] * a[1] * sq(x[2]) - sq(a[2]) * x[0] * x[1], a[0] * a[2] * sq(x[0]) - sq(a[1]) * x[1] * x[2],
       a[1] * a[2] * sq(x[1]) - sq(a[0]) * x[0] * x[2]},
      {a[0] * a[2] * sq(x[1]) - sq(a[1]) * x[0] * x[2], a[1] * a[2] * sq(x[2]) - sq(a[0]) * x[0] * x[1],
       a[0] * a[1] * sq(x[0]) - sq(a[2]) * x[1] * x[2]},
  });
}

MultiPoly moore_identity(const std::array<MultiPoly, 3>& a, const std::array<MultiPoly, 3>& x) {
  return a[0] * a[1] * a[2] * (x[0].pow(3) + x[1].pow(3) + x[2].pow(3)) -
         (a[0].pow(3) + a[1].pow(3) + a[2].pow(3)) * x[0] * x[1] * x[2];
}

PolyMatrix moore_matrix(const CurvePoint& p) { return moore_template(point_constants(p), plain_x(p[0].field())); }

std::array<MultiPoly, 3> symbolic_x(const Field& field) {
  return {var(field, 6, 0), var(field, 6, 1), var(field, 6, 2)};
}

std::array<MultiPoly, 3> symbolic_a(const Field& field) {
  return {var(field, 6, 3), var(field, 6, 4), var(field, 6, 5)};
}

MatrixFactorization moore_mf(const HesseCubic& curve, const CurvePoint& p) {
  require_point(curve, p);
  if (p.has_zero_coordinate()) {
    fail(ErrorKind::OrderThreePoint, to_string(p) + " has a zero coordinate (a point of order 3)");
  }
  PolyMatrix a = moore_matrix(p);
  PolyMatrix b = adjugate(a) * (p[0] * p[1] * p[2]).inverse();
  return MatrixFactorization{curve.f, std::move(a), std::move(b)};
}

MatrixFactorization skyscraper_mf(const HesseCubic& curve, const CurvePoint& p) {
  require_point(curve, p);
  const Field& k = curve.field();
  const auto c = point_constants(p);
  const auto x = plain_x(k);
  const MultiPoly m01 = c[0] * x[1] - c[1] * x[0];
  const MultiPoly m02 = c[0] * x[2] - c[2] * x[0];
  const MultiPoly m12 = c[1] * x[2] - c[2] * x[1];
  const std::array<std::pair<const MultiPoly*, const MultiPoly*>, 3> order{
      {{&m12, &m01}, {&m12, &m02}, {&m01, &m02}}};
  const MultiPoly* l1 = nullptr;
  const MultiPoly* l2 = nullptr;
  for (const auto& [u, v] : order) {
    if (independent_linear_forms(*u, *v)) {
      l1 = u;
      l2 = v;
      break;
    }
  }
  CUBICMCM_ASSERT(l1 != nullptr, "no independent pair of minors for a projective point");

  // unknowns: coefficients of f1 then f2 on the quadric monomials
  const auto quad = monomials_of_degree(kVars, 2);
  const auto cubic = monomials_of_degree(kVars, 3);
  std::vector<std::vector<Scalar>> mat(cubic.size(), std::vector<Scalar>(2 * quad.size(), Scalar::zero(k)));
  for (std::size_t u = 0; u < 2 * quad.size(); ++u) {
    const MultiPoly& l = u < quad.size() ? *l1 : *l2;
    const MultiPoly col = l * MultiPoly::monomial(k, quad[u % quad.size()], Scalar::one(k));
    for (std::size_t r = 0; r < cubic.size(); ++r) mat[r][u] = col.coefficient(cubic[r]);
  }
  std::vector<Scalar> rhs;
  for (const auto& e : cubic) rhs.push_back(curve.f.coefficient(e));
  std::vector<Scalar> sol;
  try {
    sol = solve_linear(k, mat, rhs);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoSolution) throw;
    fail(ErrorKind::NotOnCurve, "f is not in the ideal of " + to_string(p));
  }
  MultiPoly f1(k, kVars);
  MultiPoly f2(k, kVars);
  for (std::size_t u = 0; u < quad.size(); ++u) {
    f1.add_term(quad[u], sol[u]);
    f2.add_term(quad[u], sol[quad.size() + u]);
  }
  CUBICMCM_ASSERT(*l1 * f1 + *l2 * f2 == curve.f, "skyscraper decomposition does not re-expand to f");
  PolyMatrix a = PolyMatrix::from_rows({{*l2, f1}, {-*l1, f2}});
  PolyMatrix b = PolyMatrix::from_rows({{f2, -f1}, {*l1, *l2}});
  return MatrixFactorization{curve.f, std::move(a), std::move(b)};
}

PolyMatrix skyscraper_template(const std::array<MultiPoly, 3>& a, const std::array<MultiPoly, 3>& x) {
  auto sq = [](const MultiPoly& p) { return p * p; };
  return PolyMatrix::from_rows({
      {a[1] * x[2] - a[2] * x[1], a[0] * x[1] - a[1] * x[0]},
      {a[0] * a[2] * sq(x[0]) + sq(a[0]) * x[0] * x[2] - sq(a[1]) * x[1] * x[2] - sq(a[2]) * sq(x[2]),
       sq(a[2]) * x[0] * x[2] + a[0] * a[2] * sq(x[2]) - sq(a[0]) * sq(x[0]) - a[0] * a[1] * sq(x[1])},
  });
}

MatrixFactorization skyscraper_explicit(const HesseCubic& curve, const CurvePoint& p) {
  require_point(curve, p);
  if (p.has_zero_coordinate()) {
    fail(ErrorKind::InflectionPoint, to_string(p) + " is an inflection point (zero coordinate)");
  }
  PolyMatrix a = skyscraper_template(point_constants(p), plain_x(curve.field()));
  PolyMatrix b = adjugate(a) * (p[0] * p[1] * p[2]).inverse();
  return MatrixFactorization{curve.f, std::move(a), std::move(b)};
}

// ---------------------------------------------------------------------------

std::string to_string(MfSide side) { return side == MfSide::A ? "A" : "B"; }

MfSide parse_side(const std::string& text) {
  if (text == "A" || text == "a") return MfSide::A;
  if (text == "B" || text == "b") return MfSide::B;
  fail(ErrorKind::InvalidDescriptor, "side must be A or B, got '" + text + "'");
}

BettiTable betti_from_mf(const MatrixFactorization& mf, MfSide side) {
  const MfReport rep = verify_mf(mf);
  if (!rep.shapes_ok) fail(ErrorKind::DimensionMismatch, rep.failures.front());
  if (!rep.minimal) fail(ErrorKind::NotMinimal, "factorization has unit entries; its Betti table is not read off");
  if (!rep.grading_ok) {
    if (mf.A.grading()) fail(ErrorKind::Inconsistent, "attached grading does not fit the entries");
    infer_pair_grading(mf);  // throws the precise error
    fail(ErrorKind::Inconsistent, "grading could not be determined");
  }
  const Grading& g = *rep.grading;
  const std::int64_t w = *mf.f.degree();
  BettiTable t;
  auto bump = [&t](int i, std::int64_t j) { t.set(i, j, t.window(i, j) + 1); };
  if (side == MfSide::A) {
    for (auto d : g.row_degrees) bump(0, d);
    for (auto d : g.col_degrees) bump(1, d);
  } else {
    for (auto d : g.col_degrees) bump(0, d);
    for (auto d : g.row_degrees) bump(1, d + w);
  }
  return t.normalized();
}

// ---------------------------------------------------------------------------

std::vector<CurvePoint> point_search(const HesseCubic& curve, bool require_nonzero_coords) {
  const Field& k = curve.field();
  if (k.is_rational()) fail(ErrorKind::FieldMismatch, "point_search enumerates prime fields only");
  const std::uint64_t p = k.modulus();
  std::vector<CurvePoint> out;
  auto s = [&k](std::uint64_t v) { return Scalar(k, static_cast<std::int64_t>(v)); };
  auto consider = [&](const CurvePoint& pt) {
    if (require_nonzero_coords && pt.has_zero_coordinate()) return;
    if (on_curve(curve, pt)) out.push_back(pt);
  };
  consider(CurvePoint{{s(0), s(0), s(1)}});
  for (std::uint64_t z = 0; z < p; ++z) consider(CurvePoint{{s(0), s(1), s(z)}});
  for (std::uint64_t y = 0; y < p; ++y) {
    for (std::uint64_t z = 0; z < p; ++z) consider(CurvePoint{{s(1), s(y), s(z)}});
  }
  return out;
}

std::vector<CurvePoint> rational_point_search(const HesseCubic& curve, std::int64_t height,
                                              bool require_nonzero_coords) {
  const Field& k = curve.field();
  if (!k.is_rational()) fail(ErrorKind::FieldMismatch, "rational_point_search needs the rational field");
  if (height < 0 || height > 1000) fail(ErrorKind::InvalidDescriptor, "height must lie in [0, 1000]");
  std::vector<CurvePoint> out;
  for (std::int64_t a = 0; a <= height; ++a) {
    for (std::int64_t b = -height; b <= height; ++b) {
      if (a == 0 && b < 0) continue;
      for (std::int64_t c = -height; c <= height; ++c) {
        if (a == 0 && b == 0 && c <= 0) continue;
        if (std::gcd(std::gcd(a, b), c) != 1) continue;
        if (require_nonzero_coords && (a == 0 || b == 0 || c == 0)) continue;
        const Scalar lead(k, a != 0 ? a : (b != 0 ? b : c));
        const Scalar inv = lead.inverse();
        CurvePoint pt{{Scalar(k, a) * inv, Scalar(k, b) * inv, Scalar(k, c) * inv}};
        if (on_curve(curve, pt)) out.push_back(pt);
      }
    }
  }
  return out;
}

}  // namespace cubicmcm
