#include <gtest/gtest.h>

#include <random>

#include "cubicmcm/error.hpp"
#include "cubicmcm/poly_matrix.hpp"

using namespace cubicmcm;

namespace {

const std::vector<std::string> kXyz{"x0", "x1", "x2"};

MultiPoly P(const Field& f, std::string_view text) { return MultiPoly::parse(f, kXyz, text); }

MultiPoly random_poly(std::mt19937_64& rng, const Field& field, int max_deg, int terms) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<std::int64_t> coef(-5, 5);
  MultiPoly p(field, 3);
  for (int t = 0; t < terms; ++t) {
    Exponent e(3);
    int budget = deg(rng);
    for (std::size_t v = 0; v < 3 && budget > 0; ++v) {
      std::uniform_int_distribution<int> take(0, budget);
      e[v] = static_cast<std::uint32_t>(take(rng));
      budget -= static_cast<int>(e[v]);
    }
    p.add_term(e, Scalar(field, coef(rng)));
  }
  return p;
}

PolyMatrix random_matrix(std::mt19937_64& rng, const Field& field, std::size_t n, int max_deg, int terms) {
  PolyMatrix m(field, 3, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = random_poly(rng, field, max_deg, terms);
  }
  return m;
}

// Homogeneous entries of degree col_j - row_i.
PolyMatrix random_graded(std::mt19937_64& rng, const Field& field, const Grading& g) {
  PolyMatrix m(field, 3, g.row_degrees.size(), g.col_degrees.size());
  std::uniform_int_distribution<std::int64_t> coef(-3, 3);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::int64_t d = g.col_degrees[j] - g.row_degrees[i];
      if (d < 0) continue;
      MultiPoly p(field, 3);
      for (std::int64_t a = 0; a <= d; ++a) {
        for (std::int64_t b = 0; a + b <= d; ++b) {
          const Exponent e{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
                           static_cast<std::uint32_t>(d - a - b)};
          p.add_term(e, Scalar(field, coef(rng)));
        }
      }
      if (p.is_zero()) p.add_term({static_cast<std::uint32_t>(d), 0, 0}, Scalar(field, 1));
      m.at(i, j) = p;
    }
  }
  return m;
}

// Leibniz formula over all permutations, as an independent determinant.
MultiPoly leibniz(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  MultiPoly total(m.field(), m.nvars());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    MultiPoly term = MultiPoly::constant(m.field(), m.nvars(), inversions % 2 == 0 ? 1 : -1);
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST(PolyMatrix, Basics) {
  const Field q = Field::rational();
  const PolyMatrix m = PolyMatrix::from_rows({{P(q, "x0"), P(q, "x1")}, {P(q, "x2"), P(q, "0")}});
  EXPECT_EQ(m.transpose()(0, 1), P(q, "x2"));
  EXPECT_EQ((m * PolyMatrix::identity(q, 3, 2)), m);
  EXPECT_TRUE((m - m).is_zero());
  EXPECT_EQ(m.minor(0, 0).rows(), 1u);
  EXPECT_EQ(m.minor(0, 0)(0, 0), P(q, "0"));
  EXPECT_THROW(PolyMatrix::from_rows({{P(q, "x0")}, {P(q, "x0"), P(q, "x1")}}), Error);
  EXPECT_THROW(m * PolyMatrix::identity(q, 3, 3), Error);
  EXPECT_THROW(determinant(PolyMatrix(q, 3, 2, 3)), Error);
}

TEST(PolyMatrix, DeterminantExamples) {
  const Field q = Field::rational();
  const PolyMatrix m = PolyMatrix::from_rows({{P(q, "x0"), P(q, "x1")}, {P(q, "x2"), P(q, "x0")}});
  EXPECT_EQ(determinant(m), P(q, "x0^2 - x1*x2"));
  EXPECT_EQ(adjugate(m), PolyMatrix::from_rows({{P(q, "x0"), P(q, "-x1")}, {P(q, "-x2"), P(q, "x0")}}));
  const PolyMatrix one = PolyMatrix::from_rows({{P(q, "x1^2")}});
  EXPECT_EQ(determinant(one), P(q, "x1^2"));
  EXPECT_EQ(adjugate(one)(0, 0), P(q, "1"));
}

TEST(PolyMatrix, DeterminantMatchesLeibniz) {
  std::mt19937_64 rng(5);
  for (const Field& field : {Field::rational(), Field::prime(5)}) {
    for (std::size_t n = 1; n <= 5; ++n) {
      for (int rep = 0; rep < 6; ++rep) {
        const PolyMatrix m = random_matrix(rng, field, n, 2, 2);
        EXPECT_EQ(determinant(m), leibniz(m));
      }
    }
  }
}

TEST(PolyMatrix, AdjugateIdentity) {
  std::mt19937_64 rng(6);
  for (const Field& field : {Field::rational(), Field::prime(7)}) {
    for (std::size_t n = 1; n <= 4; ++n) {
      for (int rep = 0; rep < 5; ++rep) {
        const PolyMatrix m = random_matrix(rng, field, n, 2, 3);
        const PolyMatrix d = PolyMatrix::scalar(determinant(m), n);
        EXPECT_EQ(m * adjugate(m), d);
        EXPECT_EQ(adjugate(m) * m, d);
      }
    }
  }
}

TEST(PolyMatrix, DeterminantMultiplicative) {
  std::mt19937_64 rng(8);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int rep = 0; rep < 4; ++rep) {
      const PolyMatrix a = random_matrix(rng, Field::rational(), n, 1, 2);
      const PolyMatrix b = random_matrix(rng, Field::rational(), n, 1, 2);
      EXPECT_EQ(determinant(a * b), determinant(a) * determinant(b));
      EXPECT_EQ(determinant(a.transpose()), determinant(a));
    }
  }
}

TEST(SolveLinear, Examples) {
  const Field q = Field::rational();
  auto s = [&](std::int64_t v) { return Scalar(q, v); };
  const auto x = solve_linear(q, {{s(1), s(2)}, {s(3), s(4)}}, {s(5), s(6)});
  EXPECT_EQ(x[0], s(-4));
  EXPECT_EQ(x[1], Scalar::parse(q, "9/2"));
  // free variable set to zero
  const auto y = solve_linear(q, {{s(1), s(1)}}, {s(3)});
  EXPECT_EQ(y[0], s(3));
  EXPECT_EQ(y[1], s(0));
  try {
    solve_linear(q, {{s(1), s(1)}, {s(2), s(2)}}, {s(1), s(3)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoSolution);
  }
}

TEST(SolveLinear, RandomConsistentSystems) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::int64_t> v(-6, 6);
  for (const Field& field : {Field::rational(), Field::prime(11)}) {
    for (int rep = 0; rep < 40; ++rep) {
      const std::size_t rows = 2 + rep % 4;
      const std::size_t cols = 1 + rep % 5;
      std::vector<std::vector<Scalar>> a(rows, std::vector<Scalar>(cols));
      std::vector<Scalar> x0(cols);
      for (auto& row : a) {
        for (auto& e : row) e = Scalar(field, v(rng));
      }
      for (auto& e : x0) e = Scalar(field, v(rng));
      std::vector<Scalar> b(rows, Scalar::zero(field));
      for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) b[i] += a[i][j] * x0[j];
      }
      const auto x = solve_linear(field, a, b);
      for (std::size_t i = 0; i < rows; ++i) {
        Scalar acc = Scalar::zero(field);
        for (std::size_t j = 0; j < cols; ++j) acc += a[i][j] * x[j];
        EXPECT_EQ(acc, b[i]);
      }
    }
  }
}

TEST(Grading, InferAndCheck) {
  const Field q = Field::rational();
  const PolyMatrix m = PolyMatrix::from_rows({{P(q, "x0"), P(q, "x1^2")}, {P(q, "1"), P(q, "x2")}});
  const Grading g = grading_infer(m);
  EXPECT_EQ(g, (Grading{{0, 1}, {1, 2}}));
  EXPECT_TRUE(m.grading_consistent(g));
  EXPECT_FALSE(m.grading_consistent(Grading{{0, 0}, {1, 2}}));
  PolyMatrix n = m;
  EXPECT_THROW(n.set_grading(Grading{{0, 0}, {1, 2}}), Error);
  n.set_grading(g);
  EXPECT_TRUE(n.grading().has_value());
  n.at(0, 0) = P(q, "x0");
  EXPECT_FALSE(n.grading().has_value());
  try {
    grading_infer(PolyMatrix::from_rows({{P(q, "x0 + 1")}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotHomogeneous);
  }
  try {
    grading_infer(PolyMatrix::from_rows({{P(q, "x0"), P(q, "x1")}, {P(q, "x2"), P(q, "x0^2")}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Inconsistent);
  }
}

TEST(Grading, ProductComposes) {
  const Field q = Field::rational();
  PolyMatrix a = PolyMatrix::from_rows({{P(q, "x0"), P(q, "x1")}});
  PolyMatrix b = PolyMatrix::from_rows({{P(q, "x2")}, {P(q, "x0")}});
  a.set_grading({{0}, {1, 1}});
  b.set_grading({{1, 1}, {2}});
  const PolyMatrix c = a * b;
  ASSERT_TRUE(c.grading().has_value());
  EXPECT_EQ(*c.grading(), (Grading{{0}, {2}}));
}

TEST(Grading, InferenceRecoversRandomGradings) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::int64_t> deg(0, 3);
  for (int rep = 0; rep < 60; ++rep) {
    const std::size_t rows = 1 + rep % 4;
    const std::size_t cols = 1 + (rep / 4) % 4;
    Grading g;
    for (std::size_t i = 0; i < rows; ++i) g.row_degrees.push_back(deg(rng));
    const std::int64_t top = *std::max_element(g.row_degrees.begin(), g.row_degrees.end());
    for (std::size_t j = 0; j < cols; ++j) g.col_degrees.push_back(top + deg(rng));
    const std::int64_t low = *std::min_element(g.row_degrees.begin(), g.row_degrees.end());
    for (auto& r : g.row_degrees) r -= low;
    for (auto& c : g.col_degrees) c -= low;
    const PolyMatrix m = random_graded(rng, Field::rational(), g);
    EXPECT_EQ(grading_infer(m), g);
  }
}

TEST(DegreeConstraints, Components) {
  using detail::DegreeConstraint;
  const auto sol = detail::solve_degree_constraints(
      5, {{0, 1, 2}, {1, 2, -1}, {3, 4, 3}}, {true, false, false, false, false});
  ASSERT_TRUE(sol.has_value());
  EXPECT_EQ(*sol, (std::vector<std::int64_t>{0, 2, 1, 0, 3}));
  EXPECT_FALSE(detail::solve_degree_constraints(2, {{0, 1, 1}, {1, 0, 1}}, {true, false}).has_value());
}
