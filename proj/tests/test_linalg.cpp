#include <gtest/gtest.h>

#include "catx/common.hpp"
#include "catx/linalg.hpp"

using namespace catx;

namespace {

Matrix M(std::vector<std::vector<long>> rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = Rational(rows[r][c]);
  }
  return m;
}

}  // namespace

TEST(Rational, ParsesCanonically) {
  EXPECT_EQ(parse_rational("2/4"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-3"), Rational(-3));
  EXPECT_EQ(parse_rational("+6/3"), Rational(2));
  EXPECT_EQ(to_string(parse_rational("-4/6")), "-2/3");
  EXPECT_THROW(parse_rational("10/-5"), InputError);
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", "1.5", "a", "1/", "/2", "1/2/3", " 1"}) {
    EXPECT_THROW(parse_rational(bad), InputError) << bad;
  }
}

TEST(Matrix, DeterminantAndInverse) {
  const Matrix a = M({{2, 1}, {7, 4}});
  EXPECT_EQ(determinant(a), 1);
  const auto inv = inverse(a);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(a * *inv, Matrix::identity(2));
  EXPECT_FALSE(inverse(M({{1, 2}, {2, 4}})).has_value());
  EXPECT_EQ(determinant(M({{0, 1}, {1, 0}})), -1);
}

TEST(Matrix, NullSpacesAndSolve) {
  const Matrix a = M({{1, 2, 3}, {2, 4, 6}});
  EXPECT_EQ(rank(a), 1u);
  for (const auto& v : nullspace(a)) {
    for (std::size_t r = 0; r < a.rows(); ++r) {
      Rational s = 0;
      for (std::size_t c = 0; c < a.cols(); ++c) s += a(r, c) * v[c];
      EXPECT_EQ(s, 0);
    }
  }
  EXPECT_EQ(nullspace(a).size(), 2u);
  EXPECT_EQ(left_nullspace(a).size(), 1u);

  const auto x = solve_left(M({{1, 0}, {1, 1}}), Vector{Rational(3), Rational(2)});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], 1);
  EXPECT_EQ((*x)[1], 2);
  EXPECT_FALSE(solve_left(M({{1, 0}, {1, 0}}), Vector{Rational(0), Rational(1)}).has_value());
}

TEST(Subspace, CanonicalForm) {
  Subspace a(3), b(3);
  a.add({Rational(1), Rational(1), Rational(0)});
  a.add({Rational(0), Rational(1), Rational(1)});
  b.add({Rational(1), Rational(2), Rational(1)});
  b.add({Rational(1), Rational(0), Rational(-1)});
  EXPECT_EQ(a, b);
  EXPECT_FALSE(a.add({Rational(2), Rational(3), Rational(1)}));
  EXPECT_TRUE(a.contains(Vector{Rational(1), Rational(0), Rational(-1)}));
  EXPECT_FALSE(a.contains(Vector{Rational(0), Rational(0), Rational(1)}));
  EXPECT_EQ(a.dim(), 2u);
}
