#include <doctest.h>

#include <random>

#include "rcoptoric/errors.hpp"
#include "rcoptoric/rational_linalg.hpp"

using namespace rcoptoric;

namespace {

RationalMatrix random_matrix(std::mt19937_64& rng, int n) {
  RationalMatrix m(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      m.at(r, c) = Rational(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 7));
      m.at(r, c).canonicalize();
    }
  }
  return m;
}

} // namespace

TEST_CASE("rational formatting is exact") {
  Rational half(1, 2);
  CHECK(to_string(half) == "1/2");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(to_string(Rational(-3, 9)) == "-1/3");
  CHECK(to_string(Rational(0)) == "0");
}

TEST_CASE("inverse is exact on a known matrix") {
  RationalMatrix m = RationalMatrix::from_int_rows({{2, 1}, {1, 1}});
  RationalMatrix inv = invert_exact(m);
  CHECK(inv.at(0, 0) == Rational(1));
  CHECK(inv.at(0, 1) == Rational(-1));
  CHECK(inv.at(1, 0) == Rational(-1));
  CHECK(inv.at(1, 1) == Rational(2));
  CHECK(m.multiply(inv).is_identity());
}

TEST_CASE("singular matrices are rejected") {
  RationalMatrix s = RationalMatrix::from_int_rows({{1, 2}, {2, 4}});
  CHECK_THROWS_AS(invert_exact(s), PreconditionError);
  CHECK(rational_rank(s) == 1);
}

TEST_CASE("double inversion is the identity transform") {
  std::mt19937_64 rng(12345);
  int found = 0;
  while (found < 5) {
    RationalMatrix m = random_matrix(rng, 4);
    if (rational_rank(m) < 4) continue;
    ++found;
    RationalMatrix inv = invert_exact(m);
    CHECK(m.multiply(inv).is_identity());
    CHECK(inv.multiply(m).is_identity());
    CHECK(invert_exact(inv) == m);
  }
}

TEST_CASE("rank is invariant under row stacking with dependent rows") {
  RationalMatrix m = RationalMatrix::from_int_rows({{1, 2, 3}, {4, 5, 6}});
  CHECK(rational_rank(m) == 2);

  // Stack the sum of the two rows below; the rank must not move.
  RationalMatrix dependent = RationalMatrix::from_int_rows({{5, 7, 9}});
  CHECK(rational_rank(m.stacked_below(dependent)) == 2);

  RationalMatrix independent = RationalMatrix::from_int_rows({{1, 0, 0}});
  CHECK(rational_rank(m.stacked_below(independent)) == 3);

  CHECK(rational_rank(RationalMatrix::identity(6)) == 6);
  CHECK(rational_rank(RationalMatrix(3, 5)) == 0);
}

TEST_CASE("multiplication fundamentals") {
  RationalMatrix a = RationalMatrix::from_int_rows({{1, 2}, {3, 4}});
  RationalMatrix b = RationalMatrix::from_int_rows({{0, 1}, {1, 0}});
  RationalMatrix ab = a.multiply(b);
  CHECK(ab.at(0, 0) == Rational(2));
  CHECK(ab.at(0, 1) == Rational(1));
  CHECK(ab.at(1, 0) == Rational(4));
  CHECK(ab.at(1, 1) == Rational(3));
  CHECK(a.multiply(RationalMatrix::identity(2)) == a);
  CHECK_FALSE(a.is_symmetric());
  RationalMatrix sym = RationalMatrix::from_int_rows({{1, 7}, {7, 2}});
  CHECK(sym.is_symmetric());
}
