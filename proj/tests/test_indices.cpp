#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <limits>

#include "amalgam/error.hpp"
#include "amalgam/indices.hpp"
#include "amalgam/rational.hpp"

using namespace amalgam;
using RI = ReciprocalIndex;

namespace {

// Reference values computed in doubles straight from the piecewise-max formula.
double ref_tau1(double u, double v, int d) { return d * std::max({0.0, v - 0.5, u + v - 1.0}); }
double ref_sigma1(double u, double v, int d) { return d * std::min({0.0, v - 0.5, u + v - 1.0}); }
double ref_tau(double u, double v, int d) { return d * std::max({0.0, v - u, u + v - 1.0}); }

}  // namespace

TEST_CASE("rational arithmetic stays reduced") {
  const Rational a(6, -8);
  CHECK(a.num() == -3);
  CHECK(a.den() == 4);
  CHECK(a + Rational(3, 4) == Rational(0));
  CHECK(Rational(1, 3) * Rational(3, 5) == Rational(1, 5));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(-Rational(1, 3) > Rational(-1, 2));
  CHECK(Rational(7, 7).is_integer());
  CHECK(Rational(5, 10).to_string() == "1/2");
  CHECK(Rational(-4).to_string() == "-4");
}

TEST_CASE("rational parse accepts integers and fractions only") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::parse("12") == Rational(12));
  CHECK(Rational::parse("2/4") == Rational(1, 2));
  CHECK_THROWS_AS(Rational::parse("0.5"), Error);
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse(""), Error);
  CHECK_THROWS_AS(Rational::parse("a/b"), Error);
}

TEST_CASE("rational overflow is reported") {
  const Rational big(std::numeric_limits<std::int64_t>::max() / 2);
  try {
    (void)(big * Rational(4));
    FAIL("expected overflow");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Overflow);
  }
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("reciprocal index parses exponents") {
  CHECK(RI::parse("inf").is_infinite());
  CHECK(RI::parse("2").u() == Rational(1, 2));
  CHECK(RI::parse("1/2").u() == Rational(2));
  CHECK(RI::parse("4/3").u() == Rational(3, 4));
  CHECK(RI::parse("2").to_string() == "2");
  CHECK(RI::parse("1/2").to_string() == "1/2");
  CHECK(RI::infinity().to_string() == "inf");
  CHECK_THROWS_AS(RI::parse("0"), Error);
  CHECK_THROWS_AS(RI::parse("-2"), Error);
  CHECK(RI::parse("inf").exponent() == std::numeric_limits<double>::infinity());
}

TEST_CASE("exponent comparisons go through reciprocals") {
  const auto p1 = RI::parse("1"), p2 = RI::parse("2"), pinf = RI::infinity();
  CHECK(p_less_equal(p1, p2));
  CHECK(p_less(p2, pinf));
  CHECK_FALSE(p_less(p2, p2));
  CHECK(p_min(p1, pinf) == p1);
  CHECK(p_max(p1, pinf) == pinf);
}

TEST_CASE("dual index") {
  CHECK(dual_index(RI::parse("2")) == RI::parse("2"));
  CHECK(dual_index(RI::parse("1")).is_infinite());
  CHECK(dual_index(RI::infinity()) == RI::parse("1"));
  CHECK(dual_index(RI::parse("4")) == RI::parse("4/3"));
  CHECK(dual_index(RI::parse("1/2")).is_infinite());
}

TEST_CASE("dimension and alpha validate their range") {
  CHECK_THROWS_AS(Dimension(0), Error);
  CHECK_NOTHROW(Dimension(3));
  CHECK_THROWS_AS(AlphaParam(Rational(0)), Error);
  CHECK_THROWS_AS(AlphaParam(Rational(1)), Error);
  CHECK_NOTHROW(AlphaParam(Rational(1, 3)));
}

TEST_CASE("tau1 and sigma1 match the piecewise formula on a lattice") {
  for (int d = 1; d <= 3; ++d) {
    for (int iu = 0; iu <= 16; ++iu) {
      for (int iv = 0; iv <= 16; ++iv) {
        const RI p(Rational(iu, 8)), q(Rational(iv, 8));
        const double u = iu / 8.0, v = iv / 8.0;
        CHECK(tau1(p, q, Dimension(d)).to_double() == doctest::Approx(ref_tau1(u, v, d)));
        CHECK(sigma1(p, q, Dimension(d)).to_double() == doctest::Approx(ref_sigma1(u, v, d)));
        CHECK(tau(p, q, Dimension(d)).to_double() == doctest::Approx(ref_tau(u, v, d)));
        const auto t = tau_sigma_a(p, q, Dimension(d));
        CHECK(t.a.to_double() == doctest::Approx(d * (u + v - 1)));
      }
    }
  }
}

TEST_CASE("tau1 spot values") {
  const Dimension d1(1);
  // p = 1, q = 1/2: max(0, 2 - 1/2, 1 + 2 - 1) = 2
  CHECK(tau1(RI::parse("1"), RI::parse("1/2"), d1) == Rational(2));
  // p = inf, q = 1: max(0, 1/2, 0) = 1/2
  CHECK(tau1(RI::infinity(), RI::parse("1"), d1) == Rational(1, 2));
  // p = 2, q = 2: everything 0
  CHECK(tau1(RI::parse("2"), RI::parse("2"), Dimension(2)) == Rational(0));
  // sigma1 at p = 2, q = inf: min(0, -1/2, -1/2) = -1/2, times d = 2
  CHECK(sigma1(RI::parse("2"), RI::infinity(), Dimension(2)) == Rational(-1));
}

TEST_CASE("tau1 piece classification and ties") {
  // interior of the zero piece
  auto c = tau1_piece(RI(Rational(1, 4)), RI(Rational(1, 4)));
  CHECK(c.piece == 1);
  CHECK(c.ties == 1u);
  // v - 1/2 piece
  c = tau1_piece(RI(Rational(0)), RI(Rational(1)));
  CHECK(c.piece == 2);
  // u + v - 1 piece
  c = tau1_piece(RI(Rational(1)), RI(Rational(1)));
  CHECK(c.piece == 3);
  // triple point (1/2, 1/2)
  c = tau1_piece(RI(Rational(1, 2)), RI(Rational(1, 2)));
  CHECK(c.ties == 7u);
  // on v = 1/2 with u < 1/2 pieces 1 and 2 tie
  c = tau1_piece(RI(Rational(1, 4)), RI(Rational(1, 2)));
  CHECK(c.ties == 3u);
  // sigma1 at (1, 1): min(0, 1/2, 1) = 0
  CHECK(sigma1_piece(RI(Rational(1)), RI(Rational(1))).piece == 1);
}
