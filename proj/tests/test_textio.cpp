#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gwa/textio.hpp"
#include "test_support.hpp"

using namespace gwa;
using gwa::testing::Rng;

TEST_CASE("rationals print without unit denominators") {
  CHECK(to_string(Rational(3)) == "3");
  CHECK(to_string(Rational(-5, 2)) == "-5/2");
  CHECK(parse_rational("7/3") == Rational(7, 3));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK_THROWS_AS(parse_rational("1/0"), parse_error);
}

TEST_CASE("parameter payloads") {
  CHECK(parse_params("0") == GWAParameters::multiple_root());
  CHECK(parse_params("3") == GWAParameters::congruent_root(3));
  CHECK(parse_params("generic") == GWAParameters::generic_root());
  CHECK(parse_params("1/2") == GWAParameters::half_integer_root(Rational(1, 2)));
  CHECK(parse_params("-3/2") == GWAParameters::half_integer_root(Rational(-3, 2)));
  CHECK_THROWS_AS(parse_params("-1"), parse_error);
  CHECK_THROWS_AS(parse_params("2/3"), parse_error);
  for (const GWAParameters& params : gwa::testing::all_cases()) {
    std::string text = to_string(params);
    CHECK(parse_params(text.substr(4)) == params);  // strip "m = "
  }
}

TEST_CASE("coordinate rendering") {
  CHECK(to_string(Coordinate(Rational(1, 3), 1)) == "1/3 + m");
  CHECK(to_string(Coordinate(Rational(0), 1)) == "m");
  CHECK(to_string(Coordinate(Rational(0), -2)) == "-2m");
  CHECK(to_string(Coordinate(Rational(2), -1)) == "2 - m");
  CHECK(to_string(Coordinate(Rational(-7, 2))) == "-7/2");
}

TEST_CASE("picexpr parsing and normal forms") {
  GWAParameters m0 = GWAParameters::multiple_root();
  PicardElement g = classify(m0, parse_picexpr(m0, "S^3 * w * i{0,2}"));
  CHECK(g.sign() == -1);
  // ι's transported through S^3 ω: flips at (S^3 ω)(0), (S^3 ω)(2) = 2, 0
  CHECK(g.flips() == std::set<Coordinate>{Coordinate::integer(0), Coordinate::integer(2)});
  CHECK(classify(m0, parse_picexpr(m0, "i{0} * i{0}")).is_identity());
  CHECK(classify(m0, parse_picexpr(m0, "1")).is_identity());
  CHECK(classify(m0, parse_picexpr(m0, "S^-2")) ==
        PicardElement::make(m0, +1, Coordinate::integer(-2), {}));

  GWAParameters h = GWAParameters::half_integer_root(Rational(1, 2));
  CHECK(classify(h, parse_picexpr(h, "H^2")) ==
        classify(h, parse_picexpr(h, "S")));
  CHECK(classify(h, parse_picexpr(h, "H^-1 * H")).is_identity());

  GWAParameters gg = GWAParameters::generic_root();
  PicardElement im = classify(gg, parse_picexpr(gg, "i0{1} * im{0}"));
  CHECK(im.flips() ==
        std::set<Coordinate>{Coordinate::integer(1), Coordinate(Rational(0), 1)});

  CHECK_THROWS_AS(parse_picexpr(m0, "i0{1}"), parse_error);
  CHECK_THROWS_AS(parse_picexpr(gg, "i{1}"), parse_error);
  CHECK_THROWS_AS(parse_picexpr(m0, "S^"), parse_error);
  CHECK_THROWS_AS(parse_picexpr(m0, ""), parse_error);
  CHECK_THROWS_AS(classify(m0, parse_picexpr(m0, "H")), domain_error);  // wrong case for H
}

TEST_CASE("picard normal form text round-trips through the parser") {
  Rng rng(313);
  for (const GWAParameters& params : gwa::testing::all_cases()) {
    for (int iter = 0; iter < 200; ++iter) {
      PicardElement g = classify(params, gwa::testing::random_word(rng, params, 8));
      CHECK(classify(params, parse_picexpr(params, to_string(g))) == g);
    }
  }
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_picexpr(GWAParameters::multiple_root(), "S^3 * q");
    CHECK(false);
  } catch (const parse_error& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 7);
  }
}
