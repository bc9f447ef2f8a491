#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gwa/picard.hpp"
#include "gwa/textio.hpp"
#include "test_support.hpp"

using namespace gwa;
using gwa::testing::Rng;

namespace {

GeneratorToken shift_tok(long n) { return {GeneratorToken::Kind::shift, n, {}}; }
GeneratorToken omega_tok() { return {GeneratorToken::Kind::omega, 0, {}}; }
GeneratorToken iota_tok(std::set<Coordinate> points) {
  return {GeneratorToken::Kind::iota, 0, std::move(points)};
}
GeneratorToken half_tok() { return {GeneratorToken::Kind::half_shift, 0, {}}; }

std::set<Coordinate> ints(std::initializer_list<long> values) {
  std::set<Coordinate> out;
  for (long v : values) out.insert(Coordinate::integer(v));
  return out;
}

}  // namespace

TEST_CASE("generators have the stated normal forms") {
  GWAParameters c3 = GWAParameters::congruent_root(3);
  PicardElement s1 = make_generator(c3, shift_tok(1));
  CHECK(s1.sign() == 1);
  CHECK(s1.offset() == Coordinate::integer(1));
  CHECK(s1.flips().empty());

  GWAParameters m0 = GWAParameters::multiple_root();
  PicardElement w = make_generator(m0, omega_tok());
  CHECK(w.sign() == -1);
  CHECK(w.offset() == Coordinate::integer(-1));

  CHECK(make_generator(c3, omega_tok()).offset() == Coordinate::integer(2));

  GWAParameters h = GWAParameters::half_integer_root(Rational(1, 2));
  PicardElement hs = make_generator(h, half_tok());
  CHECK(hs.sign() == 1);
  CHECK(hs.offset() == Coordinate(Rational(1, 2)));

  CHECK_THROWS_AS(make_generator(m0, half_tok()), domain_error);
  CHECK_THROWS_AS(make_generator(m0, iota_tok({Coordinate(Rational(1, 2))})), domain_error);
}

TEST_CASE("composition frozen examples") {
  GWAParameters m0 = GWAParameters::multiple_root();
  PicardElement i0 = make_generator(m0, iota_tok(ints({0})));
  CHECK(compose(i0, i0).is_identity());

  // S^i ι_j = ι_{i+j} S^i
  for (long i : {-3L, 1L, 4L})
    for (long j : {-2L, 0L, 5L}) {
      PicardElement lhs = compose(make_generator(m0, shift_tok(i)),
                                  make_generator(m0, iota_tok(ints({j}))));
      PicardElement rhs = compose(make_generator(m0, iota_tok(ints({i + j}))),
                                  make_generator(m0, shift_tok(i)));
      CHECK(lhs == rhs);
    }

  // ω ι_0 ω = ι_{-1} in the multiple case
  PicardElement w = make_generator(m0, omega_tok());
  CHECK(compose(compose(w, i0), w) == make_generator(m0, iota_tok(ints({-1}))));
}

TEST_CASE("classify frozen examples") {
  GWAParameters m0 = GWAParameters::multiple_root();
  // S^2 ω S^2 = ω  (since ωS = S^-1 ω)
  CHECK(classify(m0, {shift_tok(2), omega_tok(), shift_tok(2)}) ==
        make_generator(m0, omega_tok()));
  CHECK(classify(m0, {iota_tok(ints({0})), iota_tok(ints({1})), iota_tok(ints({0}))}) ==
        PicardElement::make(m0, +1, Coordinate(), ints({1})));
  CHECK(classify(m0, {}).is_identity());
}

TEST_CASE("dihedral relations hold as normal forms") {
  for (const GWAParameters& params : gwa::testing::all_cases()) {
    PicardElement w = make_generator(params, omega_tok());
    PicardElement s = make_generator(params, shift_tok(1));
    CHECK(compose(w, w).is_identity());
    CHECK(compose(w, s) == compose(inverse(s), w));
    if (params.root_case() == RootCase::half_integer) {
      PicardElement h = make_generator(params, half_tok());
      CHECK(compose(h, h) == s);
    }
  }
}

TEST_CASE("group laws on random elements") {
  Rng rng(1009);
  for (const GWAParameters& params : gwa::testing::all_cases()) {
    for (int iter = 0; iter < 200; ++iter) {
      PicardElement a = classify(params, gwa::testing::random_word(rng, params, 6));
      PicardElement b = classify(params, gwa::testing::random_word(rng, params, 6));
      PicardElement c = classify(params, gwa::testing::random_word(rng, params, 6));
      CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
      CHECK(compose(a, inverse(a)).is_identity());
      CHECK(compose(inverse(a), a).is_identity());
      CHECK(compose(a, PicardElement::identity(params)) == a);
    }
  }
}

TEST_CASE("classify agrees with the simple-action oracle") {
  Rng rng(2027);
  for (const GWAParameters& params : gwa::testing::all_cases()) {
    for (int iter = 0; iter < 150; ++iter) {
      GeneratorWord word = gwa::testing::random_word(rng, params, 8);
      CHECK(classify(params, word) == gwa::testing::oracle_classify(params, word));
    }
  }
}

TEST_CASE("action on simples: involution and half-shift spot values") {
  GWAParameters c2 = GWAParameters::congruent_root(2);
  PicardElement i0 = make_generator(c2, iota_tok(ints({0})));
  CHECK(act_on_simple(i0, SimpleModule::make(c2, SimpleKind::X, 0)) ==
        SimpleModule::make(c2, SimpleKind::Y, 0));
  CHECK(act_on_simple(i0, SimpleModule::make(c2, SimpleKind::Z, 0)) ==
        SimpleModule::make(c2, SimpleKind::Z, 0));
  CHECK(act_on_simple(i0, SimpleModule::make(c2, SimpleKind::X, 1)) ==
        SimpleModule::make(c2, SimpleKind::X, 1));

  GWAParameters g = GWAParameters::generic_root();
  PicardElement im0 = make_generator(g, iota_tok({Coordinate(Rational(0), 1)}));
  CHECK(act_on_simple(im0, SimpleModule::make(g, SimpleKind::Xm, 0)) ==
        SimpleModule::make(g, SimpleKind::Ym, 0));
  CHECK(act_on_simple(im0, SimpleModule::make(g, SimpleKind::X0, 0)) ==
        SimpleModule::make(g, SimpleKind::X0, 0));

  GWAParameters h = GWAParameters::half_integer_root(Rational(1, 2));
  PicardElement hs = make_generator(h, half_tok());
  for (long n = -3; n <= 3; ++n)
    CHECK(act_on_simple(hs, SimpleModule::make(h, SimpleKind::X0, n)) ==
          SimpleModule::make(h, SimpleKind::Xm, n));
  CHECK(act_on_simple(hs, SimpleModule::make_m(h, Coordinate(Rational(1, 3)))) ==
        SimpleModule::make_m(h, Coordinate(Rational(5, 6))));
}

TEST_CASE("action on projectives: iota letter moves") {
  GWAParameters m0 = GWAParameters::multiple_root();
  StructureSequence a = StructureSequence::free_module(m0, 0);
  PicardElement i0 = make_generator(m0, iota_tok(ints({0})));
  StructureSequence ia = act_on_projective(i0, a);
  CHECK(ia.letter_at(0) == Letter::f);
  CHECK(simple_factor(ia, 0) == SimpleModule::make(m0, SimpleKind::Y, 0));

  // congruent: A is fixed by ι_0 because F_0(A) = Z<0>
  GWAParameters c2 = GWAParameters::congruent_root(2);
  StructureSequence ac = StructureSequence::free_module(c2, 0);
  PicardElement ic0 = make_generator(c2, iota_tok(ints({0})));
  CHECK(act_on_projective(ic0, ac) == ac);
  CHECK(act_on_simple(ic0, simple_factor(ac, 0)) == simple_factor(ac, 0));

  // ι_2 moves the pair (c_0, c_2) of A: F_2(A) = X<2>
  PicardElement ic2 = make_generator(c2, iota_tok(ints({2})));
  StructureSequence ia2 = act_on_projective(ic2, ac);
  CHECK(ia2.letter_at(0) == Letter::zm);
  CHECK(ia2.letter_at(2) == Letter::z);
  CHECK(simple_factor(ia2, 2) == SimpleModule::make(c2, SimpleKind::Y, 2));
  CHECK(is_projective(ia2));
}

TEST_CASE("involutions square to the identity on random projectives") {
  Rng rng(3331);
  for (const GWAParameters& params : gwa::testing::all_cases()) {
    for (int iter = 0; iter < 250; ++iter) {
      StructureSequence p = gwa::testing::random_projective(rng, params, 10);
      Coordinate j = gwa::testing::random_flip_point(rng, params, 7);
      PicardElement iota = PicardElement::make(params, +1, Coordinate(), {j});
      CHECK(act_on_projective(iota, act_on_projective(iota, p)) == p);
    }
  }
}

TEST_CASE("factor compatibility for random elements") {
  Rng rng(4441);
  for (const GWAParameters& params : gwa::testing::all_cases()) {
    for (int iter = 0; iter < 120; ++iter) {
      StructureSequence p = gwa::testing::random_projective(rng, params, 8);
      PicardElement g = classify(params, gwa::testing::random_word(rng, params, 6));
      StructureSequence gp = act_on_projective(g, p);
      CHECK(is_projective(gp));
      long m_int = params.integral_m() ? params.m_integer() : 0;
      for (long j = p.lo() - 3; j < p.hi() + m_int + 3; ++j) {
        SimpleModule image = act_on_simple(g, simple_factor(p, j));
        Coordinate y = image.coordinate();
        FiberFamily fam = on_integer_lattice(params, y) ? FiberFamily::integer_family
                                                        : FiberFamily::m_family;
        long idx = fam == FiberFamily::integer_family ? y.as_integer()
                                                      : (y - params.m()).as_integer();
        CHECK(simple_factor(gp, idx, fam) == image);
        if (params.noncongruent()) {
          SimpleModule image_m = act_on_simple(g, simple_factor(p, j, FiberFamily::m_family));
          Coordinate ym = image_m.coordinate();
          FiberFamily fam_m = on_integer_lattice(params, ym) ? FiberFamily::integer_family
                                                             : FiberFamily::m_family;
          long idx_m = fam_m == FiberFamily::integer_family ? ym.as_integer()
                                                            : (ym - params.m()).as_integer();
          CHECK(simple_factor(gp, idx_m, fam_m) == image_m);
        }
      }
    }
  }
}

TEST_CASE("orbit invariants") {
  GWAParameters c2 = GWAParameters::congruent_root(2);
  StructureSequence a = StructureSequence::free_module(c2, 0);
  CHECK(orbit_invariant(a) == std::set<long>{0, 1});

  Rng rng(555);
  for (int iter = 0; iter < 100; ++iter) {
    StructureSequence p = gwa::testing::random_projective(rng, c2, 8);
    std::set<Coordinate> points;
    for (long c = 0; c < 3; ++c) points.insert(gwa::testing::random_flip_point(rng, c2, 6));
    PicardElement iota = PicardElement::make(c2, +1, Coordinate(), points);
    CHECK(orbit_invariant(act_on_projective(iota, p)) == orbit_invariant(p));
    long n = gwa::testing::pick(rng, -4, 4);
    std::set<long> shifted;
    for (long v : orbit_invariant(p)) shifted.insert(v + n);
    CHECK(orbit_invariant(shift_module(p, n)) == shifted);
  }

  GWAParameters m0 = GWAParameters::multiple_root();
  CHECK(orbit_invariant(StructureSequence::free_module(m0, 3)).empty());
}

TEST_CASE("the involution solver connects projectives exactly when Z-sets agree") {
  Rng rng(666);
  for (const GWAParameters& params : gwa::testing::all_cases()) {
    for (int iter = 0; iter < 100; ++iter) {
      StructureSequence p = gwa::testing::random_projective(rng, params, 8);
      StructureSequence q = gwa::testing::random_projective(rng, params, 8);
      auto flips = connect_by_involutions(p, q);
      if (params.root_case() != RootCase::congruent) {
        REQUIRE(flips.has_value());
      }
      if (flips) {
        PicardElement iota = PicardElement::make(params, +1, Coordinate(), *flips);
        CHECK(act_on_projective(iota, p) == q);
      } else {
        CHECK(orbit_invariant(p) != orbit_invariant(q));
      }
    }
  }
}

TEST_CASE("numerically trivial elements are exactly the involution sets") {
  Rng rng(777);
  for (const GWAParameters& params : gwa::testing::all_cases()) {
    for (int iter = 0; iter < 100; ++iter) {
      PicardElement g = classify(params, gwa::testing::random_word(rng, params, 8));
      if (!g.is_numerically_trivial()) continue;
      // must equal ι_J for its own flip set, and fix every Z and M simple
      CHECK(g == PicardElement::make(params, +1, Coordinate(), g.flips()));
      SimpleModule m = SimpleModule::make_m(params, Coordinate(Rational(1, 3)));
      CHECK(act_on_simple(g, m) == m);
      if (params.root_case() == RootCase::congruent)
        for (long n = -5; n <= 5; ++n) {
          SimpleModule z = SimpleModule::make(params, SimpleKind::Z, n);
          CHECK(act_on_simple(g, z) == z);
        }
    }
  }
}

TEST_CASE("coverage verdicts reproduce the generation results") {
  // multiple: involutions of A generate
  GWAParameters m0 = GWAParameters::multiple_root();
  std::vector<StructureSequence> base = {StructureSequence::free_module(m0, 0)};
  CoverageOptions iotas;
  iotas.iotas = true;
  CHECK(coverage_report(base, iotas).generates);

  // generic: both involution families of A generate
  GWAParameters g = GWAParameters::generic_root();
  std::vector<StructureSequence> gbase = {StructureSequence::free_module(g, 0)};
  CHECK(coverage_report(gbase, iotas).generates);

  // congruent: not generating, uncovered Z<-1>
  for (long m : {1L, 2L, 3L}) {
    GWAParameters c = GWAParameters::congruent_root(m);
    std::vector<StructureSequence> cbase = {StructureSequence::free_module(c, 0)};
    CoverageReport report = coverage_report(cbase, iotas);
    CHECK_FALSE(report.generates);
    REQUIRE(report.witness.has_value());
    CHECK(*report.witness == SimpleModule::make(c, SimpleKind::Z, -1));
    // shifts alone generate (they reach every shift of A)
    CoverageOptions shifts;
    shifts.shifts = true;
    CHECK(coverage_report(cbase, shifts).generates);
  }

  CHECK_THROWS_AS(coverage_report({}, iotas), domain_error);
}

TEST_CASE("picard element text form") {
  GWAParameters m0 = GWAParameters::multiple_root();
  CHECK(to_string(PicardElement::identity(m0)) == "1");
  CHECK(to_string(make_generator(m0, omega_tok())) == "w");
  CHECK(to_string(classify(m0, {shift_tok(2), iota_tok(ints({0, 3}))})) == "i{2,5} * S^2");

  GWAParameters h = GWAParameters::half_integer_root(Rational(1, 2));
  CHECK(to_string(make_generator(h, half_tok())) == "H");
  CHECK(to_string(classify(h, {half_tok(), half_tok(), half_tok()})) == "S * H");
}
