#pragma once

// Shared helpers for the test suites: random instances of every domain type
// and an oracle for picard words that acts on simples generator by generator,
// built only from the simples tables (never from compose / make_generator),
// so normal forms can be checked against it.

#include <optional>
#include <random>
#include <vector>

#include "gwa/picard.hpp"
#include "gwa/textio.hpp"

namespace gwa::testing {

using Rng = std::mt19937_64;

inline long pick(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline std::vector<GWAParameters> all_cases() {
  return {GWAParameters::multiple_root(),  GWAParameters::congruent_root(1),
          GWAParameters::congruent_root(2), GWAParameters::congruent_root(3),
          GWAParameters::generic_root(),    GWAParameters::half_integer_root(Rational(1, 2)),
          GWAParameters::half_integer_root(Rational(-3, 2))};
}

inline Letter random_letter(Rng& rng, const GWAParameters& params) {
  switch (pick(rng, 0, params.root_case() == RootCase::multiple ? 2 : 3)) {
    case 0: return Letter::one;
    case 1: return Letter::z;
    case 2: return params.root_case() == RootCase::multiple ? Letter::f : Letter::zm;
    default: return Letter::f;
  }
}

/// Arbitrary (not necessarily projective) sequence with window width <= width.
inline StructureSequence random_sequence(Rng& rng, const GWAParameters& params, long width) {
  long lo = pick(rng, -width, 2);
  long len = pick(rng, 0, width);
  std::vector<Letter> letters;
  for (long i = 0; i < len; ++i) letters.push_back(random_letter(rng, params));
  return StructureSequence::validate(params, lo, lo + len, letters);
}

inline SimpleKind random_int_fiber_kind(Rng& rng, const GWAParameters& params) {
  switch (params.root_case()) {
    case RootCase::multiple: return pick(rng, 0, 1) ? SimpleKind::X : SimpleKind::Y;
    case RootCase::congruent:
      switch (pick(rng, 0, 2)) {
        case 0: return SimpleKind::X;
        case 1: return SimpleKind::Y;
        default: return SimpleKind::Z;
      }
    default: return pick(rng, 0, 1) ? SimpleKind::X0 : SimpleKind::Y0;
  }
}

/// Random tail-valid factor assignment; realizes a random projective.
inline FactorAssignment random_assignment(Rng& rng, const GWAParameters& params, long width) {
  long lo = pick(rng, -width / 2 - 2, 2);
  long len = pick(rng, 0, width);
  std::vector<SimpleKind> ik, mk;
  for (long i = 0; i < len; ++i) ik.push_back(random_int_fiber_kind(rng, params));
  long mlo = 0;
  if (params.noncongruent()) {
    mlo = pick(rng, -width / 2 - 2, 2);
    long mlen = pick(rng, 0, width);
    for (long i = 0; i < mlen; ++i)
      mk.push_back(pick(rng, 0, 1) ? SimpleKind::Xm : SimpleKind::Ym);
  }
  return FactorAssignment(params, lo, std::move(ik), mlo, std::move(mk));
}

inline StructureSequence random_projective(Rng& rng, const GWAParameters& params, long width) {
  return from_factors(random_assignment(rng, params, width));
}

inline Coordinate random_flip_point(Rng& rng, const GWAParameters& params, long range) {
  Coordinate j = Coordinate::integer(pick(rng, -range, range));
  if (params.noncongruent() && pick(rng, 0, 1)) j = j + params.m();
  return j;
}

inline GeneratorWord random_word(Rng& rng, const GWAParameters& params, int max_len) {
  GeneratorWord word;
  int len = static_cast<int>(pick(rng, 0, max_len));
  bool half = params.root_case() == RootCase::half_integer;
  for (int i = 0; i < len; ++i) {
    switch (pick(rng, 0, half ? 3 : 2)) {
      case 0: word.push_back({GeneratorToken::Kind::shift, pick(rng, -4, 4), {}}); break;
      case 1: word.push_back({GeneratorToken::Kind::omega, 0, {}}); break;
      case 2: {
        std::set<Coordinate> points;
        long count = pick(rng, 1, 2);
        for (long c = 0; c < count; ++c) points.insert(random_flip_point(rng, params, 5));
        word.push_back({GeneratorToken::Kind::iota, 0, std::move(points)});
        break;
      }
      default: word.push_back({GeneratorToken::Kind::half_shift, 0, {}}); break;
    }
  }
  return word;
}

// --- the word-action oracle -------------------------------------------------

inline SimpleModule oracle_apply_token(const GeneratorToken& token, const SimpleModule& s) {
  const GWAParameters& params = s.params();
  switch (token.kind) {
    case GeneratorToken::Kind::shift:
      if (s.kind() == SimpleKind::M)
        return SimpleModule::make_m(params, s.lambda() + token.amount);
      return SimpleModule::make(params, s.kind(), s.shift() + token.amount);
    case GeneratorToken::Kind::omega:
      return omega_on_simple(s);
    case GeneratorToken::Kind::iota: {
      if (s.kind() == SimpleKind::M || s.kind() == SimpleKind::Z) return s;
      if (!token.flip_points.count(s.coordinate())) return s;
      SimpleKind flipped;
      switch (s.kind()) {
        case SimpleKind::X: flipped = SimpleKind::Y; break;
        case SimpleKind::Y: flipped = SimpleKind::X; break;
        case SimpleKind::X0: flipped = SimpleKind::Y0; break;
        case SimpleKind::Y0: flipped = SimpleKind::X0; break;
        case SimpleKind::Xm: flipped = SimpleKind::Ym; break;
        default: flipped = SimpleKind::Xm; break;
      }
      return SimpleModule::make(params, flipped, s.shift());
    }
    case GeneratorToken::Kind::half_shift: {
      long k = to_long(params.m_rational() - Rational(1, 2));  // m = k + 1/2
      switch (s.kind()) {
        case SimpleKind::M:
          return SimpleModule::make_m(params, s.lambda() + Coordinate(Rational(1, 2)));
        case SimpleKind::X0: return SimpleModule::make(params, SimpleKind::Xm, s.shift() - k);
        case SimpleKind::Y0: return SimpleModule::make(params, SimpleKind::Ym, s.shift() - k);
        case SimpleKind::Xm: return SimpleModule::make(params, SimpleKind::X0, s.shift() + k + 1);
        default: return SimpleModule::make(params, SimpleKind::Y0, s.shift() + k + 1);
      }
    }
  }
  throw domain_error("unreachable");
}

/// Apply the word to a simple, rightmost generator first.
inline SimpleModule oracle_apply_word(const GeneratorWord& word, SimpleModule s) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) s = oracle_apply_token(*it, s);
  return s;
}

/// Recover the normal form (a, c, J) of a word from its simple action alone:
/// a and c from two M-probes, J from the residual X/Y label flips over a
/// window covering every index the word can reach.
inline PicardElement oracle_classify(const GWAParameters& params, const GeneratorWord& word) {
  Coordinate l1(Rational(1, 3)), l2(Rational(4, 3));
  Coordinate i1 = oracle_apply_word(word, SimpleModule::make_m(params, l1)).lambda();
  Coordinate i2 = oracle_apply_word(word, SimpleModule::make_m(params, l2)).lambda();
  Coordinate diff = i2 - i1;  // = a * (l2 - l1) = a
  int sign = diff == Coordinate(Rational(1)) ? +1 : -1;
  Coordinate offset = i1 - sign * l1;

  long reach = 2;
  for (const GeneratorToken& t : word) {
    reach += std::labs(t.amount) + 1;
    for (const Coordinate& j : t.flip_points)
      reach += std::labs(to_long(j.rat() * 2)) / 2 + std::labs(j.mcoef()) + 1;
  }
  // offsets themselves move the window
  reach += std::labs(offset.rat().numerator() / offset.rat().denominator()) + 2;

  std::set<Coordinate> flips;
  auto probe = [&](const Coordinate& x) {
    SimpleModule sx = x_type_at(params, x);
    SimpleModule image = oracle_apply_word(word, sx);
    bool expected_x = sign > 0;  // odd maps swap the labels
    if (image.is_x_type() != expected_x) flips.insert(sign * x + offset);
  };
  for (long n = -reach; n <= reach; ++n) {
    probe(Coordinate::integer(n));
    if (params.noncongruent()) probe(Coordinate::integer(n) + params.m());
  }
  return PicardElement::make(params, sign, offset, std::move(flips));
}

}  // namespace gwa::testing
