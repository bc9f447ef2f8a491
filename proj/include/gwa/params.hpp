#pragma once

#include <boost/rational.hpp>
#include <string>

#include "gwa/errors.hpp"

namespace gwa {

using Rational = boost::rational<long long>;

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

/// True when r lies in Z + 1/2 (reduced denominators are canonical in boost).
inline bool is_half_odd(const Rational& r) { return r.denominator() == 2; }

inline long to_long(const Rational& r) {
  if (!is_integer(r)) throw domain_error("expected an integer, got " +
                                         std::to_string(r.numerator()) + "/" +
                                         std::to_string(r.denominator()));
  return static_cast<long>(r.numerator());
}

enum class RootCase { multiple, congruent, generic, half_integer };

class Coordinate;

/// The root gap m of f = z(z+m), normalized so that 0 is the largest integer
/// root of f. The case tag fixes the alphabet, the simple-module inventory and
/// the Picard coordinate system; all distinctions are exact.
class GWAParameters {
public:
  GWAParameters() = default;

  static GWAParameters multiple_root() { return GWAParameters(RootCase::multiple, 0, Rational(0)); }

  static GWAParameters congruent_root(long k) {
    if (k < 1) throw domain_error("congruent case requires m = k >= 1, got " + std::to_string(k));
    return GWAParameters(RootCase::congruent, k, Rational(k));
  }

  static GWAParameters generic_root() { return GWAParameters(RootCase::generic, 0, Rational(0)); }

  static GWAParameters half_integer_root(Rational q) {
    if (!is_half_odd(q))
      throw domain_error("half-integer case requires m in Z + 1/2");
    return GWAParameters(RootCase::half_integer, 0, q);
  }

  RootCase root_case() const { return case_; }
  bool integral_m() const { return case_ == RootCase::multiple || case_ == RootCase::congruent; }
  bool noncongruent() const { return case_ == RootCase::generic || case_ == RootCase::half_integer; }

  /// m as an integer; valid in the multiple (0) and congruent (k) cases only.
  long m_integer() const {
    if (!integral_m()) throw domain_error("m is not an integer in this case");
    return k_;
  }

  /// m as a rational; valid except in the generic case.
  Rational m_rational() const {
    if (case_ == RootCase::generic) throw domain_error("m is a formal symbol in the generic case");
    return case_ == RootCase::half_integer ? q_ : Rational(k_);
  }

  Coordinate m() const;

  friend bool operator==(const GWAParameters& a, const GWAParameters& b) {
    return a.case_ == b.case_ && a.k_ == b.k_ && a.q_ == b.q_;
  }
  friend bool operator!=(const GWAParameters& a, const GWAParameters& b) { return !(a == b); }

private:
  GWAParameters(RootCase c, long k, Rational q) : case_(c), k_(k), q_(q) {}

  RootCase case_ = RootCase::multiple;
  long k_ = 0;     // congruent: m = k
  Rational q_{0};  // half-integer: m = q
};

inline void require_same_params(const GWAParameters& a, const GWAParameters& b) {
  if (!(a == b)) throw parameter_mismatch();
}

/// A point of the coordinate line: an exact rational plus an integer multiple
/// of the formal symbol m. The m part is nonzero only in the generic case; in
/// the other cases m is folded into the rational part on construction.
class Coordinate {
public:
  Coordinate() = default;
  Coordinate(Rational rat, long mcoef = 0) : rat_(rat), mcoef_(mcoef) {}
  static Coordinate integer(long n) { return Coordinate(Rational(n)); }

  const Rational& rat() const { return rat_; }
  long mcoef() const { return mcoef_; }

  bool is_integral() const { return mcoef_ == 0 && is_integer(rat_); }
  long as_integer() const {
    if (mcoef_ != 0) throw domain_error("coordinate has a formal m part");
    return to_long(rat_);
  }

  friend Coordinate operator+(const Coordinate& a, const Coordinate& b) {
    return Coordinate(a.rat_ + b.rat_, a.mcoef_ + b.mcoef_);
  }
  friend Coordinate operator-(const Coordinate& a, const Coordinate& b) {
    return Coordinate(a.rat_ - b.rat_, a.mcoef_ - b.mcoef_);
  }
  friend Coordinate operator-(const Coordinate& a) { return Coordinate(-a.rat_, -a.mcoef_); }
  friend Coordinate operator*(int s, const Coordinate& a) {
    return Coordinate(Rational(s) * a.rat_, s * a.mcoef_);
  }
  friend Coordinate operator+(const Coordinate& a, long n) {
    return Coordinate(a.rat_ + Rational(n), a.mcoef_);
  }
  friend Coordinate operator-(const Coordinate& a, long n) { return a + (-n); }

  friend bool operator==(const Coordinate& a, const Coordinate& b) {
    return a.rat_ == b.rat_ && a.mcoef_ == b.mcoef_;
  }
  friend bool operator!=(const Coordinate& a, const Coordinate& b) { return !(a == b); }
  // Order for containers and deterministic printing; not a coordinate-line order.
  friend bool operator<(const Coordinate& a, const Coordinate& b) {
    if (a.mcoef_ != b.mcoef_) return a.mcoef_ < b.mcoef_;
    return a.rat_ < b.rat_;
  }

private:
  Rational rat_{0};
  long mcoef_ = 0;
};

inline Coordinate GWAParameters::m() const {
  switch (case_) {
    case RootCase::multiple: return Coordinate(Rational(0));
    case RootCase::congruent: return Coordinate(Rational(k_));
    case RootCase::generic: return Coordinate(Rational(0), 1);
    case RootCase::half_integer: return Coordinate(q_);
  }
  return Coordinate();
}

/// x in Z, the coordinate coset of the integer simple family.
inline bool on_integer_lattice(const GWAParameters&, const Coordinate& x) {
  return x.is_integral();
}

/// x in Z + m.
inline bool on_m_lattice(const GWAParameters& params, const Coordinate& x) {
  switch (params.root_case()) {
    case RootCase::multiple:
    case RootCase::congruent: return x.is_integral();
    case RootCase::generic: return x.mcoef() == 1 && is_integer(x.rat());
    case RootCase::half_integer: return x.mcoef() == 0 && is_half_odd(x.rat());
  }
  return false;
}

/// x in Z ∪ (Z + m), the support lattice of the non-M simples.
inline bool on_lattice(const GWAParameters& params, const Coordinate& x) {
  return on_integer_lattice(params, x) || on_m_lattice(params, x);
}

}  // namespace gwa
