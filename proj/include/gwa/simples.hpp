#pragma once

#include <map>

#include "gwa/params.hpp"

namespace gwa {

/// Graded simple module families. X/Y/Z live in the integral cases
/// (Z only when m > 0); X0/Y0/Xm/Ym in the non-congruent cases; M is the
/// coordinate family M(λ) with λ off the lattice.
enum class SimpleKind { X, Y, Z, X0, Y0, Xm, Ym, M };

class SimpleModule {
public:
  static SimpleModule make(GWAParameters params, SimpleKind kind, long shift);
  static SimpleModule make_m(GWAParameters params, Coordinate lambda);

  const GWAParameters& params() const { return params_; }
  SimpleKind kind() const { return kind_; }

  long shift() const {
    if (kind_ == SimpleKind::M) throw domain_error("M(λ) carries a coordinate, not a shift");
    return shift_;
  }

  const Coordinate& lambda() const {
    if (kind_ != SimpleKind::M) throw domain_error("only M(λ) carries a lambda");
    return lambda_;
  }

  /// The point of the coordinate line this simple sits over: n for X/Y/Z/X0/Y0
  /// at shift n, n+m for Xm/Ym, λ for M(λ). Support is the negative of this.
  Coordinate coordinate() const;

  bool is_x_type() const {
    return kind_ == SimpleKind::X || kind_ == SimpleKind::X0 || kind_ == SimpleKind::Xm;
  }
  bool is_y_type() const {
    return kind_ == SimpleKind::Y || kind_ == SimpleKind::Y0 || kind_ == SimpleKind::Ym;
  }

  friend bool operator==(const SimpleModule& a, const SimpleModule& b) {
    return a.params_ == b.params_ && a.kind_ == b.kind_ && a.shift_ == b.shift_ &&
           a.lambda_ == b.lambda_;
  }
  friend bool operator!=(const SimpleModule& a, const SimpleModule& b) { return !(a == b); }

private:
  SimpleModule(GWAParameters params, SimpleKind kind, long shift, Coordinate lambda)
      : params_(params), kind_(kind), shift_(shift), lambda_(lambda) {}

  GWAParameters params_;
  SimpleKind kind_;
  long shift_ = 0;
  Coordinate lambda_;
};

/// The support of S as a left k[z]-module: the single point -coordinate(S).
Coordinate support_point(const SimpleModule& s);

/// k-dimension of the degree-n component (0 or 1).
int component_dim(const SimpleModule& s, long n);

/// Graded dimension of uExt^1(S, T) as a finite degree -> dim map (values 1).
std::map<long, int> ext1(const SimpleModule& s, const SimpleModule& t);

/// The grading-reversing autoequivalence on simples; an involution that swaps
/// the X and Y families and reflects coordinates through (m-1)/2.
SimpleModule omega_on_simple(const SimpleModule& s);

/// The X-type (resp. Y-type) simple over a lattice coordinate; picks the
/// family, in the non-congruent cases, from the coset the coordinate lies in.
SimpleModule x_type_at(const GWAParameters& params, const Coordinate& c);
SimpleModule y_type_at(const GWAParameters& params, const Coordinate& c);

}  // namespace gwa
