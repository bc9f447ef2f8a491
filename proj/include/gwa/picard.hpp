#pragma once

#include <optional>
#include <set>
#include <span>
#include <vector>

#include "gwa/projectives.hpp"

namespace gwa {

/// Normal form of an element of Pic(gr A) ≅ Z_fin ⋊ D_∞: a sign a, an offset
/// c moving the coordinate line by x ↦ ax + c, and a finite set J of X↔Y flip
/// points recorded in post-move coordinates, so the element is ι_J ∘ (dihedral
/// part). The identity is (+1, 0, ∅); an element is numerically trivial
/// exactly when a = +1 and c = 0.
class PicardElement {
public:
  static PicardElement identity(GWAParameters params) {
    return PicardElement(params, +1, Coordinate(), {});
  }
  static PicardElement make(GWAParameters params, int sign, Coordinate offset,
                            std::set<Coordinate> flips);

  const GWAParameters& params() const { return params_; }
  int sign() const { return sign_; }
  const Coordinate& offset() const { return offset_; }
  const std::set<Coordinate>& flips() const { return flips_; }

  Coordinate apply(const Coordinate& x) const { return sign_ * x + offset_; }

  bool is_numerically_trivial() const { return sign_ == +1 && offset_ == Coordinate(); }
  bool is_identity() const { return is_numerically_trivial() && flips_.empty(); }

  friend bool operator==(const PicardElement& a, const PicardElement& b) {
    return a.params_ == b.params_ && a.sign_ == b.sign_ && a.offset_ == b.offset_ &&
           a.flips_ == b.flips_;
  }
  friend bool operator!=(const PicardElement& a, const PicardElement& b) { return !(a == b); }

private:
  PicardElement(GWAParameters params, int sign, Coordinate offset, std::set<Coordinate> flips)
      : params_(params), sign_(sign), offset_(offset), flips_(std::move(flips)) {}

  GWAParameters params_;
  int sign_ = +1;
  Coordinate offset_;
  std::set<Coordinate> flips_;
};

/// One generator of the Picard group: a shift S^n, the grading reversal ω, an
/// involution set ι_J, or (half-integer case only) the half shift H.
struct GeneratorToken {
  enum class Kind { shift, omega, iota, half_shift };
  Kind kind = Kind::shift;
  long amount = 0;                  // shift
  std::set<Coordinate> flip_points; // iota
};

using GeneratorWord = std::vector<GeneratorToken>;

PicardElement make_generator(const GWAParameters& params, const GeneratorToken& token);

/// g ∘ h: (a1a2, a1c2 + c1, J1 ⊕ g1(J2)).
PicardElement compose(const PicardElement& g, const PicardElement& h);
PicardElement inverse(const PicardElement& g);

/// Normal form of a word, by folding compose over its generators
/// (leftmost token outermost).
PicardElement classify(const GWAParameters& params, const GeneratorWord& word);

/// Move the coordinate by x ↦ ax+c; odd elements swap X and Y labels (and the
/// 0/m families follow the coset the coordinate lands in); then flip X↔Y at
/// the coordinates in J. Z and M are never flipped.
SimpleModule act_on_simple(const PicardElement& g, const SimpleModule& s);

/// Apply g to a rank-one projective through its generator decomposition:
/// shifts translate the window, involutions move one or two letters, ω
/// rebuilds from ω-mapped factors, H shuffles the z / z+m parts. The simple
/// factors of the result are the g-images of the factors of P.
StructureSequence act_on_projective(const PicardElement& g, const StructureSequence& p);

/// The Pic_0-orbit invariant: the (finite) set of coordinates whose factor is
/// Z. Empty in the multiple and non-congruent cases, where the action is
/// transitive.
std::set<long> orbit_invariant(const StructureSequence& p);

/// The flip set J with ι_J(P) = Q, when one exists; in the congruent case
/// this fails exactly when the Z-sets of P and Q differ.
std::optional<std::set<Coordinate>> connect_by_involutions(const StructureSequence& p,
                                                           const StructureSequence& q);

struct CoverageOptions {
  bool iotas = false;
  bool shifts = false;
  long window_lo = -10;
  long window_hi = 11;  // exclusive
};

/// Which simples admit a surjection from the closure of a set of projectives
/// under the chosen generator families. Tail verdicts are exact: beyond every
/// base window the factor pattern is the constant tail pattern.
struct CoverageReport {
  struct Fiber {
    bool x = false, y = false, z = false;    // integer family (z only when m > 0)
    bool xm = false, ym = false;             // m family (non-congruent cases)
  };

  GWAParameters params;
  CoverageOptions options;
  long window_lo = 0, window_hi = 0;
  std::vector<Fiber> window;   // indices window_lo .. window_hi-1
  Fiber above, below;          // constant tail verdicts
  bool generates = false;
  std::optional<SimpleModule> witness;  // an uncovered simple, nearest the origin
};

CoverageReport coverage_report(std::span<const StructureSequence> base,
                               const CoverageOptions& options);

}  // namespace gwa
