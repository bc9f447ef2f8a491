#pragma once

#include <map>
#include <vector>

#include "gwa/roots.hpp"

namespace gwa {

/// Structure constant at degree i: the monic polynomial 1, σ^i(z), σ^i(z+m)
/// or σ^i(f). In the multiple root case z+m = z, so the canonical alphabet
/// there is {one, z, f} and zm is normalized away.
enum class Letter { one, z, zm, f };

enum class ZmPolicy { normalize, reject };

/// A finitely generated graded rank-one submodule of the graded quotient ring
/// of A, up to graded isomorphism: structure constants on a window [lo, hi)
/// with the forced tails c_i = 1 for i >= hi and c_i = σ^i(f) for i < lo.
/// Windows are trimmed (no leading f, no trailing 1) so that structural
/// equality of encodings is graded isomorphism.
class StructureSequence {
public:
  static StructureSequence validate(GWAParameters params, long lo, long hi,
                                    std::vector<Letter> letters,
                                    ZmPolicy policy = ZmPolicy::normalize);

  /// Map form: entries outside the declared bounds must match the tails
  /// (1 above, σ^i(f) below) or a tail_violation is raised; unspecified
  /// in-window indices default to 1.
  static StructureSequence validate(GWAParameters params, const std::map<long, Letter>& raw,
                                    long lo, long hi, ZmPolicy policy = ZmPolicy::normalize);

  /// Bounds inferred from the support of the map; the empty map is A.
  static StructureSequence validate(GWAParameters params, const std::map<long, Letter>& raw,
                                    ZmPolicy policy = ZmPolicy::normalize);

  /// A<n>: constants 1 at i >= n and σ^i(f) below.
  static StructureSequence free_module(GWAParameters params, long n);

  const GWAParameters& params() const { return params_; }
  long lo() const { return lo_; }
  long hi() const { return hi_; }
  const std::vector<Letter>& window() const { return window_; }

  Letter letter_at(long i) const {
    if (i >= hi_) return Letter::one;
    if (i < lo_) return Letter::f;
    return window_[static_cast<size_t>(i - lo_)];
  }

  std::vector<Letter> letters_in(long a, long b) const {
    std::vector<Letter> out;
    for (long i = a; i < b; ++i) out.push_back(letter_at(i));
    return out;
  }

  friend bool operator==(const StructureSequence& a, const StructureSequence& b) {
    return a.params_ == b.params_ && a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.window_ == b.window_;
  }
  friend bool operator!=(const StructureSequence& a, const StructureSequence& b) {
    return !(a == b);
  }

private:
  StructureSequence(GWAParameters params, long lo, long hi, std::vector<Letter> window)
      : params_(params), lo_(lo), hi_(hi), window_(std::move(window)) {}

  GWAParameters params_;
  long lo_ = 0;
  long hi_ = 0;
  std::vector<Letter> window_;
};

/// The shift P<n>; pure window translation since letters are index-relative.
StructureSequence shift_module(const StructureSequence& p, long n);

/// Graded isomorphism = equality of trimmed encodings.
bool iso_equal(const StructureSequence& p, const StructureSequence& q);

/// The monic polynomial a letter denotes at degree i, as a root multiset.
RootMultiset letter_polynomial(Letter l, long i, const GWAParameters& params);

/// Inverse of letter_polynomial at index i; throws domain_error when the
/// multiset is not a letter shape there.
Letter letter_from_polynomial(const RootMultiset& poly, long i);

}  // namespace gwa
