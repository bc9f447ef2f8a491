#pragma once

#include <map>
#include <vector>

#include "gwa/letters.hpp"
#include "gwa/simples.hpp"

namespace gwa {

/// Whether I has a (degree-zero graded) surjection onto S. For the lattice
/// simples this reads off one or two structure constants; every nonzero I
/// surjects onto every M(λ).
bool surjects_onto(const StructureSequence& i, const SimpleModule& s);

/// Structure-constant projectivity test. Multiple: no letter z anywhere;
/// congruent: never both c_{n-m} in {1,z} and c_n in {z,f}; non-congruent:
/// always true (the algebra is hereditary).
bool is_projective(const StructureSequence& p);

enum class FiberFamily { integer_family, m_family };

/// F_j(P) (or F^m_j(P)): the unique simple factor of a projective P supported
/// at -j (resp. -(j+m)).
SimpleModule simple_factor(const StructureSequence& p, long j,
                           FiberFamily family = FiberFamily::integer_family);

/// A choice of simple factor at every fiber, with the forced tails: X-type
/// for coordinates far above, Y-type far below. Non-congruent cases carry an
/// independent assignment for the m family. Windows are trimmed so equal
/// assignments have equal encodings.
class FactorAssignment {
public:
  FactorAssignment(GWAParameters params, long int_lo, std::vector<SimpleKind> int_kinds,
                   long m_lo = 0, std::vector<SimpleKind> m_kinds = {});

  const GWAParameters& params() const { return params_; }
  long int_lo() const { return int_lo_; }
  long int_hi() const { return int_lo_ + static_cast<long>(int_kinds_.size()); }
  long m_lo() const { return m_lo_; }
  long m_hi() const { return m_lo_ + static_cast<long>(m_kinds_.size()); }

  SimpleKind int_kind_at(long j) const;
  SimpleKind m_kind_at(long j) const;
  SimpleModule factor_at(long j, FiberFamily family = FiberFamily::integer_family) const;

  friend bool operator==(const FactorAssignment& a, const FactorAssignment& b) {
    return a.params_ == b.params_ && a.int_lo_ == b.int_lo_ && a.int_kinds_ == b.int_kinds_ &&
           a.m_lo_ == b.m_lo_ && a.m_kinds_ == b.m_kinds_;
  }
  friend bool operator!=(const FactorAssignment& a, const FactorAssignment& b) {
    return !(a == b);
  }

private:
  GWAParameters params_;
  long int_lo_ = 0;
  std::vector<SimpleKind> int_kinds_;
  long m_lo_ = 0;
  std::vector<SimpleKind> m_kinds_;
};

/// All simple factors of a projective, as a trimmed assignment.
FactorAssignment simple_factors(const StructureSequence& p);

/// The unique rank-one projective realizing a tail-valid factor assignment.
StructureSequence from_factors(const FactorAssignment& fa);

/// p_i = prod_{j >= i} c_j, the canonical embedding component at degree i.
RootMultiset canonical_component(const StructureSequence& p, long i);

/// Canonical representation over [lo-1, hi] (constant 1 above, growing by
/// σ^i(f) per step below).
std::map<long, RootMultiset> canonical_rep(const StructureSequence& p);

/// θ_{P,Q}, the monic generator of Hom(P,Q): lcm over i of q_i/gcd(p_i,q_i).
/// In the multiple and non-congruent cases this equals the single term at the
/// bottom index; both are computed there and cross-checked.
RootMultiset maximal_embedding(const StructureSequence& p, const StructureSequence& q);

/// The unique kernel of a surjection P -> S. Defined by the support-strip
/// recipe: the kernel component at degree i is (z+coordinate(S))·P_i exactly
/// where S is nonzero in degree i, and P_i elsewhere; letters are re-extracted
/// from the quotients of consecutive components. For S = M(λ) the kernel is
/// (z+λ)P, whose letters are those of P.
StructureSequence kernel_of_surjection(const StructureSequence& p, const SimpleModule& s);

/// Hilbert data of Q/θP over a window, with the two constant tail values.
struct HilbertWindow {
  long lo = 0;
  long hi = 0;
  std::vector<long> dims;  // degrees lo .. hi-1
  long below = 0;          // value at every degree < lo
  long above = 0;          // value at every degree >= hi

  long at(long i) const {
    if (i < lo) return below;
    if (i >= hi) return above;
    return dims[static_cast<size_t>(i - lo)];
  }
};

/// Degree-wise dimension of Q/θP where θ is the maximal embedding:
/// deg(θ·p_i) - deg(q_i), never negative.
HilbertWindow cokernel_hilbert(const StructureSequence& p, const StructureSequence& q);

}  // namespace gwa
