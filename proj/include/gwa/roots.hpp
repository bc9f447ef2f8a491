#pragma once

#include <compare>
#include <map>

#include "gwa/params.hpp"

namespace gwa {

/// One monic linear factor: z+i (integer family) or z+m+i (shift family).
struct RootToken {
  bool shift_family = false;
  long index = 0;
  friend auto operator<=>(const RootToken&, const RootToken&) = default;
};

inline RootToken int_root(long i) { return RootToken{false, i}; }
inline RootToken shift_root(long i) { return RootToken{true, i}; }

/// A monic product of root factors as a finite multiset; the empty multiset is
/// the polynomial 1. Tokens are stored canonically: when m is an integer,
/// z+m+i = z+(m+i) and the factor lives in the integer family, so multiset
/// gcd/lcm coincide with polynomial gcd/lcm in k[z].
class RootMultiset {
public:
  explicit RootMultiset(GWAParameters params) : params_(params) {}
  static RootMultiset one(GWAParameters params) { return RootMultiset(params); }

  const GWAParameters& params() const { return params_; }
  bool is_one() const { return mult_.empty(); }

  long degree() const {
    long d = 0;
    for (const auto& [t, c] : mult_) d += c;
    return d;
  }

  RootToken canonical(RootToken t) const {
    if (!t.shift_family) return t;
    if (params_.root_case() == RootCase::multiple) return int_root(t.index);
    if (params_.root_case() == RootCase::congruent)
      return int_root(t.index + params_.m_integer());
    return t;
  }

  long multiplicity(RootToken t) const {
    auto it = mult_.find(canonical(t));
    return it == mult_.end() ? 0 : it->second;
  }

  void insert(RootToken t, long count = 1) {
    if (count <= 0) {
      if (count < 0) throw domain_error("negative multiplicity");
      return;
    }
    mult_[canonical(t)] += count;
  }

  const std::map<RootToken, long>& factors() const { return mult_; }

  friend bool operator==(const RootMultiset& a, const RootMultiset& b) {
    return a.params_ == b.params_ && a.mult_ == b.mult_;
  }
  friend bool operator!=(const RootMultiset& a, const RootMultiset& b) { return !(a == b); }

private:
  GWAParameters params_;
  std::map<RootToken, long> mult_;
};

RootMultiset multiply(const RootMultiset& a, const RootMultiset& b);
RootMultiset gcd(const RootMultiset& a, const RootMultiset& b);
RootMultiset lcm(const RootMultiset& a, const RootMultiset& b);
RootMultiset sigma_shift(const RootMultiset& a, long k);

/// Whether a | b as polynomials (tokenwise multiplicities).
bool divides(const RootMultiset& a, const RootMultiset& b);

/// The quotient numerator / divisor; throws domain_error when the division is
/// not exact (the token world has no other polynomials to land in).
RootMultiset divide_exact(const RootMultiset& numerator, const RootMultiset& divisor);

}  // namespace gwa
