#include "gwa/roots.hpp"

#include <algorithm>

namespace gwa {

RootMultiset multiply(const RootMultiset& a, const RootMultiset& b) {
  require_same_params(a.params(), b.params());
  RootMultiset out = a;
  for (const auto& [t, c] : b.factors()) out.insert(t, c);
  return out;
}

RootMultiset gcd(const RootMultiset& a, const RootMultiset& b) {
  require_same_params(a.params(), b.params());
  RootMultiset out(a.params());
  for (const auto& [t, c] : a.factors()) {
    long cb = b.multiplicity(t);
    if (cb > 0) out.insert(t, std::min(c, cb));
  }
  return out;
}

RootMultiset lcm(const RootMultiset& a, const RootMultiset& b) {
  require_same_params(a.params(), b.params());
  RootMultiset out = a;
  for (const auto& [t, c] : b.factors()) {
    long extra = c - a.multiplicity(t);
    if (extra > 0) out.insert(t, extra);
  }
  return out;
}

RootMultiset sigma_shift(const RootMultiset& a, long k) {
  RootMultiset out(a.params());
  for (const auto& [t, c] : a.factors()) out.insert(RootToken{t.shift_family, t.index + k}, c);
  return out;
}

bool divides(const RootMultiset& a, const RootMultiset& b) {
  require_same_params(a.params(), b.params());
  for (const auto& [t, c] : a.factors())
    if (b.multiplicity(t) < c) return false;
  return true;
}

RootMultiset divide_exact(const RootMultiset& numerator, const RootMultiset& divisor) {
  require_same_params(numerator.params(), divisor.params());
  if (!divides(divisor, numerator))
    throw domain_error("inexact division of root multisets");
  RootMultiset out(numerator.params());
  for (const auto& [t, c] : numerator.factors()) {
    long rest = c - divisor.multiplicity(t);
    if (rest > 0) out.insert(t, rest);
  }
  return out;
}

}  // namespace gwa
