#include "gwa/letters.hpp"

#include <algorithm>

namespace gwa {

namespace {

Letter normalize_letter(Letter l, const GWAParameters& params, ZmPolicy policy) {
  if (l == Letter::zm && params.root_case() == RootCase::multiple) {
    if (policy == ZmPolicy::reject)
      throw alphabet_violation("letter z+m is not in the multiple-case alphabet");
    return Letter::z;
  }
  return l;
}

}  // namespace

StructureSequence StructureSequence::validate(GWAParameters params, long lo, long hi,
                                              std::vector<Letter> letters, ZmPolicy policy) {
  if (lo > hi) throw domain_error("window bounds out of order");
  if (static_cast<long>(letters.size()) != hi - lo)
    throw domain_error("letter count does not match the window");
  for (Letter& l : letters) l = normalize_letter(l, params, policy);
  // trim to the canonical encoding
  size_t drop_front = 0;
  while (drop_front < letters.size() && letters[drop_front] == Letter::f) ++drop_front;
  size_t drop_back = 0;
  while (drop_back + drop_front < letters.size() && letters[letters.size() - 1 - drop_back] == Letter::one)
    ++drop_back;
  long new_lo = lo + static_cast<long>(drop_front);
  long new_hi = hi - static_cast<long>(drop_back);
  std::vector<Letter> window(letters.begin() + drop_front, letters.end() - drop_back);
  return StructureSequence(params, new_lo, new_hi, std::move(window));
}

StructureSequence StructureSequence::validate(GWAParameters params,
                                              const std::map<long, Letter>& raw, long lo, long hi,
                                              ZmPolicy policy) {
  std::vector<Letter> letters(static_cast<size_t>(hi - lo), Letter::one);
  for (const auto& [i, l] : raw) {
    Letter n = normalize_letter(l, params, policy);
    if (i >= hi) {
      if (n != Letter::one)
        throw tail_violation("letter above the window must be 1 (index " + std::to_string(i) + ")");
    } else if (i < lo) {
      if (n != Letter::f)
        throw tail_violation("letter below the window must be f (index " + std::to_string(i) + ")");
    } else {
      letters[static_cast<size_t>(i - lo)] = n;
    }
  }
  return validate(params, lo, hi, std::move(letters), policy);
}

StructureSequence StructureSequence::validate(GWAParameters params,
                                              const std::map<long, Letter>& raw, ZmPolicy policy) {
  if (raw.empty()) return free_module(params, 0);
  long lo = raw.begin()->first;
  long hi = raw.rbegin()->first + 1;
  return validate(params, raw, lo, hi, policy);
}

StructureSequence StructureSequence::free_module(GWAParameters params, long n) {
  return StructureSequence(params, n, n, {});
}

StructureSequence shift_module(const StructureSequence& p, long n) {
  return StructureSequence::validate(p.params(), p.lo() + n, p.hi() + n, p.window());
}

bool iso_equal(const StructureSequence& p, const StructureSequence& q) {
  require_same_params(p.params(), q.params());
  return p == q;
}

RootMultiset letter_polynomial(Letter l, long i, const GWAParameters& params) {
  RootMultiset out(params);
  switch (l) {
    case Letter::one: break;
    case Letter::z: out.insert(int_root(i)); break;
    case Letter::zm:
      if (params.root_case() == RootCase::multiple)
        out.insert(int_root(i));
      else
        out.insert(shift_root(i));
      break;
    case Letter::f:
      out.insert(int_root(i));
      out.insert(shift_root(i));
      break;
  }
  return out;
}

Letter letter_from_polynomial(const RootMultiset& poly, long i) {
  const GWAParameters& params = poly.params();
  for (Letter l : {Letter::one, Letter::z, Letter::zm, Letter::f})
    if (poly == letter_polynomial(l, i, params)) return l;
  throw domain_error("multiset is not a structure-constant shape at index " + std::to_string(i));
}

}  // namespace gwa
