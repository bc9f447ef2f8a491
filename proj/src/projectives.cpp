#include "gwa/projectives.hpp"

#include <algorithm>

namespace gwa {

namespace {

bool letter_in(Letter l, std::initializer_list<Letter> set) {
  return std::find(set.begin(), set.end(), l) != set.end();
}

// The two halves of a letter: z-part and (z+m)-part, as presence flags.
bool has_z_part(Letter l) { return l == Letter::z || l == Letter::f; }
bool has_zm_part(Letter l) { return l == Letter::zm || l == Letter::f; }

Letter letter_of_parts(bool zpart, bool zmpart) {
  if (zpart && zmpart) return Letter::f;
  if (zpart) return Letter::z;
  if (zmpart) return Letter::zm;
  return Letter::one;
}

}  // namespace

bool surjects_onto(const StructureSequence& i, const SimpleModule& s) {
  require_same_params(i.params(), s.params());
  const GWAParameters& params = i.params();
  if (s.kind() == SimpleKind::M) return true;  // the (z+λ)I kernel always exists

  long n = s.shift();
  switch (s.kind()) {
    case SimpleKind::X:
      return letter_in(i.letter_at(n - params.m_integer()), {Letter::one, Letter::z});
    case SimpleKind::Y:
      return letter_in(i.letter_at(n), {Letter::z, Letter::f});
    case SimpleKind::Z: {
      long m = params.m_integer();
      return letter_in(i.letter_at(n - m), {Letter::zm, Letter::f}) &&
             letter_in(i.letter_at(n), {Letter::one, Letter::zm});
    }
    case SimpleKind::X0:
      return letter_in(i.letter_at(n), {Letter::one, Letter::zm});
    case SimpleKind::Y0:
      return letter_in(i.letter_at(n), {Letter::z, Letter::f});
    case SimpleKind::Xm:
      return letter_in(i.letter_at(n), {Letter::one, Letter::z});
    case SimpleKind::Ym:
      return letter_in(i.letter_at(n), {Letter::zm, Letter::f});
    default: return false;
  }
}

bool is_projective(const StructureSequence& p) {
  switch (p.params().root_case()) {
    case RootCase::multiple:
      for (long i = p.lo(); i < p.hi(); ++i)
        if (p.letter_at(i) == Letter::z) return false;
      return true;
    case RootCase::congruent: {
      long m = p.params().m_integer();
      for (long n = p.lo(); n < p.hi() + m; ++n)
        if (letter_in(p.letter_at(n - m), {Letter::one, Letter::z}) &&
            letter_in(p.letter_at(n), {Letter::z, Letter::f}))
          return false;
      return true;
    }
    case RootCase::generic:
    case RootCase::half_integer:
      return true;  // hereditary
  }
  return true;
}

SimpleModule simple_factor(const StructureSequence& p, long j, FiberFamily family) {
  const GWAParameters& params = p.params();
  if (!is_projective(p))
    throw not_projective("simple factors are unique only for projective modules");
  if (family == FiberFamily::m_family && !params.noncongruent())
    throw domain_error("the m family is a separate fiber only in the non-congruent cases");

  switch (params.root_case()) {
    case RootCase::multiple:
      return SimpleModule::make(params, p.letter_at(j) == Letter::one ? SimpleKind::X : SimpleKind::Y, j);
    case RootCase::congruent: {
      long m = params.m_integer();
      if (letter_in(p.letter_at(j - m), {Letter::one, Letter::z}))
        return SimpleModule::make(params, SimpleKind::X, j);
      if (letter_in(p.letter_at(j), {Letter::z, Letter::f}))
        return SimpleModule::make(params, SimpleKind::Y, j);
      return SimpleModule::make(params, SimpleKind::Z, j);
    }
    case RootCase::generic:
    case RootCase::half_integer:
      if (family == FiberFamily::integer_family)
        return SimpleModule::make(
            params, has_z_part(p.letter_at(j)) ? SimpleKind::Y0 : SimpleKind::X0, j);
      return SimpleModule::make(
          params, has_zm_part(p.letter_at(j)) ? SimpleKind::Ym : SimpleKind::Xm, j);
  }
  throw domain_error("unreachable");
}

FactorAssignment::FactorAssignment(GWAParameters params, long int_lo,
                                   std::vector<SimpleKind> int_kinds, long m_lo,
                                   std::vector<SimpleKind> m_kinds)
    : params_(params), int_lo_(int_lo), int_kinds_(std::move(int_kinds)), m_lo_(m_lo),
      m_kinds_(std::move(m_kinds)) {
  const bool nc = params_.noncongruent();
  for (SimpleKind k : int_kinds_) {
    bool ok = nc ? (k == SimpleKind::X0 || k == SimpleKind::Y0)
                 : (k == SimpleKind::X || k == SimpleKind::Y ||
                    (k == SimpleKind::Z && params_.root_case() == RootCase::congruent));
    if (!ok) throw inconsistent_assignment("family tag outside the integer fiber");
  }
  if (!nc && !m_kinds_.empty())
    throw inconsistent_assignment("m-family assignment outside the non-congruent cases");
  for (SimpleKind k : m_kinds_)
    if (k != SimpleKind::Xm && k != SimpleKind::Ym)
      throw inconsistent_assignment("family tag outside the m fiber");

  // trim to the tail pattern: Y-type far below, X-type far above
  auto trim = [](long& lo, std::vector<SimpleKind>& kinds, SimpleKind ylow, SimpleKind xhigh) {
    size_t front = 0;
    while (front < kinds.size() && kinds[front] == ylow) ++front;
    size_t back = 0;
    while (back + front < kinds.size() && kinds[kinds.size() - 1 - back] == xhigh) ++back;
    kinds = std::vector<SimpleKind>(kinds.begin() + front, kinds.end() - back);
    lo += static_cast<long>(front);  // empty windows keep the Y/X pivot
  };
  if (nc) {
    trim(int_lo_, int_kinds_, SimpleKind::Y0, SimpleKind::X0);
    trim(m_lo_, m_kinds_, SimpleKind::Ym, SimpleKind::Xm);
  } else {
    trim(int_lo_, int_kinds_, SimpleKind::Y, SimpleKind::X);
  }
}

SimpleKind FactorAssignment::int_kind_at(long j) const {
  if (j >= int_hi()) return params_.noncongruent() ? SimpleKind::X0 : SimpleKind::X;
  if (j < int_lo_) return params_.noncongruent() ? SimpleKind::Y0 : SimpleKind::Y;
  return int_kinds_[static_cast<size_t>(j - int_lo_)];
}

SimpleKind FactorAssignment::m_kind_at(long j) const {
  if (!params_.noncongruent()) throw domain_error("no m family in this case");
  if (j >= m_hi()) return SimpleKind::Xm;
  if (j < m_lo_) return SimpleKind::Ym;
  return m_kinds_[static_cast<size_t>(j - m_lo_)];
}

SimpleModule FactorAssignment::factor_at(long j, FiberFamily family) const {
  if (family == FiberFamily::m_family)
    return SimpleModule::make(params_, m_kind_at(j), j);
  return SimpleModule::make(params_, int_kind_at(j), j);
}

FactorAssignment simple_factors(const StructureSequence& p) {
  const GWAParameters& params = p.params();
  if (!is_projective(p)) throw not_projective("factor assignments require a projective module");
  std::vector<SimpleKind> ik, mk;
  long ilo = p.lo(), mlo = 0;
  switch (params.root_case()) {
    case RootCase::multiple:
      for (long j = p.lo(); j < p.hi(); ++j) ik.push_back(simple_factor(p, j).kind());
      break;
    case RootCase::congruent:
      for (long j = p.lo(); j < p.hi() + params.m_integer(); ++j)
        ik.push_back(simple_factor(p, j).kind());
      break;
    case RootCase::generic:
    case RootCase::half_integer:
      mlo = p.lo();
      for (long j = p.lo(); j < p.hi(); ++j) {
        ik.push_back(simple_factor(p, j, FiberFamily::integer_family).kind());
        mk.push_back(simple_factor(p, j, FiberFamily::m_family).kind());
      }
      break;
  }
  return FactorAssignment(params, ilo, std::move(ik), mlo, std::move(mk));
}

StructureSequence from_factors(const FactorAssignment& fa) {
  const GWAParameters& params = fa.params();
  std::vector<Letter> letters;
  long lo = 0, hi = 0;
  switch (params.root_case()) {
    case RootCase::multiple:
      lo = fa.int_lo();
      hi = fa.int_hi();
      for (long j = lo; j < hi; ++j)
        letters.push_back(fa.int_kind_at(j) == SimpleKind::X ? Letter::one : Letter::f);
      break;
    case RootCase::congruent: {
      long m = params.m_integer();
      lo = fa.int_lo() - m;
      hi = fa.int_hi();
      for (long j = lo; j < hi; ++j) {
        // Table of structure constants from the factor pair (F_j, F_{j+m}):
        // the z part is present exactly when F_j = Y, the z+m part exactly
        // when F_{j+m} != X.
        bool zpart = fa.int_kind_at(j) == SimpleKind::Y;
        bool zmpart = fa.int_kind_at(j + m) != SimpleKind::X;
        letters.push_back(letter_of_parts(zpart, zmpart));
      }
      break;
    }
    case RootCase::generic:
    case RootCase::half_integer:
      lo = std::min(fa.int_lo(), fa.m_lo());
      hi = std::max(fa.int_hi(), fa.m_hi());
      for (long j = lo; j < hi; ++j)
        letters.push_back(letter_of_parts(fa.int_kind_at(j) == SimpleKind::Y0,
                                          fa.m_kind_at(j) == SimpleKind::Ym));
      break;
  }
  return StructureSequence::validate(params, lo, hi, std::move(letters));
}

RootMultiset canonical_component(const StructureSequence& p, long i) {
  RootMultiset out(p.params());
  for (long j = i; j < p.hi(); ++j) {
    Letter l = p.letter_at(j);
    if (l == Letter::one) continue;
    out = multiply(out, letter_polynomial(l, j, p.params()));
  }
  return out;
}

std::map<long, RootMultiset> canonical_rep(const StructureSequence& p) {
  std::map<long, RootMultiset> out;
  for (long i = p.lo() - 1; i <= p.hi(); ++i) out.insert({i, canonical_component(p, i)});
  return out;
}

RootMultiset maximal_embedding(const StructureSequence& p, const StructureSequence& q) {
  require_same_params(p.params(), q.params());
  const GWAParameters& params = p.params();
  long bottom = std::min(p.lo(), q.lo());
  long top = std::max(p.hi(), q.hi());
  RootMultiset theta(params);
  for (long i = bottom; i <= top; ++i) {
    RootMultiset pi = canonical_component(p, i);
    RootMultiset qi = canonical_component(q, i);
    theta = lcm(theta, divide_exact(qi, gcd(pi, qi)));
  }
  if (params.root_case() != RootCase::congruent) {
    // single-index form, valid away from congruent roots; cross-checked
    RootMultiset pn = canonical_component(p, bottom);
    RootMultiset qn = canonical_component(q, bottom);
    RootMultiset single = divide_exact(qn, gcd(pn, qn));
    if (!(single == theta))
      throw domain_error("maximal embedding cross-check failed (lcm vs bottom index)");
  }
  return theta;
}

StructureSequence kernel_of_surjection(const StructureSequence& p, const SimpleModule& s) {
  require_same_params(p.params(), s.params());
  if (!surjects_onto(p, s))
    throw no_surjection("module does not surject onto the requested simple");
  if (s.kind() == SimpleKind::M) return p;  // kernel (z+λ)P, same structure constants

  const GWAParameters& params = p.params();
  long n = s.shift();
  long strip_ref = params.integral_m() ? n - params.m_integer() : n;

  // Components of the kernel: b_i = (z+coordinate(S))·p_i on the support strip
  // of S, p_i off it; letters are the consecutive quotients b_i / b_{i+1}.
  RootMultiset annihilator(params);
  annihilator.insert(s.kind() == SimpleKind::Xm || s.kind() == SimpleKind::Ym ? shift_root(n)
                                                                              : int_root(n));
  long range_lo = std::min(p.lo(), std::min(n, strip_ref)) - 2;
  long range_hi = std::max(p.hi(), n) + 2;

  auto component = [&](long i) {
    RootMultiset b = canonical_component(p, i);
    if (component_dim(s, i) != 0) b = multiply(b, annihilator);
    return b;
  };

  std::vector<RootMultiset> comps;
  for (long i = range_lo; i <= range_hi; ++i) comps.push_back(component(i));
  std::vector<Letter> letters;
  for (long i = range_lo; i < range_hi; ++i) {
    RootMultiset quotient =
        divide_exact(comps[static_cast<size_t>(i - range_lo)],
                     comps[static_cast<size_t>(i + 1 - range_lo)]);
    letters.push_back(letter_from_polynomial(quotient, i));
  }
  return StructureSequence::validate(params, range_lo, range_hi, std::move(letters));
}

HilbertWindow cokernel_hilbert(const StructureSequence& p, const StructureSequence& q) {
  require_same_params(p.params(), q.params());
  RootMultiset theta = maximal_embedding(p, q);
  long bottom = std::min(p.lo(), q.lo()) - 1;
  long top = std::max(p.hi(), q.hi()) + 1;
  HilbertWindow out;
  out.lo = bottom;
  out.hi = top;
  for (long i = bottom; i < top; ++i) {
    long d = theta.degree() + canonical_component(p, i).degree() -
             canonical_component(q, i).degree();
    if (d < 0) throw domain_error("negative cokernel dimension (maximal embedding bug)");
    out.dims.push_back(d);
  }
  out.below = out.dims.front();
  out.above = theta.degree();
  return out;
}

}  // namespace gwa
