#include "gwa/picard.hpp"

#include <algorithm>

namespace gwa {

namespace {

void require_on_lattice(const GWAParameters& params, const std::set<Coordinate>& points) {
  for (const Coordinate& j : points)
    if (!on_lattice(params, j))
      throw domain_error("involution flip point off the coordinate lattice");
}

void require_valid_offset(const GWAParameters& params, int sign, const Coordinate& c) {
  switch (params.root_case()) {
    case RootCase::multiple:
    case RootCase::congruent:
      if (!c.is_integral()) throw domain_error("offset must be an integer in this case");
      break;
    case RootCase::generic:
      if (sign == +1 && !(c.mcoef() == 0 && is_integer(c.rat())))
        throw domain_error("even generic-case offsets lie in Z");
      if (sign == -1 && !(c.mcoef() == 1 && is_integer(c.rat())))
        throw domain_error("odd generic-case offsets lie in Z + m");
      break;
    case RootCase::half_integer:
      if (c.mcoef() != 0 || (!is_integer(c.rat()) && !is_half_odd(c.rat())))
        throw domain_error("half-integer-case offsets lie in (1/2)Z");
      break;
  }
}

std::set<Coordinate> map_set(const PicardElement& g, const std::set<Coordinate>& points) {
  std::set<Coordinate> out;
  for (const Coordinate& j : points) out.insert(g.apply(j));
  return out;
}

std::set<Coordinate> symmetric_difference(const std::set<Coordinate>& a,
                                          const std::set<Coordinate>& b) {
  std::set<Coordinate> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::inserter(out, out.begin()));
  return out;
}

// Letter moves used by the involutions.
Letter toggle_z_part(Letter l) {
  switch (l) {
    case Letter::one: return Letter::z;
    case Letter::z: return Letter::one;
    case Letter::zm: return Letter::f;
    case Letter::f: return Letter::zm;
  }
  return l;
}

Letter toggle_zm_part(Letter l) {
  switch (l) {
    case Letter::one: return Letter::zm;
    case Letter::zm: return Letter::one;
    case Letter::z: return Letter::f;
    case Letter::f: return Letter::z;
  }
  return l;
}

StructureSequence with_letter_changes(const StructureSequence& p, long a, long b,
                                      const std::vector<std::pair<long, Letter>>& changes) {
  std::vector<Letter> letters = p.letters_in(a, b);
  for (const auto& [i, l] : changes) letters[static_cast<size_t>(i - a)] = l;
  return StructureSequence::validate(p.params(), a, b, std::move(letters));
}

StructureSequence iota_on_projective(const StructureSequence& p, const Coordinate& point) {
  const GWAParameters& params = p.params();
  switch (params.root_case()) {
    case RootCase::multiple: {
      long j = point.as_integer();
      long a = std::min(p.lo(), j), b = std::max(p.hi(), j + 1);
      Letter c = p.letter_at(j);
      // z never occurs in a projective; the fiber toggle is 1 <-> f
      return with_letter_changes(p, a, b, {{j, c == Letter::one ? Letter::f : Letter::one}});
    }
    case RootCase::congruent: {
      long j = point.as_integer();
      long m = params.m_integer();
      Letter low = p.letter_at(j - m);   // multiplied by the z+m token there
      Letter high = p.letter_at(j);      // multiplied by the z token there
      bool can_multiply = (low == Letter::one || low == Letter::z) &&
                          (high == Letter::one || high == Letter::zm);
      bool can_divide = (low == Letter::zm || low == Letter::f) &&
                        (high == Letter::z || high == Letter::f);
      if (!can_multiply && !can_divide) return p;  // F_j(P) = Z<j> is fixed
      // multiplying and dividing by z+j are both part toggles: the z+m token
      // at j-m, the z token at j
      long a = std::min(p.lo(), j - m), b = std::max(p.hi(), j + 1);
      return with_letter_changes(p, a, b,
                                 {{j - m, toggle_zm_part(low)}, {j, toggle_z_part(high)}});
    }
    case RootCase::generic:
    case RootCase::half_integer: {
      if (on_integer_lattice(params, point)) {
        long j = point.as_integer();
        long a = std::min(p.lo(), j), b = std::max(p.hi(), j + 1);
        return with_letter_changes(p, a, b, {{j, toggle_z_part(p.letter_at(j))}});
      }
      long j = (point - params.m()).as_integer();
      long a = std::min(p.lo(), j), b = std::max(p.hi(), j + 1);
      return with_letter_changes(p, a, b, {{j, toggle_zm_part(p.letter_at(j))}});
    }
  }
  throw domain_error("unreachable");
}

StructureSequence omega_on_projective(const StructureSequence& p) {
  const GWAParameters& params = p.params();
  FactorAssignment fa = simple_factors(p);
  if (params.integral_m()) {
    long m = params.m_integer();
    // factor of the image at coordinate y comes from the source fiber m-1-y
    long lo = m - fa.int_hi(), hi = m - fa.int_lo();
    std::vector<SimpleKind> kinds;
    for (long y = lo; y < hi; ++y)
      kinds.push_back(omega_on_simple(fa.factor_at(m - 1 - y)).kind());
    return from_factors(FactorAssignment(params, lo, std::move(kinds)));
  }
  // ω exchanges the two families: image integer fiber y pulls back to the
  // source m fiber at index -1-y, and conversely.
  long ilo = -fa.m_hi(), ihi = -fa.m_lo();
  std::vector<SimpleKind> ik;
  for (long y = ilo; y < ihi; ++y)
    ik.push_back(omega_on_simple(fa.factor_at(-1 - y, FiberFamily::m_family)).kind());
  long mlo = -fa.int_hi(), mhi = -fa.int_lo();
  std::vector<SimpleKind> mk;
  for (long y = mlo; y < mhi; ++y)
    mk.push_back(omega_on_simple(fa.factor_at(-1 - y)).kind());
  return from_factors(FactorAssignment(params, ilo, std::move(ik), mlo, std::move(mk)));
}

StructureSequence halfshift_on_projective(const StructureSequence& p) {
  const GWAParameters& params = p.params();
  long k = to_long(params.m_rational() - Rational(1, 2));  // m = k + 1/2
  long lo = std::min(p.lo() + k + 1, p.lo() - k) - 1;
  long hi = std::max(p.hi() + k + 1, p.hi() - k) + 1;
  std::vector<Letter> letters;
  for (long n = lo; n < hi; ++n) {
    bool zpart = p.letter_at(n - k - 1) == Letter::zm || p.letter_at(n - k - 1) == Letter::f;
    bool zmpart = p.letter_at(n + k) == Letter::z || p.letter_at(n + k) == Letter::f;
    Letter l = zpart ? (zmpart ? Letter::f : Letter::z) : (zmpart ? Letter::zm : Letter::one);
    letters.push_back(l);
  }
  return StructureSequence::validate(params, lo, hi, std::move(letters));
}

}  // namespace

PicardElement PicardElement::make(GWAParameters params, int sign, Coordinate offset,
                                  std::set<Coordinate> flips) {
  if (sign != 1 && sign != -1) throw domain_error("sign must be ±1");
  require_valid_offset(params, sign, offset);
  require_on_lattice(params, flips);
  return PicardElement(params, sign, offset, std::move(flips));
}

PicardElement make_generator(const GWAParameters& params, const GeneratorToken& token) {
  switch (token.kind) {
    case GeneratorToken::Kind::shift:
      return PicardElement::make(params, +1, Coordinate::integer(token.amount), {});
    case GeneratorToken::Kind::omega:
      return PicardElement::make(params, -1, params.m() - 1, {});
    case GeneratorToken::Kind::iota:
      return PicardElement::make(params, +1, Coordinate(), token.flip_points);
    case GeneratorToken::Kind::half_shift:
      if (params.root_case() != RootCase::half_integer)
        throw domain_error("half shift exists only in the half-integer case");
      return PicardElement::make(params, +1, Coordinate(Rational(1, 2)), {});
  }
  throw domain_error("unreachable");
}

PicardElement compose(const PicardElement& g, const PicardElement& h) {
  require_same_params(g.params(), h.params());
  int sign = g.sign() * h.sign();
  Coordinate offset = g.sign() * h.offset() + g.offset();
  std::set<Coordinate> flips = symmetric_difference(g.flips(), map_set(g, h.flips()));
  return PicardElement::make(g.params(), sign, offset, std::move(flips));
}

PicardElement inverse(const PicardElement& g) {
  int sign = g.sign();
  Coordinate offset = -(sign * g.offset());
  PicardElement dihedral_inverse = PicardElement::make(g.params(), sign, offset, {});
  return PicardElement::make(g.params(), sign, offset, map_set(dihedral_inverse, g.flips()));
}

PicardElement classify(const GWAParameters& params, const GeneratorWord& word) {
  PicardElement acc = PicardElement::identity(params);
  for (const GeneratorToken& token : word) acc = compose(acc, make_generator(params, token));
  return acc;
}

SimpleModule act_on_simple(const PicardElement& g, const SimpleModule& s) {
  require_same_params(g.params(), s.params());
  const GWAParameters& params = g.params();
  Coordinate y = g.apply(s.coordinate());

  if (s.kind() == SimpleKind::M) return SimpleModule::make_m(params, y);
  if (s.kind() == SimpleKind::Z) return SimpleModule::make(params, SimpleKind::Z, y.as_integer());

  bool xtype = s.is_x_type();
  if (g.sign() < 0) xtype = !xtype;           // odd elements exchange tops and socles
  if (g.flips().count(y)) xtype = !xtype;     // then the involutions flip at J
  return xtype ? x_type_at(params, y) : y_type_at(params, y);
}

StructureSequence act_on_projective(const PicardElement& g, const StructureSequence& p) {
  require_same_params(g.params(), p.params());
  const GWAParameters& params = g.params();
  if (!is_projective(p)) throw not_projective("picard elements act on projectives");

  StructureSequence out = p;
  Coordinate translation = g.offset();
  if (g.sign() < 0) {
    out = omega_on_projective(out);
    translation = g.offset() - (params.m() - 1);
  }
  if (translation.is_integral()) {
    out = shift_module(out, translation.as_integer());
  } else {
    // half-integer translation: S^(t-1/2) then one half shift
    long whole = to_long(translation.rat() - Rational(1, 2));
    out = halfshift_on_projective(shift_module(out, whole));
  }
  for (const Coordinate& j : g.flips()) out = iota_on_projective(out, j);
  return out;
}

std::set<long> orbit_invariant(const StructureSequence& p) {
  if (!is_projective(p)) throw not_projective("orbit invariants are defined for projectives");
  std::set<long> out;
  if (p.params().root_case() != RootCase::congruent) return out;
  long m = p.params().m_integer();
  for (long n = p.lo(); n < p.hi() + m; ++n)
    if (simple_factor(p, n).kind() == SimpleKind::Z) out.insert(n);
  return out;
}

std::optional<std::set<Coordinate>> connect_by_involutions(const StructureSequence& p,
                                                           const StructureSequence& q) {
  require_same_params(p.params(), q.params());
  const GWAParameters& params = p.params();
  if (!is_projective(p) || !is_projective(q))
    throw not_projective("involutions connect projectives");

  std::set<Coordinate> flips;
  long m = params.integral_m() ? params.m_integer() : 0;
  long lo = std::min(p.lo(), q.lo());
  long hi = std::max(p.hi(), q.hi()) + m;
  for (long j = lo; j < hi; ++j) {
    SimpleModule a = simple_factor(p, j);
    SimpleModule b = simple_factor(q, j);
    if (a == b) continue;
    if (a.kind() == SimpleKind::Z || b.kind() == SimpleKind::Z) return std::nullopt;
    flips.insert(Coordinate::integer(j));
  }
  if (params.noncongruent()) {
    for (long j = lo; j < hi; ++j) {
      SimpleModule a = simple_factor(p, j, FiberFamily::m_family);
      SimpleModule b = simple_factor(q, j, FiberFamily::m_family);
      if (a != b) flips.insert(Coordinate::integer(j) + params.m());
    }
  }
  return flips;
}

CoverageReport coverage_report(std::span<const StructureSequence> base,
                               const CoverageOptions& options) {
  if (base.empty()) throw domain_error("coverage requires a nonempty base");
  const GWAParameters& params = base.front().params();
  for (const StructureSequence& b : base) {
    require_same_params(params, b.params());
    if (!is_projective(b)) throw not_projective("coverage bases must be projective");
  }

  CoverageReport report;
  report.params = params;
  report.options = options;
  report.window_lo = options.window_lo;
  report.window_hi = options.window_hi;

  const bool nc = params.noncongruent();
  const bool has_z = params.root_case() == RootCase::congruent;
  long m = params.integral_m() ? params.m_integer() : 0;

  // exact scan range: the display window plus every base window (the factor
  // pattern beyond is the constant tail pattern, captured separately)
  long scan_lo = options.window_lo, scan_hi = options.window_hi;
  for (const StructureSequence& b : base) {
    scan_lo = std::min(scan_lo, b.lo() - 1);
    scan_hi = std::max(scan_hi, b.hi() + m + 1);
  }

  // with shift closure a family covered anywhere is covered everywhere
  bool any_z = false;
  if (has_z)
    for (const StructureSequence& b : base)
      if (!orbit_invariant(b).empty()) any_z = true;

  auto fiber_at = [&](long n) {
    CoverageReport::Fiber f;
    for (const StructureSequence& b : base) {
      SimpleKind k = simple_factor(b, n).kind();
      if (k == SimpleKind::Z) f.z = true;
      else if (k == SimpleKind::X || k == SimpleKind::X0) f.x = true;
      else f.y = true;
      if (nc) {
        SimpleKind km = simple_factor(b, n, FiberFamily::m_family).kind();
        (km == SimpleKind::Xm ? f.xm : f.ym) = true;
      }
    }
    if (options.iotas) {
      // involutions toggle X/Y everywhere but never touch Z
      if (f.x || f.y) f.x = f.y = true;
      if (nc && (f.xm || f.ym)) f.xm = f.ym = true;
    }
    if (options.shifts) {
      f.x = f.y = true;  // every base covers X-type above and Y-type below
      if (nc) f.xm = f.ym = true;
      if (any_z) f.z = true;
    }
    return f;
  };

  // tails: beyond every base window the factors are X-type above, Y-type below
  auto tail_fiber = [&](bool above) {
    CoverageReport::Fiber f;
    (above ? f.x : f.y) = true;
    if (nc) (above ? f.xm : f.ym) = true;
    if (options.iotas) {
      f.x = f.y = true;
      if (nc) f.xm = f.ym = true;
    }
    if (options.shifts) {
      f.x = f.y = true;
      if (nc) f.xm = f.ym = true;
      if (any_z) f.z = true;
    }
    return f;
  };
  report.above = tail_fiber(true);
  report.below = tail_fiber(false);

  auto fiber_covered = [&](const CoverageReport::Fiber& f) {
    if (nc) return f.x && f.y && f.xm && f.ym;
    if (has_z) return f.x && f.y && f.z;
    return f.x && f.y;
  };

  // candidate witnesses ordered by distance to the origin, negatives first
  std::vector<std::pair<long, CoverageReport::Fiber>> scanned;
  for (long n = scan_lo; n < scan_hi; ++n) scanned.push_back({n, fiber_at(n)});
  report.generates = fiber_covered(report.above) && fiber_covered(report.below);
  for (const auto& [n, f] : scanned)
    if (!fiber_covered(f)) report.generates = false;

  if (!report.generates) {
    std::vector<std::pair<long, SimpleModule>> candidates;
    auto add_candidates = [&](long n, const CoverageReport::Fiber& f) {
      if (!f.x) candidates.push_back({n, x_type_at(params, Coordinate::integer(n))});
      if (!f.y) candidates.push_back({n, y_type_at(params, Coordinate::integer(n))});
      if (has_z && !f.z) candidates.push_back({n, SimpleModule::make(params, SimpleKind::Z, n)});
      if (nc && !f.xm)
        candidates.push_back({n, SimpleModule::make(params, SimpleKind::Xm, n)});
      if (nc && !f.ym)
        candidates.push_back({n, SimpleModule::make(params, SimpleKind::Ym, n)});
    };
    for (const auto& [n, f] : scanned) add_candidates(n, f);
    if (!fiber_covered(report.below)) add_candidates(scan_lo - 1, report.below);
    if (!fiber_covered(report.above)) add_candidates(scan_hi, report.above);
    // uncovered Z shifts are the orbit obstruction; report the one nearest
    // the origin (negatives first on ties)
    auto key = [](const std::pair<long, SimpleModule>& c) {
      return std::tuple<bool, long, long>(c.second.kind() != SimpleKind::Z,
                                          std::abs(c.first), c.first);
    };
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](const auto& a, const auto& b) { return key(a) < key(b); });
    report.witness = candidates.front().second;
  }

  for (long n = options.window_lo; n < options.window_hi; ++n)
    report.window.push_back(fiber_at(n));
  return report;
}

}  // namespace gwa
