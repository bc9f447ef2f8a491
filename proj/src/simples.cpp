#include "gwa/simples.hpp"

namespace gwa {

namespace {

bool kind_valid_for(const GWAParameters& params, SimpleKind kind) {
  switch (kind) {
    case SimpleKind::X:
    case SimpleKind::Y: return params.integral_m();
    case SimpleKind::Z: return params.root_case() == RootCase::congruent;
    case SimpleKind::X0:
    case SimpleKind::Y0:
    case SimpleKind::Xm:
    case SimpleKind::Ym: return params.noncongruent();
    case SimpleKind::M: return true;
  }
  return false;
}

bool lambda_forbidden(const GWAParameters& params, const Coordinate& lambda) {
  return on_lattice(params, lambda);
}

}  // namespace

SimpleModule SimpleModule::make(GWAParameters params, SimpleKind kind, long shift) {
  if (kind == SimpleKind::M) throw domain_error("use make_m for M(λ)");
  if (!kind_valid_for(params, kind))
    throw domain_error("simple family not present in this case");
  return SimpleModule(params, kind, shift, Coordinate());
}

SimpleModule SimpleModule::make_m(GWAParameters params, Coordinate lambda) {
  if (lambda_forbidden(params, lambda))
    throw domain_error("M(λ) requires λ off the coordinate lattice");
  return SimpleModule(params, SimpleKind::M, 0, lambda);
}

Coordinate SimpleModule::coordinate() const {
  switch (kind_) {
    case SimpleKind::M: return lambda_;
    case SimpleKind::Xm:
    case SimpleKind::Ym: return Coordinate::integer(shift_) + params_.m();
    default: return Coordinate::integer(shift_);
  }
}

Coordinate support_point(const SimpleModule& s) { return -s.coordinate(); }

int component_dim(const SimpleModule& s, long n) {
  long j = s.kind() == SimpleKind::M ? 0 : s.shift();
  switch (s.kind()) {
    case SimpleKind::M: return 1;
    case SimpleKind::X: return n <= j - s.params().m_integer() ? 1 : 0;
    case SimpleKind::Y: return n > j ? 1 : 0;
    case SimpleKind::Z: {
      long m = s.params().m_integer();
      return (j - m < n && n <= j) ? 1 : 0;
    }
    case SimpleKind::X0:
    case SimpleKind::Xm: return n <= j ? 1 : 0;
    case SimpleKind::Y0:
    case SimpleKind::Ym: return n > j ? 1 : 0;
  }
  return 0;
}

std::map<long, int> ext1(const SimpleModule& s, const SimpleModule& t) {
  require_same_params(s.params(), t.params());
  const GWAParameters& params = s.params();

  if (s.kind() == SimpleKind::M || t.kind() == SimpleKind::M) {
    if (s.kind() != t.kind()) return {};
    // M(μ) = M(λ)<d> exactly when μ-λ = d in Z; one self-extension per shift.
    Coordinate diff = t.lambda() - s.lambda();
    if (!diff.is_integral()) return {};
    return {{diff.as_integer(), 1}};
  }

  long d = t.shift() - s.shift();
  auto pair_is = [&](SimpleKind a, SimpleKind b) { return s.kind() == a && t.kind() == b; };
  bool nonzero = false;
  switch (params.root_case()) {
    case RootCase::multiple:
      nonzero = true;  // all four (X,Y)-pairs, self-extensions included
      break;
    case RootCase::congruent:
      nonzero = pair_is(SimpleKind::X, SimpleKind::Z) || pair_is(SimpleKind::Z, SimpleKind::X) ||
                pair_is(SimpleKind::Y, SimpleKind::Z) || pair_is(SimpleKind::Z, SimpleKind::Y);
      break;
    case RootCase::generic:
    case RootCase::half_integer:
      nonzero = pair_is(SimpleKind::X0, SimpleKind::Y0) || pair_is(SimpleKind::Y0, SimpleKind::X0) ||
                pair_is(SimpleKind::Xm, SimpleKind::Ym) || pair_is(SimpleKind::Ym, SimpleKind::Xm);
      break;
  }
  if (!nonzero) return {};
  return {{d, 1}};
}

SimpleModule omega_on_simple(const SimpleModule& s) {
  const GWAParameters& params = s.params();
  if (s.kind() == SimpleKind::M)
    return SimpleModule::make_m(params, -s.lambda() + params.m() - 1);

  long n = s.shift();
  switch (params.root_case()) {
    case RootCase::multiple: {
      SimpleKind k = s.kind() == SimpleKind::X ? SimpleKind::Y : SimpleKind::X;
      return SimpleModule::make(params, k, -n - 1);
    }
    case RootCase::congruent: {
      long m = params.m_integer();
      SimpleKind k = s.kind();
      if (k == SimpleKind::X) k = SimpleKind::Y;
      else if (k == SimpleKind::Y) k = SimpleKind::X;
      return SimpleModule::make(params, k, m - n - 1);
    }
    case RootCase::generic:
    case RootCase::half_integer: {
      SimpleKind k;
      switch (s.kind()) {
        case SimpleKind::X0: k = SimpleKind::Ym; break;
        case SimpleKind::Y0: k = SimpleKind::Xm; break;
        case SimpleKind::Xm: k = SimpleKind::Y0; break;
        default: k = SimpleKind::X0; break;
      }
      return SimpleModule::make(params, k, -n - 1);
    }
  }
  throw domain_error("unreachable");
}

SimpleModule x_type_at(const GWAParameters& params, const Coordinate& c) {
  if (params.integral_m()) return SimpleModule::make(params, SimpleKind::X, c.as_integer());
  if (on_integer_lattice(params, c))
    return SimpleModule::make(params, SimpleKind::X0, c.as_integer());
  if (on_m_lattice(params, c))
    return SimpleModule::make(params, SimpleKind::Xm, (c - params.m()).as_integer());
  throw domain_error("coordinate is off the lattice");
}

SimpleModule y_type_at(const GWAParameters& params, const Coordinate& c) {
  if (params.integral_m()) return SimpleModule::make(params, SimpleKind::Y, c.as_integer());
  if (on_integer_lattice(params, c))
    return SimpleModule::make(params, SimpleKind::Y0, c.as_integer());
  if (on_m_lattice(params, c))
    return SimpleModule::make(params, SimpleKind::Ym, (c - params.m()).as_integer());
  throw domain_error("coordinate is off the lattice");
}

}  // namespace gwa
