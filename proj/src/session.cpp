#include "gwa/session.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <random>
#include <sstream>

#include "gwa/render.hpp"

namespace gwa {

namespace {

// Line scanner for the session grammar; whitespace-insensitive, '#' comments.
struct SessionScanner {
  std::string_view text;
  size_t pos = 0;
  int line = 1, column = 1;

  void advance() {
    if (pos < text.size()) {
      if (text[pos] == '\n') { ++line; column = 1; }
      else ++column;
      ++pos;
    }
  }
  void skip_ws() {
    while (pos < text.size()) {
      if (text[pos] == '#') {
        while (pos < text.size() && text[pos] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(text[pos]))) {
        advance();
      } else break;
    }
  }
  bool done() { skip_ws(); return pos >= text.size(); }
  char peek() { skip_ws(); return pos < text.size() ? text[pos] : '\0'; }
  bool try_consume(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) { advance(); return true; }
    return false;
  }
  void expect(char c) {
    if (!try_consume(c)) fail(std::string("expected '") + c + "'");
  }
  std::string word() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      advance();
    if (pos == start) fail("expected a name");
    return std::string(text.substr(start, pos - start));
  }
  long integer() {
    skip_ws();
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) advance();
    bool digits = false;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      advance();
      digits = true;
    }
    if (!digits) fail("expected an integer");
    return std::stol(std::string(text.substr(start, pos - start)));
  }
  std::string until(char stop) {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && text[pos] != stop && text[pos] != '#') advance();
    return std::string(text.substr(start, pos - start));
  }
  std::string rest_of_line() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && text[pos] != '\n' && text[pos] != '#') advance();
    std::string out(text.substr(start, pos - start));
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
    return out;
  }
  [[noreturn]] void fail(const std::string& message) { throw parse_error(message, line, column); }
};

Letter parse_letter_token(SessionScanner& sc) {
  if (sc.try_consume('1')) return Letter::one;
  if (sc.try_consume('f')) return Letter::f;
  if (sc.try_consume('z')) {
    SessionScanner save = sc;
    if (sc.try_consume('+')) {
      if (sc.try_consume('m')) return Letter::zm;
      sc = save;
    }
    return Letter::z;
  }
  sc.fail("expected a letter (1, z, z+m or f)");
}

std::string trimmed(std::string s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  size_t b = s.find_last_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  return s.substr(a, b - a + 1);
}

bool plain_identifier(const std::string& s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

}  // namespace

void Session::bind_module(const std::string& name, StructureSequence seq) {
  require_same_params(params_, seq.params());
  for (auto& [n, s] : modules_)
    if (n == name) { s = std::move(seq); return; }
  modules_.emplace_back(name, std::move(seq));
}

void Session::bind_element(const std::string& name, PicardElement g) {
  require_same_params(params_, g.params());
  for (auto& [n, e] : elements_)
    if (n == name) { e = std::move(g); return; }
  elements_.emplace_back(name, std::move(g));
}

const StructureSequence& Session::module(const std::string& name) const {
  for (const auto& [n, s] : modules_)
    if (n == name) return s;
  throw domain_error("unknown module '" + name + "'");
}

const PicardElement* Session::element(const std::string& name) const {
  for (const auto& [n, e] : elements_)
    if (n == name) return &e;
  return nullptr;
}

Session parse_session(std::string_view text) {
  SessionScanner sc{text};
  std::optional<Session> session;

  // parameter block first
  if (!sc.done()) {
    if (sc.word() != "gwa") sc.fail("session files start with a 'gwa { m = ... }' block");
    sc.expect('{');
    if (sc.word() != "m") sc.fail("expected 'm'");
    sc.expect('=');
    std::string payload = trimmed(sc.until('}'));
    GWAParameters params = parse_params(payload);
    sc.expect('}');
    session.emplace(params);
  } else {
    sc.fail("empty session file");
  }

  while (!sc.done()) {
    std::string head = sc.word();
    if (head == "module") {
      std::string name = sc.word();
      sc.expect('{');
      if (sc.word() != "window") sc.fail("expected 'window'");
      sc.expect('=');
      long lo = sc.integer();
      sc.expect('.');
      sc.expect('.');
      long hi = sc.integer();
      if (lo > hi) sc.fail("window bounds out of order");
      sc.expect(';');
      if (sc.word() != "letters") sc.fail("expected 'letters'");
      sc.expect('=');
      std::vector<Letter> letters;
      if (sc.peek() != '}') {
        letters.push_back(parse_letter_token(sc));
        while (sc.try_consume(',')) letters.push_back(parse_letter_token(sc));
      }
      sc.expect('}');
      if (static_cast<long>(letters.size()) != hi - lo)
        sc.fail("letter count does not match the window");
      session->bind_module(name,
                           StructureSequence::validate(session->params(), lo, hi, letters));
    } else if (head == "element") {
      std::string name = sc.word();
      sc.expect('=');
      std::string expr = sc.rest_of_line();
      if (expr.empty()) sc.fail("expected a picard expression");
      session->bind_element(name, eval_picexpr(*session, expr));
    } else if (head == "gwa") {
      sc.fail("a session has a single 'gwa' block");
    } else {
      sc.fail("expected 'module' or 'element', got '" + head + "'");
    }
  }
  return *session;
}

std::string show_session(const Session& session) {
  std::ostringstream out;
  out << "gwa { " << to_string(session.params()) << " }\n";
  for (const auto& [name, seq] : session.modules())
    out << "module " << name << " { " << to_string(seq) << " }\n";
  for (const auto& [name, g] : session.elements())
    out << "element " << name << " = " << to_string(g) << "\n";
  return out.str();
}

PicardElement eval_picexpr(const Session& session, std::string_view text) {
  // terms joined by '*' at the top level (braces never contain '*')
  std::vector<std::string> terms;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '{') ++depth;
    if (c == '}') --depth;
    if (c == '*' && depth == 0) {
      terms.push_back(trimmed(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  terms.push_back(trimmed(current));

  PicardElement acc = PicardElement::identity(session.params());
  for (const std::string& term : terms) {
    if (plain_identifier(term)) {
      if (const PicardElement* named = session.element(term)) {
        acc = compose(acc, *named);
        continue;
      }
    }
    acc = compose(acc, classify(session.params(), parse_picexpr(session.params(), term)));
  }
  return acc;
}

namespace {

std::string fiber_line(const GWAParameters& params, const CoverageReport::Fiber& f) {
  std::string out;
  auto add = [&](bool covered, const std::string& label) {
    if (!out.empty()) out += " ";
    out += label + (covered ? "+" : "-");
  };
  if (params.noncongruent()) {
    add(f.x, "X0");
    add(f.y, "Y0");
    add(f.xm, "Xm");
    add(f.ym, "Ym");
  } else {
    add(f.x, "X");
    add(f.y, "Y");
    if (params.root_case() == RootCase::congruent) add(f.z, "Z");
  }
  return out;
}

std::pair<long, long> parse_window_arg(const std::string& spec) {
  size_t dots = spec.find("..");
  if (dots == std::string::npos) throw parse_error("window is spelled lo..hi", 1, 1);
  try {
    long lo = std::stol(spec.substr(0, dots));
    long hi = std::stol(spec.substr(dots + 2));
    if (lo > hi) throw parse_error("window bounds out of order", 1, 1);
    return {lo, hi};
  } catch (const std::invalid_argument&) {
    throw parse_error("window is spelled lo..hi", 1, 1);
  }
}

}  // namespace

void run_command(Session& session, const std::string& verb,
                 const std::vector<std::string>& args, const CommandOptions& options,
                 std::ostream& out) {
  const GWAParameters& params = session.params();
  auto need = [&](size_t n, const char* usage) {
    if (args.size() < n) throw domain_error(std::string("usage: ") + usage);
  };

  if (verb == "show") {
    out << show_session(session);
  } else if (verb == "projective?") {
    need(1, "projective? <module>");
    out << (is_projective(session.module(args[0])) ? "true" : "false") << "\n";
  } else if (verb == "factors") {
    need(1, "factors <module>");
    const StructureSequence& p = session.module(args[0]);
    FactorAssignment fa = simple_factors(p);
    for (long j = fa.int_lo(); j < fa.int_hi(); ++j)
      out << "F<" << j << "> = " << to_string(fa.factor_at(j)) << "\n";
    if (params.noncongruent())
      for (long j = fa.m_lo(); j < fa.m_hi(); ++j)
        out << "Fm<" << j << "> = " << to_string(fa.factor_at(j, FiberFamily::m_family)) << "\n";
    std::string xk = params.noncongruent() ? "X0" : "X";
    std::string yk = params.noncongruent() ? "Y0" : "Y";
    out << "tails: F<n> = " << xk << "<n> for n >= " << fa.int_hi() << "; F<n> = " << yk
        << "<n> for n < " << fa.int_lo() << "\n";
    if (params.noncongruent())
      out << "tails: Fm<n> = Xm<n> for n >= " << fa.m_hi() << "; Fm<n> = Ym<n> for n < "
          << fa.m_lo() << "\n";
  } else if (verb == "apply") {
    need(2, "apply <picexpr> <module>");
    PicardElement g = eval_picexpr(session, args[0]);
    out << to_string(act_on_projective(g, session.module(args[1]))) << "\n";
  } else if (verb == "theta") {
    need(2, "theta <P> <Q>");
    out << to_string(maximal_embedding(session.module(args[0]), session.module(args[1]))) << "\n";
  } else if (verb == "kernel") {
    need(2, "kernel <P> <simple>");
    SimpleModule s = parse_simple(params, args[1]);
    out << to_string(kernel_of_surjection(session.module(args[0]), s)) << "\n";
  } else if (verb == "coker") {
    need(2, "coker <P> <Q>");
    HilbertWindow h = cokernel_hilbert(session.module(args[0]), session.module(args[1]));
    out << "n < " << h.lo << ": " << h.below << "\n";
    for (long i = h.lo; i < h.hi; ++i) out << i << ": " << h.at(i) << "\n";
    out << "n >= " << h.hi << ": " << h.above << "\n";
  } else if (verb == "ext") {
    need(2, "ext <S> <T>");
    std::map<long, int> e = ext1(parse_simple(params, args[0]), parse_simple(params, args[1]));
    if (e.empty()) {
      out << "{}\n";
    } else {
      out << "{";
      bool first = true;
      for (const auto& [d, k] : e) {
        out << (first ? "" : ", ") << d << ": " << k;
        first = false;
      }
      out << "}\n";
    }
  } else if (verb == "orbit") {
    need(1, "orbit <P>");
    std::set<long> o = orbit_invariant(session.module(args[0]));
    out << "{";
    bool first = true;
    for (long n : o) {
      out << (first ? "" : ", ") << n;
      first = false;
    }
    out << "}\n";
  } else if (verb == "coverage") {
    need(1, "coverage <modules...> --closure=iotas|shifts|both [--window=lo..hi]");
    CoverageOptions copts;
    if (options.window) {
      copts.window_lo = options.window->first;
      copts.window_hi = options.window->second + 1;
    }
    std::vector<StructureSequence> base;
    bool closure_seen = false;
    for (const std::string& a : args) {
      if (a.rfind("--closure=", 0) == 0) {
        std::string c = a.substr(10);
        if (c == "iotas") copts.iotas = true;
        else if (c == "shifts") copts.shifts = true;
        else if (c == "both") copts.iotas = copts.shifts = true;
        else throw domain_error("closure must be iotas, shifts or both");
        closure_seen = true;
      } else if (a.rfind("--window=", 0) == 0) {
        auto [lo, hi] = parse_window_arg(a.substr(9));
        copts.window_lo = lo;
        copts.window_hi = hi + 1;
      } else {
        base.push_back(session.module(a));
      }
    }
    if (!closure_seen) throw domain_error("coverage needs --closure=iotas|shifts|both");
    CoverageReport report = coverage_report(base, copts);
    if (report.generates) {
      out << "GENERATES\n";
    } else {
      out << "NOT GENERATING: uncovered " << to_string(*report.witness) << "\n";
    }
    for (long n = report.window_lo; n < report.window_hi; ++n)
      out << n << ": " << fiber_line(params, report.window[static_cast<size_t>(n - report.window_lo)])
          << "\n";
    out << "below: " << fiber_line(params, report.below) << "\n";
    out << "above: " << fiber_line(params, report.above) << "\n";
  } else if (verb == "compose") {
    need(1, "compose <picexpr>");
    PicardElement g = eval_picexpr(session, args[0]);
    if (g.is_identity()) {
      out << "identity\n";
    } else {
      out << (g.sign() > 0 ? "even" : "odd") << " offset=" << to_string(g.offset()) << " flips={";
      bool first = true;
      for (const Coordinate& j : g.flips()) {
        out << (first ? "" : ", ") << to_string(j);
        first = false;
      }
      out << "} = " << to_string(g) << "\n";
    }
  } else if (verb == "render") {
    long lo = -5, hi = 5;
    if (options.window) {
      lo = options.window->first;
      hi = options.window->second;
    }
    std::optional<PicardElement> annotate;
    for (const std::string& a : args)
      if (a.rfind("--", 0) != 0) annotate = eval_picexpr(session, a);
    out << render_simples(params, lo, hi, options.format, annotate);
  } else {
    throw domain_error("unknown verb '" + verb + "'");
  }
}

// ---------------------------------------------------------------------------
// selftest: randomized law checks over all four cases

namespace {

StructureSequence random_projective(std::mt19937_64& rng, const GWAParameters& params,
                                    long half_width) {
  std::uniform_int_distribution<long> pick_lo(-half_width, 0);
  std::uniform_int_distribution<long> pick_len(0, half_width);
  long lo = pick_lo(rng);
  long len = pick_len(rng);
  std::vector<SimpleKind> ik, mk;
  for (long i = 0; i < len; ++i) {
    switch (params.root_case()) {
      case RootCase::multiple:
        ik.push_back(rng() % 2 ? SimpleKind::X : SimpleKind::Y);
        break;
      case RootCase::congruent: {
        unsigned r = rng() % 3;
        ik.push_back(r == 0 ? SimpleKind::X : r == 1 ? SimpleKind::Y : SimpleKind::Z);
        break;
      }
      default:
        ik.push_back(rng() % 2 ? SimpleKind::X0 : SimpleKind::Y0);
        mk.push_back(rng() % 2 ? SimpleKind::Xm : SimpleKind::Ym);
        break;
    }
  }
  return from_factors(FactorAssignment(params, lo, std::move(ik), lo, std::move(mk)));
}

}  // namespace

int selftest(unsigned long long seed, std::ostream& out) {
  std::mt19937_64 rng(seed);
  int failures = 0;
  long checks = 0;
  auto check = [&](bool ok, const char* what) {
    ++checks;
    if (!ok) {
      ++failures;
      out << "selftest failure: " << what << "\n";
    }
  };

  std::vector<GWAParameters> cases = {
      GWAParameters::multiple_root(), GWAParameters::congruent_root(1),
      GWAParameters::congruent_root(2), GWAParameters::generic_root(),
      GWAParameters::half_integer_root(Rational(1, 2))};

  for (const GWAParameters& params : cases) {
    for (int iter = 0; iter < 80; ++iter) {
      StructureSequence p = random_projective(rng, params, 6);
      StructureSequence q = random_projective(rng, params, 6);
      check(is_projective(p), "random factor assignments are projective");
      check(from_factors(simple_factors(p)) == p, "factor / constant round trip");

      std::uniform_int_distribution<long> pick(-6, 6);
      Coordinate j = Coordinate::integer(pick(rng));
      if (params.noncongruent() && rng() % 2) j = j + params.m();
      PicardElement iota = PicardElement::make(params, +1, Coordinate(), {j});
      check(act_on_projective(iota, act_on_projective(iota, p)) == p, "involution squares to id");

      RootMultiset theta = maximal_embedding(p, q);
      bool div_ok = true;
      // θ·p_i must land inside (q_i): q_i | θ p_i
      for (long i = std::min(p.lo(), q.lo()) - 1; i <= std::max(p.hi(), q.hi()); ++i)
        div_ok = div_ok && divides(canonical_component(q, i),
                                   multiply(theta, canonical_component(p, i)));
      check(div_ok, "maximal embedding divisibility");

      GeneratorWord word;
      std::uniform_int_distribution<int> wlen(0, 4);
      int len = wlen(rng);
      for (int t = 0; t < len; ++t) {
        switch (rng() % (params.root_case() == RootCase::half_integer ? 4 : 3)) {
          case 0: word.push_back({GeneratorToken::Kind::shift, pick(rng), {}}); break;
          case 1: word.push_back({GeneratorToken::Kind::omega, 0, {}}); break;
          case 2: {
            Coordinate fp = Coordinate::integer(pick(rng));
            if (params.noncongruent() && rng() % 2) fp = fp + params.m();
            word.push_back({GeneratorToken::Kind::iota, 0, {fp}});
            break;
          }
          default: word.push_back({GeneratorToken::Kind::half_shift, 0, {}}); break;
        }
      }
      PicardElement g = classify(params, word);
      StructureSequence gp = act_on_projective(g, p);
      check(is_projective(gp), "picard action preserves projectivity");
      bool compat = true;
      long m_int = params.integral_m() ? params.m_integer() : 0;
      for (long x = p.lo() - 2; x < p.hi() + m_int + 2; ++x) {
        SimpleModule image = act_on_simple(g, simple_factor(p, x));
        Coordinate y = image.coordinate();
        FiberFamily fam = on_integer_lattice(params, y) ? FiberFamily::integer_family
                                                        : FiberFamily::m_family;
        long idx = fam == FiberFamily::integer_family ? y.as_integer()
                                                      : (y - params.m()).as_integer();
        compat = compat && simple_factor(gp, idx, fam) == image;
      }
      check(compat, "factors of the image are images of the factors");
    }
  }
  out << "selftest seed=" << seed << ": " << checks << " checks, " << failures << " failures\n";
  return failures;
}

}  // namespace gwa
