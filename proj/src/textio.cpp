#include "gwa/textio.hpp"

#include <cctype>
#include <sstream>

namespace gwa {

namespace {

std::string signed_literal(long i) {
  return i < 0 ? std::to_string(i) : "+" + std::to_string(i);
}

// Single-line token scanner with position tracking for parse errors.
class Scanner {
public:
  explicit Scanner(std::string_view text, int line = 1, int column = 1)
      : text_(text), line_(line), column_(column) {}

  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {  // line comment
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool try_consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      advance();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!try_consume(c)) fail(std::string("expected '") + c + "'");
  }

  bool try_keyword(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    // keywords end at a non-identifier character
    size_t end = pos_ + word.size();
    if (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
      return false;
    for (size_t i = 0; i < word.size(); ++i) advance();
    return true;
  }

  std::string identifier() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      advance();
    if (pos_ == start) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  long integer() {
    skip_ws();
    size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) advance();
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) advance();
    if (pos_ == start || (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(text_[start]))))
      fail("expected an integer");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  Rational rational() {
    long num = integer();
    if (try_consume('/')) {
      long den = integer();
      if (den == 0) fail("zero denominator");
      return Rational(num, den);
    }
    return Rational(num);
  }

  [[noreturn]] void fail(const std::string& message) {
    throw parse_error(message, line_, column_);
  }

  int line() const { return line_; }
  int column() const { return column_; }

private:
  void advance() {
    if (pos_ < text_.size()) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_;
  int column_;
};

std::string kind_name(SimpleKind k) {
  switch (k) {
    case SimpleKind::X: return "X";
    case SimpleKind::Y: return "Y";
    case SimpleKind::Z: return "Z";
    case SimpleKind::X0: return "X0";
    case SimpleKind::Y0: return "Y0";
    case SimpleKind::Xm: return "Xm";
    case SimpleKind::Ym: return "Ym";
    case SimpleKind::M: return "M";
  }
  return "?";
}

}  // namespace

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_string(const Coordinate& c) {
  if (c.mcoef() == 0) return to_string(c.rat());
  std::string mpart;
  long mc = c.mcoef();
  std::string coef = std::abs(mc) == 1 ? "" : std::to_string(std::abs(mc));
  if (c.rat() == Rational(0))
    return (mc < 0 ? "-" : "") + coef + "m";
  return to_string(c.rat()) + (mc < 0 ? " - " : " + ") + coef + "m";
}

std::string to_string(const GWAParameters& params) {
  switch (params.root_case()) {
    case RootCase::multiple: return "m = 0";
    case RootCase::congruent: return "m = " + std::to_string(params.m_integer());
    case RootCase::generic: return "m = generic";
    case RootCase::half_integer: return "m = " + to_string(params.m_rational());
  }
  return "";
}

std::string to_string(const RootToken& t) {
  if (t.shift_family) return "(z+m" + signed_literal(t.index) + ")";
  return "(z" + signed_literal(t.index) + ")";
}

std::string to_string(const RootMultiset& ms) {
  if (ms.is_one()) return "1";
  std::string out;
  for (const auto& [t, c] : ms.factors()) {
    if (!out.empty()) out += "*";
    out += to_string(t);
    if (c > 1) out += "^" + std::to_string(c);
  }
  return out;
}

std::string to_string(Letter l) {
  switch (l) {
    case Letter::one: return "1";
    case Letter::z: return "z";
    case Letter::zm: return "z+m";
    case Letter::f: return "f";
  }
  return "?";
}

std::string to_string(const StructureSequence& p) {
  std::string out =
      "window = " + std::to_string(p.lo()) + ".." + std::to_string(p.hi()) + " ; letters =";
  bool first = true;
  for (Letter l : p.window()) {
    out += first ? " " : ", ";
    out += to_string(l);
    first = false;
  }
  return out;
}

std::string to_string(const SimpleModule& s) {
  if (s.kind() == SimpleKind::M) return "M(" + to_string(s.lambda()) + ")";
  return kind_name(s.kind()) + "<" + std::to_string(s.shift()) + ">";
}

std::string to_string(const PicardElement& g) {
  // normal-form expression: flips, then the translation, then omega;
  // rightmost factor acts first
  std::vector<std::string> parts;
  const GWAParameters& params = g.params();
  if (!g.flips().empty()) {
    if (params.integral_m()) {
      std::string s = "i{";
      bool first = true;
      for (const Coordinate& j : g.flips()) {
        if (!first) s += ",";
        s += std::to_string(j.as_integer());
        first = false;
      }
      parts.push_back(s + "}");
    } else {
      std::string i0, im;
      for (const Coordinate& j : g.flips()) {
        if (on_integer_lattice(params, j)) {
          if (!i0.empty()) i0 += ",";
          i0 += std::to_string(j.as_integer());
        } else {
          if (!im.empty()) im += ",";
          im += std::to_string((j - params.m()).as_integer());
        }
      }
      if (!i0.empty()) parts.push_back("i0{" + i0 + "}");
      if (!im.empty()) parts.push_back("im{" + im + "}");
    }
  }
  Coordinate t = g.sign() < 0 ? g.offset() - (params.m() - 1) : g.offset();
  if (t.is_integral()) {
    long n = t.as_integer();
    if (n != 0) parts.push_back(n == 1 ? "S" : "S^" + std::to_string(n));
  } else {
    long whole = to_long(t.rat() - Rational(1, 2));
    if (whole != 0) parts.push_back(whole == 1 ? "S" : "S^" + std::to_string(whole));
    parts.push_back("H");
  }
  if (g.sign() < 0) parts.push_back("w");
  if (parts.empty()) return "1";
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += " * ";
    out += p;
  }
  return out;
}

Rational parse_rational(std::string_view text) {
  Scanner sc(text);
  Rational r = sc.rational();
  if (!sc.done()) sc.fail("trailing input after rational");
  return r;
}

GWAParameters parse_params(std::string_view text) {
  Scanner sc(text);
  if (sc.try_keyword("generic")) {
    if (!sc.done()) sc.fail("trailing input after 'generic'");
    return GWAParameters::generic_root();
  }
  Rational r = sc.rational();
  if (!sc.done()) sc.fail("trailing input after m value");
  if (is_integer(r)) {
    long k = to_long(r);
    if (k == 0) return GWAParameters::multiple_root();
    if (k > 0) return GWAParameters::congruent_root(k);
    sc.fail("m must be 0, a positive integer, an odd half or 'generic'");
  }
  if (is_half_odd(r)) return GWAParameters::half_integer_root(r);
  sc.fail("m must be 0, a positive integer, an odd half or 'generic'");
  throw parse_error("unreachable", 0, 0);
}

RootMultiset parse_multiset(const GWAParameters& params, std::string_view text) {
  Scanner sc(text);
  RootMultiset out(params);
  if (sc.try_keyword("1")) {
    if (!sc.done()) sc.fail("trailing input after '1'");
    return out;
  }
  bool first = true;
  while (!sc.done()) {
    if (!first) {
      if (!sc.try_consume('*')) sc.fail("expected '*' between factors");
    }
    first = false;
    sc.expect('(');
    if (!sc.try_keyword("z")) sc.fail("expected 'z'");
    bool shift_family = false;
    long index = 0;
    if (sc.peek() == '+' || sc.peek() == '-') {
      // either +m+i / +m-i / a signed integer
      Scanner save = sc;
      if (sc.try_consume('+') && sc.try_keyword("m")) {
        shift_family = true;
        if (sc.peek() == '+' || sc.peek() == '-') index = sc.integer();
      } else {
        sc = save;
        index = sc.integer();
      }
    }
    sc.expect(')');
    long count = 1;
    if (sc.try_consume('^')) {
      count = sc.integer();
      if (count < 1) sc.fail("exponent must be positive");
    }
    out.insert(RootToken{shift_family, index}, count);
  }
  return out;
}

SimpleModule parse_simple(const GWAParameters& params, std::string_view text) {
  Scanner sc(text);
  std::string name = sc.identifier();
  if (name == "M") {
    sc.expect('(');
    // coordinate: rational [± [k]m] | [-|k]m
    Rational rat(0);
    long mcoef = 0;
    bool neg = sc.try_consume('-');
    if (sc.try_keyword("m")) {
      mcoef = neg ? -1 : 1;
    } else {
      rat = sc.rational();
      if (neg) rat = -rat;
      if (sc.peek() == 'm') {  // forms like "2m"
        sc.try_keyword("m");
        mcoef = to_long(rat);
        rat = Rational(0);
      } else if (sc.peek() == '+' || sc.peek() == '-') {
        bool minus = sc.try_consume('-');
        if (!minus) sc.expect('+');
        long coef = 1;
        if (sc.peek() != 'm') coef = sc.integer();
        if (!sc.try_keyword("m")) sc.fail("expected 'm'");
        mcoef = minus ? -coef : coef;
      }
    }
    sc.expect(')');
    if (!sc.done()) sc.fail("trailing input after simple module");
    Coordinate lambda(rat, mcoef);
    if (!params.noncongruent() || params.root_case() == RootCase::half_integer) {
      // m is numeric here; fold the formal part
      if (mcoef != 0) {
        if (params.root_case() == RootCase::generic) throw domain_error("unreachable");
        lambda = Coordinate(rat + Rational(mcoef) * params.m_rational());
      }
    }
    return SimpleModule::make_m(params, lambda);
  }

  SimpleKind kind;
  if (name == "X") kind = SimpleKind::X;
  else if (name == "Y") kind = SimpleKind::Y;
  else if (name == "Z") kind = SimpleKind::Z;
  else if (name == "X0") kind = SimpleKind::X0;
  else if (name == "Y0") kind = SimpleKind::Y0;
  else if (name == "Xm") kind = SimpleKind::Xm;
  else if (name == "Ym") kind = SimpleKind::Ym;
  else sc.fail("unknown simple family '" + name + "'");
  sc.expect('<');
  long n = sc.integer();
  sc.expect('>');
  if (!sc.done()) sc.fail("trailing input after simple module");
  return SimpleModule::make(params, kind, n);
}

namespace {

std::set<Coordinate> flip_list(Scanner& sc, const GWAParameters& params, bool m_family) {
  std::set<Coordinate> points;
  sc.expect('{');
  if (!sc.try_consume('}')) {
    while (true) {
      long n = sc.integer();
      points.insert(m_family ? Coordinate::integer(n) + params.m() : Coordinate::integer(n));
      if (sc.try_consume('}')) break;
      sc.expect(',');
    }
  }
  return points;
}

}  // namespace

GeneratorWord parse_picexpr(const GWAParameters& params, std::string_view text) {
  Scanner sc(text);
  GeneratorWord word;
  bool first = true;
  while (true) {
    if (!first) {
      if (sc.done()) break;
      if (!sc.try_consume('*')) sc.fail("expected '*' between picard factors");
    } else if (sc.done()) {
      sc.fail("empty picard expression");
    }
    first = false;

    if (sc.try_keyword("1")) continue;  // identity factor
    if (sc.try_keyword("S")) {
      long n = 1;
      if (sc.try_consume('^')) n = sc.integer();
      word.push_back({GeneratorToken::Kind::shift, n, {}});
      continue;
    }
    if (sc.try_keyword("w")) {
      word.push_back({GeneratorToken::Kind::omega, 0, {}});
      continue;
    }
    if (sc.try_keyword("H")) {
      long n = 1;
      if (sc.try_consume('^')) n = sc.integer();
      // H^n for negative n via H^-1 = H * S^-1 (the two commute)
      for (long i = 0; i < std::labs(n); ++i) {
        word.push_back({GeneratorToken::Kind::half_shift, 0, {}});
        if (n < 0) word.push_back({GeneratorToken::Kind::shift, -1, {}});
      }
      continue;
    }
    if (sc.try_keyword("i0")) {
      if (!params.noncongruent()) sc.fail("i0{...} belongs to the non-congruent cases; use i{...}");
      word.push_back({GeneratorToken::Kind::iota, 0, flip_list(sc, params, false)});
      continue;
    }
    if (sc.try_keyword("im")) {
      if (!params.noncongruent()) sc.fail("im{...} belongs to the non-congruent cases; use i{...}");
      word.push_back({GeneratorToken::Kind::iota, 0, flip_list(sc, params, true)});
      continue;
    }
    if (sc.try_keyword("i")) {
      if (!params.integral_m()) sc.fail("use i0{...} or im{...} when m is not an integer");
      word.push_back({GeneratorToken::Kind::iota, 0, flip_list(sc, params, false)});
      continue;
    }
    sc.fail("expected a picard generator (S, w, H, i{...}, i0{...}, im{...} or 1)");
  }
  return word;
}

}  // namespace gwa
