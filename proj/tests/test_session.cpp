#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "gwa/render.hpp"
#include "gwa/session.hpp"
#include "test_support.hpp"

using namespace gwa;

namespace {

const char* kDemo = R"(# congruent demo
gwa { m = 2 }
module A { window = 0..0 ; letters = }
module P { window = 0..1 ; letters = z }
module Q { window = -1..1 ; letters = z+m, 1 }
element g = S^2 * w
)";

std::string run(Session& session, const std::string& verb, std::vector<std::string> args = {},
                CommandOptions options = {}) {
  std::ostringstream out;
  run_command(session, verb, args, options, out);
  return out.str();
}

}  // namespace

TEST_CASE("session files parse and show round-trips") {
  Session session = parse_session(kDemo);
  CHECK(session.params() == GWAParameters::congruent_root(2));
  CHECK(session.modules().size() == 3);
  CHECK(session.module("A") == StructureSequence::free_module(session.params(), 0));
  CHECK(session.element("g") != nullptr);
  CHECK(session.element("missing") == nullptr);

  std::string shown = show_session(session);
  Session reparsed = parse_session(shown);
  CHECK(show_session(reparsed) == shown);
  CHECK(reparsed.module("P") == session.module("P"));
  CHECK(*reparsed.element("g") == *session.element("g"));
}

TEST_CASE("session parse errors carry positions") {
  try {
    parse_session("gwa { m = banana }");
    CHECK(false);
  } catch (const parse_error& e) {
    CHECK(e.line() == 1);
  }
  CHECK_THROWS_AS(parse_session("module A { window = 0..0 ; letters = }"), parse_error);
  CHECK_THROWS_AS(parse_session("gwa { m = 2 }\nmodule A { window = 0..1 ; letters = }"),
                  parse_error);
  CHECK_THROWS_AS(parse_session(""), parse_error);
}

TEST_CASE("verbs delegate to the library") {
  Session session = parse_session(kDemo);

  CHECK(run(session, "projective?", {"A"}) == "true\n");
  CHECK(run(session, "theta", {"A", "A"}) == "1\n");
  CHECK(run(session, "theta", {"A", "P"}) == "(z+0)\n");
  CHECK(run(session, "compose", {"i{0} * i{0}"}) == "identity\n");
  CHECK(run(session, "kernel", {"A", "X<2>"}) == "window = 0..1 ; letters = z+m\n");
  CHECK(run(session, "ext", {"X<0>", "Z<0>"}) == "{0: 1}\n");
  CHECK(run(session, "ext", {"X<0>", "Y<0>"}) == "{}\n");
  CHECK(run(session, "orbit", {"A"}) == "{0, 1}\n");
  CHECK(run(session, "apply", {"g", "A"}) ==
        to_string(act_on_projective(*session.element("g"),
                                    session.module("A"))) + "\n");

  std::string coverage = run(session, "coverage", {"A", "--closure=iotas"});
  CHECK(coverage.rfind("NOT GENERATING: uncovered Z<-1>", 0) == 0);
  std::string covshift = run(session, "coverage", {"A", "--closure=shifts"});
  CHECK(covshift.rfind("GENERATES", 0) == 0);

  std::string factors = run(session, "factors", {"A"});
  CHECK(factors.find("F<0> = Z<0>") != std::string::npos);
  CHECK(factors.find("F<1> = Z<1>") != std::string::npos);
  CHECK(factors.find("tails: F<n> = X<n> for n >= 2") != std::string::npos);

  std::string coker = run(session, "coker", {"P", "A"});
  CHECK(coker.find("0: 1") != std::string::npos);

  CHECK_THROWS_AS(run(session, "frobnicate"), domain_error);
  CHECK_THROWS_AS(run(session, "projective?", {"nope"}), domain_error);
  CHECK_THROWS_AS(run(session, "coverage", {"A"}), domain_error);
}

TEST_CASE("named elements compose inside expressions") {
  Session session = parse_session(kDemo);
  PicardElement direct = eval_picexpr(session, "g * g");
  PicardElement expected = compose(*session.element("g"), *session.element("g"));
  CHECK(direct == expected);
  CHECK_THROWS_AS(eval_picexpr(session, "unknown_name"), parse_error);
}

TEST_CASE("ascii rendering shows the case's fiber pattern") {
  GWAParameters c2 = GWAParameters::congruent_root(2);
  std::string tripled = render_simples(c2, -2, 2, "ascii");
  CHECK(tripled.find("X") != std::string::npos);
  CHECK(tripled.find("Z") != std::string::npos);
  CHECK(tripled.find("Y") != std::string::npos);

  GWAParameters m0 = GWAParameters::multiple_root();
  std::string doubled = render_simples(m0, -2, 2, "ascii");
  CHECK(doubled.find("Z") == std::string::npos);

  GWAParameters g = GWAParameters::generic_root();
  std::string interleaved = render_simples(g, 0, 1, "ascii");
  CHECK(interleaved.find("m") != std::string::npos);
  CHECK(interleaved.find("1 + m") != std::string::npos);

  std::string svg = render_simples(c2, -1, 1, "svg");
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("<circle") != std::string::npos);

  CHECK_THROWS_AS(render_simples(c2, 0, 1, "png"), domain_error);
}

TEST_CASE("render is deterministic and annotations list the action") {
  Session session = parse_session(kDemo);
  CommandOptions options;
  options.window = {{-2, 2}};
  std::string a = run(session, "render", {"g"}, options);
  std::string b = run(session, "render", {"g"}, options);
  CHECK(a == b);
  CHECK(a.find("action of") != std::string::npos);

  options.format = "svg";
  std::string svg = run(session, "render", {}, options);
  CHECK(svg.rfind("<svg", 0) == 0);
}

TEST_CASE("selftest passes on a few seeds") {
  std::ostringstream sink;
  CHECK(selftest(1, sink) == 0);
  CHECK(selftest(20240811, sink) == 0);
}
