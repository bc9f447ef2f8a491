#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gwa/session.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw gwa::domain_error("cannot open session file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calculator for rank-one graded modules over a quadratic "
               "generalized Weyl algebra"};
  app.allow_extras();

  std::string session_path;
  gwa::CommandOptions options;
  std::string window_spec;
  std::string verb;
  std::vector<std::string> args;

  app.add_option("--session", session_path, "session file defining parameters and modules");
  app.add_option("--format", options.format, "render format: ascii or svg")
      ->check(CLI::IsMember({"ascii", "svg"}));
  app.add_option("--window", window_spec, "coordinate window lo..hi");
  app.add_option("--seed", options.seed, "seed for the selftest runner");
  app.add_option("verb", verb, "command verb")->required();
  app.add_option("args", args, "verb arguments");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }
  // verb-level flags such as --closure=iotas arrive as extras
  for (const std::string& extra : app.remaining()) args.push_back(extra);

  try {
    if (!window_spec.empty()) {
      size_t dots = window_spec.find("..");
      if (dots == std::string::npos) throw gwa::parse_error("window is spelled lo..hi", 1, 1);
      options.window = {std::stol(window_spec.substr(0, dots)),
                        std::stol(window_spec.substr(dots + 2))};
    }

    if (verb == "selftest") return gwa::selftest(options.seed, std::cout) == 0 ? 0 : 1;

    if (session_path.empty())
      throw gwa::domain_error("verb '" + verb + "' needs --session <file>");
    gwa::Session session = gwa::parse_session(read_file(session_path));
    gwa::run_command(session, verb, args, options, std::cout);
    return 0;
  } catch (const gwa::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const gwa::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
