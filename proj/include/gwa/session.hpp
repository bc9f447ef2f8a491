#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gwa/textio.hpp"

namespace gwa {

/// A batch session: one parameter choice, named modules, named picard
/// elements. Parsed from the line-oriented session grammar; `show` output
/// re-parses to an identical session.
class Session {
public:
  explicit Session(GWAParameters params) : params_(params) {}

  const GWAParameters& params() const { return params_; }

  void bind_module(const std::string& name, StructureSequence seq);
  void bind_element(const std::string& name, PicardElement g);

  const StructureSequence& module(const std::string& name) const;
  const PicardElement* element(const std::string& name) const;  // nullptr when absent

  const std::vector<std::pair<std::string, StructureSequence>>& modules() const {
    return modules_;
  }
  const std::vector<std::pair<std::string, PicardElement>>& elements() const {
    return elements_;
  }

private:
  GWAParameters params_;
  std::vector<std::pair<std::string, StructureSequence>> modules_;
  std::vector<std::pair<std::string, PicardElement>> elements_;
};

Session parse_session(std::string_view text);
std::string show_session(const Session& session);

/// Resolve a picard expression against a session (named elements allowed).
PicardElement eval_picexpr(const Session& session, std::string_view text);

struct CommandOptions {
  std::string format = "ascii";
  std::optional<std::pair<long, long>> window;  // inclusive lo, hi
  unsigned long long seed = 0;
};

/// Run one verb against a session, writing the report to `out`. Throws
/// domain_error / parse_error; every verb delegates to one library call.
void run_command(Session& session, const std::string& verb,
                 const std::vector<std::string>& args, const CommandOptions& options,
                 std::ostream& out);

/// Seeded randomized law checks used by the `selftest` verb; returns the
/// number of failed checks (0 on success).
int selftest(unsigned long long seed, std::ostream& out);

}  // namespace gwa
