#pragma once

#include <stdexcept>
#include <string>

namespace gwa {

/// Violation of an operation precondition. The CLI maps these to exit code 1.
class domain_error : public std::runtime_error {
public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

class parameter_mismatch : public domain_error {
public:
  parameter_mismatch()
      : domain_error("parameter mismatch: operands were built under different gwa parameters") {}
};

class tail_violation : public domain_error {
public:
  explicit tail_violation(const std::string& what) : domain_error("tail violation: " + what) {}
};

class alphabet_violation : public domain_error {
public:
  explicit alphabet_violation(const std::string& what)
      : domain_error("alphabet violation: " + what) {}
};

class not_projective : public domain_error {
public:
  explicit not_projective(const std::string& what) : domain_error("not projective: " + what) {}
};

class no_surjection : public domain_error {
public:
  explicit no_surjection(const std::string& what) : domain_error("no surjection: " + what) {}
};

class inconsistent_assignment : public domain_error {
public:
  explicit inconsistent_assignment(const std::string& what)
      : domain_error("inconsistent assignment: " + what) {}
};

/// Syntax error in a session file, module literal or picard expression.
/// The CLI maps these to exit code 2.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& what, int line, int column)
      : std::runtime_error(what + " at line " + std::to_string(line) + ", column " +
                           std::to_string(column)),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

}  // namespace gwa
