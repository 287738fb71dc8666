#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "folia/rational.hpp"

namespace folia {

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// Replays the lambda-family example: the three singular sets, the I1
/// pullback against the closed form, and the restriction to x = 0.
std::vector<Check> verify_example(const Rational& lambda);

/// The lambda-family example as text.
std::string lambda_example_text();

/// Runs the command line (args excludes the program name) and returns the
/// exit code: 0 success, 2 parse, 3 validation, 4 abort, 5 invariant breach.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace folia
