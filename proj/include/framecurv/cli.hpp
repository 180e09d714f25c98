#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "framecurv/frame.hpp"

namespace framecurv::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kCheckFailure = 2,
  kDomainError = 3,
};

/// A validated manifold description file.
///
///     {"vars":["phi","theta"],
///      "domain":{"phi":[0,6.2832],"theta":[-1.5,1.5]},
///      "frame":{"X1":["1/cosh(theta)","0"],"X2":["0","1"]},
///      "metric":{"a11":-1,"a12":0,"a22":1}}
///
/// "metric" may also carry "a21", which must equal "a12".
struct ManifoldInput {
  ChartFrame frame;
  MetricConstants metric;

  bool lorentzian() const noexcept { return metric.lorentzian(); }
};

/// Throws InputError naming the offending field (and byte offset for JSON
/// syntax errors or expression errors).
ManifoldInput parse_input(std::string_view bytes);

/// Runs one command line (without the program name). The JSON report goes
/// to `out`, human-readable notes to `err`. Returns an ExitCode.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace framecurv::cli
