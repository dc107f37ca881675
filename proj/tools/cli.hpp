#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rzs/closedform/closed_form.hpp"

namespace rzs::cli {

/// Exit codes: 0 success or PASS, 1 a failed verification, 2 usage or
/// domain error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Constant names accepted by `constant`:
///   pi, log2, logpi, gamma, catalan (or G), logA,
///   zeta:J, beta:J, zeta_deriv:S[:A], clausen:M:Q (angle Q pi),
///   lgamma:Z, negapolygamma:M:Z
/// Returned as a closed form so exact special values stay exact.
closedform::ClosedForm parse_constant(const std::string& name);

/// Runs one command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rzs::cli
