#pragma once

#include <ostream>

namespace regmap::cli {

/// Entry point of the regmap tool. Returns 0 on success, 1 on invalid input
/// or usage errors, 2 on an internal invariant violation.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace regmap::cli
