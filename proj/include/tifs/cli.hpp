#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tifs {

// Runs one CLI invocation. Machine-readable results go to `out` (or the
// --out path); human summaries and diagnostics go to `err`. Exit codes:
// 0 success, 1 verification or classification failure, 2 usage error.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tifs
