#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace citemetrics::cli {

/// Runs one citemetrics command. `args` excludes the program name.
/// Returns the process exit status: 0 only when every requested output
/// was written.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace citemetrics::cli
