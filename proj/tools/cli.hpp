#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace isoconj::cli {

/// Runs one command (args exclude the program name) and writes a single JSON
/// document to `out`. Returns 0 on success, 1 on usage errors, 2 on domain errors.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace isoconj::cli
