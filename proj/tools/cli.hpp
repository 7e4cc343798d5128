#pragma once

#include <string>
#include <vector>

namespace hypercp::cli {

// Entry point shared by the executable and the tests. Returns the process
// exit status; diagnostics go to stderr as a single line.
int run(const std::vector<std::string>& args);

// Writes `contents` to a sibling temp file and renames it over `path`.
void write_atomic(const std::string& path, const std::string& contents);

}  // namespace hypercp::cli
