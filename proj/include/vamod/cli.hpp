#pragma once

#include <string>
#include <vector>

namespace vamod {

// Entry point behind the vamod executable; args excludes the program name.
// Writes requested artifacts, prints report JSON to stdout, and returns the
// process exit code; failures print {"error", "message"} JSON to stderr.
int run(const std::vector<std::string>& args);

} // namespace vamod
