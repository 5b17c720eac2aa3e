#pragma once

#include <ostream>

namespace confspace {

// Entry point of the confspace command-line tool. Writes the JSON run report
// to `out` and diagnostics to `err`. Returns 0 on success, 1 on a domain
// failure (failed check, construction error, configuration without
// combinatorics, ...), 2 on usage, file or parse errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace confspace
