#pragma once

#include <iosfwd>

namespace ringsim {

/// Command-line front door. Exit status 0 = solved, 1 = no resonance
/// (a legitimate answer), 2 = error.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace ringsim
