#pragma once

#include <iosfwd>

namespace cfw::cli {

// Runs the command-line front end. Exit codes: 0 on success or when a
// checked property holds, 1 when verification fails or a property does not
// hold, 2 on usage or input errors.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err, std::istream& in);

}  // namespace cfw::cli
