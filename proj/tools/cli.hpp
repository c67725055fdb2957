#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sal::cli {

// Exit statuses shared by every subcommand.
enum Status : int
{
    affirmative = 0, // true / valid / satisfiable / proof ok
    negative = 1,    // false / countermodel / unsat / proof rejected
    usage_error = 2,
};

// args excludes the program name.
int run( const std::vector< std::string >& args, std::ostream& out, std::ostream& err );

} // namespace sal::cli
