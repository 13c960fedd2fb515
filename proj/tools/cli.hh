#ifndef IASL_GUARD_TOOLS_CLI_HH
#define IASL_GUARD_TOOLS_CLI_HH 1

#include <iosfwd>

namespace iasl
{
    /// Exit codes: 0 true / found / clean, 1 false / not found, 2 input or feasibility error.
    auto run_cli(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int;
}

#endif
