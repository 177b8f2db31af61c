#pragma once

namespace cg23 {

// Entry point for the command-line tool: parses argv, dispatches to the
// subcommands (build, conditions, search, certify, sweep, table, enumerate)
// and returns the process exit code: 0 success/pass, 1 check failure or
// nothing found, 2 usage or precondition error.
int run(int argc, char** argv);

}  // namespace cg23
