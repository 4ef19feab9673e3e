#pragma once

namespace gel {

// Entry point of the command-line tool. Exit codes: 0 success / valid /
// proof ok; 1 countermodel found / proof rejected; 2 usage or input errors.
int run_cli(int argc, const char* const* argv);

}  // namespace gel
