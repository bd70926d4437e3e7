#pragma once

namespace spinboson {

// Entry point of the spinboson executable, factored out so tests can drive
// it in-process. Exit codes: 0 success, 2 config error, 3 numerical failure.
int cli_main(int argc, const char* const* argv);

}  // namespace spinboson
