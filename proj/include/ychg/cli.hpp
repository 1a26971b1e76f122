#ifndef YCHG_CLI_HPP
#define YCHG_CLI_HPP

namespace ychg {

/// Entry point behind the `ychg` binary. Exit codes: 0 success,
/// 1 validation or parse error (including bad flags), 2 I/O error.
int run_cli(int argc, const char* const* argv);

} // namespace ychg

#endif
