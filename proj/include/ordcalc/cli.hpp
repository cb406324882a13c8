#ifndef ORDCALC_CLI_HPP
#define ORDCALC_CLI_HPP

#include <atomic>
#include <iosfwd>
#include <string>
#include <vector>

namespace ordcalc {

// One row per subcommand: which library operations the subcommand reaches.
// The coverage test asserts every operation appears in exactly one row.
struct CommandInfo {
    std::string name;
    std::vector<std::string> operations;
};

const std::vector<CommandInfo>& command_table();

// Every public library operation, by its canonical name.
std::vector<std::string> operation_names();

// Lets the binary wire a termination-signal flag into long-running
// subcommands; they stop between steps and report partial progress.
void install_stop_flag(const std::atomic<bool>* flag);

// Full dispatch: parses argv, runs the subcommand, writes results to `out`
// and diagnostics to `err`. Returns the process exit code: 0 success,
// 1 domain error, 2 budget exhaustion, 3 parse error, 130 interrupted.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ordcalc

#endif
