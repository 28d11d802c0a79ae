#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace owlkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

// Runs one subcommand. `args` excludes the program name. Payload goes to
// `out`, diagnostics to `err`. Returns an exit code above.
//
// `prompt_dir` is the default for `generate --prompts`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, const std::string& prompt_dir = {});

}  // namespace owlkit::cli
