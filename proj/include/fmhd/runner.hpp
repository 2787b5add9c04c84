#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace fmhd {

/// Command-line overrides; everything physical lives in the config file.
struct RunOverrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::string> output_dir;
};

/// Execute one subcommand against a JSON config. Returns the process exit
/// code: 0 all assertions pass, 1 configuration error, 2 assertion failure
/// (including blow-up/CFL aborts).
int run_subcommand(const std::string& subcommand, const std::string& config_path,
                   const RunOverrides& overrides);

/// Full CLI entry point (argument parsing + dispatch).
int run_cli(int argc, const char* const* argv);

}  // namespace fmhd
