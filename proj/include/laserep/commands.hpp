#pragma once

#include <iosfwd>
#include <string>

#include "config.hpp"

namespace laserep
{
// Process exit codes
enum ExitCode : int
{
    k_exit_ok = 0,
    k_exit_input = 2,
    k_exit_scan_failed = 3,
    k_exit_sum_rule = 4,
    k_exit_oracle = 5,
};

struct CommandOptions
{
    bool inject_m5_sign_error{false};  //!< test hook for the oracle command
};

// Single point: summary and one CSV row (also written to `output` if set)
int cmd_point(Config const& cfg, std::ostream& out);

// 1-D scan or row-major 2-D grid to CSV plus a replayable `.meta` file
int cmd_scan(Config const& cfg, std::ostream& out, std::ostream& err);

// Channel sum against the laser-free value; fails when gap >= tolerance
int cmd_sumrule(Config const& cfg, std::ostream& out);

// Closed form against the gamma-trace engine on seeded random points
int cmd_validate(Config const& cfg, CommandOptions const& opts, std::ostream& out);

/*!
 * Dispatch by subcommand name. Input, domain and kinematic errors are
 * reported on `err` and mapped to exit code 2.
 */
int run_command(std::string const& name,
                Config const& cfg,
                CommandOptions const& opts,
                std::ostream& out,
                std::ostream& err);

}  // namespace laserep
