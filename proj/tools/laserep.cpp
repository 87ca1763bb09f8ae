#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

#include "laserep/commands.hpp"
#include "laserep/errors.hpp"

namespace
{
std::string flag_name(std::string key)
{
    for (char& ch : key)
    {
        if (ch == '_')
            ch = '-';
    }
    return "--" + key;
}
}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Laser-assisted electron-proton scattering cross sections"};
    app.require_subcommand(1, 1);

    std::string config_path;
    app.add_option("--config", config_path, "Configuration file (key = value lines)");

    // Every configuration key doubles as a flag; flags override the file
    std::map<std::string, std::string> flag_values;
    for (auto const& key : laserep::config_keys())
        app.add_option(flag_name(key), flag_values[key], "Sets '" + key + "'");

    laserep::CommandOptions opts;
    app.add_flag("--inject-m5-sign-error", opts.inject_m5_sign_error)->group("");

    for (auto const& [name, help] : {
             std::pair{"point", "Evaluate one cross section"},
             std::pair{"scan", "Scan one or two variables to CSV"},
             std::pair{"sumrule", "Check the channel sum against the laser-free value"},
             std::pair{"validate", "Compare the closed form with the gamma-trace engine"},
         })
    {
        app.add_subcommand(name, help)->fallthrough();
    }

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::CallForHelp const& e)
    {
        return app.exit(e);
    }
    catch (CLI::ParseError const& e)
    {
        app.exit(e);
        return laserep::k_exit_input;
    }

    laserep::Config cfg;
    try
    {
        if (!config_path.empty())
            cfg = laserep::Config::load(config_path);
        for (auto const& [key, value] : flag_values)
        {
            if (app.count(flag_name(key)) > 0)
                cfg.set(key, value);
        }
    }
    catch (std::exception const& e)
    {
        std::cerr << "error: invalid input: " << e.what() << "\n";
        return laserep::k_exit_input;
    }

    std::string const command = app.get_subcommands().front()->get_name();
    return laserep::run_command(command, cfg, opts, std::cout, std::cerr);
}
