#include "laserep/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "laserep/errors.hpp"
#include "laserep/oracle.hpp"
#include "laserep/parallel.hpp"

namespace laserep
{
namespace
{
double constexpr k_oracle_tolerance = 1e-9;

std::string six_digits(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

int symmetric_cutoff(DcsResult const& r)
{
    return std::max(-r.cutoff_negative, r.cutoff_positive);
}

std::string result_flags(DcsResult const& r)
{
    std::string flags;
    auto add = [&](char const* f) {
        if (!flags.empty())
            flags += ';';
        flags += f;
    };
    if (!r.closed_channels.empty())
        add("CLOSED");
    if (!r.diagnostics.converged)
        add("UNCONVERGED");
    return flags;
}

struct Row
{
    double value{0};
    double value2{0};
    std::optional<double> quantity;
    int cutoff_s{0};
    int cutoff_l{0};
    std::string flags;
    std::string error;
};

void write_file(std::string const& path, std::string const& text)
{
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw DomainError("cannot write '" + path + "'");
    f << text;
    if (!f)
        throw DomainError("failed writing '" + path + "'");
}

std::string quantity_column(ScanQuantity q)
{
    return q == ScanQuantity::Dcs ? "dcs_total" : "momentum_transfer";
}

Row evaluate_row(ScanSpec const& plan, double v1, double v2)
{
    Row row;
    row.value = v1;
    row.value2 = v2;
    try
    {
        DcsRequest req = with_variable(plan.fixed, plan.axis.variable, v1);
        if (plan.second)
            req = with_variable(req, plan.second->variable, v2);
        req.threads = 1;
        if (plan.quantity == ScanQuantity::MomentumTransfer)
        {
            row.quantity = laser_free_momentum_transfer(req);
            return row;
        }
        DcsResult const res = evaluate(req);
        row.quantity = res.total;
        row.cutoff_s = symmetric_cutoff(res);
        row.cutoff_l = res.cutoff_l;
        row.flags = result_flags(res);
    }
    catch (std::exception const& e)
    {
        row.quantity.reset();
        row.flags = "ERROR";
        row.error = e.what();
    }
    return row;
}

std::string metadata(Config const& cfg, ConstantsProfile const& prof, char const* command)
{
    Config resolved = cfg;
    resolved.set("profile", prof.name);
    std::ostringstream os;
    os << "# laserep " << command << " metadata; replay with: laserep " << command
       << " --config <this file>\n"
       << "# constants: c = " << format_number(prof.c)
       << ", proton_mass_ratio = " << format_number(prof.proton_mass_ratio)
       << ", au_field_V_per_cm = " << format_number(prof.au_field_in_V_per_cm)
       << ", hartree_eV = " << format_number(prof.hartree_in_eV) << "\n"
       << resolved.serialize();
    return os.str();
}
}  // namespace

//---------------------------------------------------------------------------//
int cmd_point(Config const& cfg, std::ostream& out)
{
    DcsRequest const req = build_request(cfg);
    bool const per_channel = parse_bool(cfg.get("per_channel", "false"), "per_channel");
    DcsResult const res = evaluate(req);

    out << "regime        " << to_string(req.regime) << "\n"
        << "profile       " << req.profile.name << "\n"
        << "dcs_total     " << six_digits(res.total) << " a.u.\n"
        << "dcs_exact     " << format_number(res.total) << "\n"
        << "cutoff_s      " << res.cutoff_negative << ".." << res.cutoff_positive << "\n"
        << "cutoff_l      " << res.cutoff_l << "\n"
        << "channels      " << res.diagnostics.evaluated << " evaluated, "
        << res.closed_channels.size() << " closed\n"
        << "max_residual  " << format_number(res.diagnostics.max_residual) << "\n"
        << "z             " << format_number(res.diagnostics.z) << "\n"
        << "z_p           " << format_number(res.diagnostics.z_p) << "\n"
        << "converged     " << (res.diagnostics.converged ? "yes" : "no") << "\n";
    if (per_channel)
    {
        out << "# s l dcs\n";
        for (auto const& ch : res.per_channel)
            out << ch.s << " " << ch.l << " " << format_number(ch.dcs) << (ch.closed ? " closed" : "") << "\n";
    }

    std::string const csv = "scan_variable,value,dcs_total,cutoff_s,cutoff_l,flags\npoint,,"
                            + format_number(res.total) + "," + std::to_string(symmetric_cutoff(res))
                            + "," + std::to_string(res.cutoff_l) + "," + result_flags(res) + "\n";
    out << csv;
    if (auto const path = cfg.find("output"))
        write_file(*path, csv);
    return k_exit_ok;
}

int cmd_scan(Config const& cfg, std::ostream& out, std::ostream& err)
{
    ScanSpec const plan = build_scan(cfg);
    bool const uses_z = plan.axis.variable == ScanVariable::Z
                        || (plan.second && plan.second->variable == ScanVariable::Z);
    if (uses_z && plan.fixed.regime != Regime::MottLimit)
        throw DomainError("a Z scan requires regime = mott");

    std::vector<double> const outer = plan.axis.values();
    std::vector<double> const inner = plan.second ? plan.second->values() : std::vector<double>{0.0};
    std::size_t const n = outer.size() * inner.size();
    std::vector<Row> const rows = parallel_map<Row>(n, plan.fixed.threads, [&](std::size_t i) {
        return evaluate_row(plan, outer[i / inner.size()], inner[i % inner.size()]);
    });

    std::ostringstream csv;
    csv << "scan_variable,value,";
    if (plan.second)
        csv << "scan_variable_2,value_2,";
    csv << quantity_column(plan.quantity) << ",cutoff_s,cutoff_l,flags\n";
    int ok = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
    {
        Row const& r = rows[i];
        csv << to_string(plan.axis.variable) << "," << format_number(r.value) << ",";
        if (plan.second)
            csv << to_string(plan.second->variable) << "," << format_number(r.value2) << ",";
        if (r.quantity)
        {
            csv << format_number(*r.quantity);
            ++ok;
        }
        if (r.error.empty())
            csv << "," << r.cutoff_s << "," << r.cutoff_l;
        else
            csv << ",,";
        csv << "," << r.flags << "\n";
        if (!r.error.empty())
            err << "row " << i << ": " << r.error << "\n";
    }

    write_file(plan.output_path, csv.str());
    write_file(plan.output_path + ".meta", metadata(cfg, plan.fixed.profile, "scan"));
    out << "wrote " << rows.size() << " rows (" << ok << " ok) to " << plan.output_path << "\n";
    return ok > 0 ? k_exit_ok : k_exit_scan_failed;
}

int cmd_sumrule(Config const& cfg, std::ostream& out)
{
    DcsRequest const req = build_request(cfg);
    if (req.regime != Regime::ElectronDressed)
        throw DomainError("sumrule requires regime = electron_dressed");
    if (!req.laser)
        throw DomainError("sumrule requires 'field_strength'");
    double const tolerance = parse_number(cfg.get("tolerance", "0.01"), "tolerance");
    if (!(tolerance > 0))
        throw DomainError("tolerance must be > 0");

    SumRuleReport const rep = sum_rule_report(req);
    bool const pass = rep.relative_gap < tolerance;
    out << "laser_free    " << format_number(rep.laser_free) << "\n"
        << "summed        " << format_number(rep.summed) << "\n"
        << "relative_gap  " << format_number(rep.relative_gap) << "\n"
        << "cutoff_s      " << rep.cutoff << "\n"
        << "tolerance     " << format_number(tolerance) << "\n"
        << "result        " << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? k_exit_ok : k_exit_sum_rule;
}

int cmd_validate(Config const& cfg, CommandOptions const& opts, std::ostream& out)
{
    ConstantsProfile const& prof = ConstantsProfile::by_name(cfg.get("profile", "paper"));
    std::string const seed_text = cfg.get("seed", "42");
    double const seed = parse_number(seed_text, "seed");
    if (!(seed >= 0) || seed != std::floor(seed) || seed > 1.8e19)
        throw DomainError("seed must be a non-negative integer");
    int const n = parse_integer(cfg.get("n_points", "100"), "n_points");
    if (n < 1)
        throw DomainError("n_points must be >= 1");
    bool const laser_off = parse_bool(cfg.get("laser_off", "false"), "laser_off");

    OracleReport const rep = run_oracle(static_cast<std::uint64_t>(seed), n, prof,
                                        opts.inject_m5_sign_error, laser_off);
    double const worst = std::max(rep.max_amplitude_deviation, rep.max_coefficient_deviation);
    bool const pass = worst < k_oracle_tolerance;
    out << "points                     " << rep.points << "\n"
        << "max_amplitude_deviation    " << format_number(rep.max_amplitude_deviation) << "\n"
        << "max_coefficient_deviation  " << format_number(rep.max_coefficient_deviation) << "\n"
        << "tolerance                  " << format_number(k_oracle_tolerance) << "\n"
        << "result                     " << (pass ? "PASS" : "FAIL") << "\n";
    if (!pass)
        out << "worst point (index " << rep.worst_index << "):\n" << describe(rep.worst) << "\n";
    return pass ? k_exit_ok : k_exit_oracle;
}

int run_command(std::string const& name,
                Config const& cfg,
                CommandOptions const& opts,
                std::ostream& out,
                std::ostream& err)
{
    try
    {
        if (name == "point")
            return cmd_point(cfg, out);
        if (name == "scan")
            return cmd_scan(cfg, out, err);
        if (name == "sumrule")
            return cmd_sumrule(cfg, out);
        if (name == "validate")
            return cmd_validate(cfg, opts, out);
        err << "error: unknown command '" << name << "'\n";
    }
    catch (SingularKinematicsError const& e)
    {
        err << "error: singular kinematics: " << e.what() << "\n";
    }
    catch (ChannelClosedError const& e)
    {
        err << "error: channel closed: " << e.what() << "\n";
    }
    catch (KinematicsError const& e)
    {
        err << "error: kinematics: " << e.what() << "\n";
    }
    catch (DomainError const& e)
    {
        err << "error: invalid input: " << e.what() << "\n";
    }
    catch (std::exception const& e)
    {
        err << "error: " << e.what() << "\n";
    }
    return k_exit_input;
}
}  // namespace laserep
