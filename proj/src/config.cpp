#include "laserep/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "laserep/errors.hpp"

namespace laserep
{
namespace
{
double constexpr k_pi = 3.14159265358979323846;

std::string_view trim(std::string_view s)
{
    auto const first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    auto const last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::string lower(std::string_view s)
{
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char ch) {
        return static_cast<char>(std::tolower(ch));
    });
    return out;
}

// Leading number and the trimmed remainder (the unit)
std::pair<double, std::string> split_unit(std::string_view text, std::string const& key)
{
    text = trim(text);
    char const* begin = text.data();
    char const* end = begin + text.size();
    if (begin != end && *begin == '+')
        ++begin;
    double v = 0;
    auto const [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || !std::isfinite(v))
        throw DomainError(key + ": expected a number, got '" + std::string(text) + "'");
    return {v, lower(trim(std::string_view(ptr, static_cast<std::size_t>(end - ptr))))};
}

void require_non_negative(double v, std::string const& what)
{
    if (v < 0)
        throw DomainError(what + " must be >= 0");
}
}  // namespace

//---------------------------------------------------------------------------//
std::vector<std::string> const& config_keys()
{
    static std::vector<std::string> const keys = {
        "profile",        "regime",         "kinetic_energy", "theta_i",
        "phi_i",          "theta_f",        "phi_f",          "field_strength",
        "frequency",      "z_charge",       "s_range",        "l_range",
        "cutoff_threshold", "threads",      "tolerance",      "per_channel",
        "output",         "seed",           "n_points",       "laser_off",
        "scan_variable",  "scan_min",       "scan_max",       "scan_points",
        "scan_scale",     "scan2_variable", "scan2_min",      "scan2_max",
        "scan2_points",   "scan2_scale",    "quantity",
    };
    return keys;
}

Config Config::parse(std::string_view text, std::string const& origin)
{
    Config cfg;
    std::size_t line_no = 0;
    while (!text.empty())
    {
        auto const nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (auto const hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        auto const eq = line.find('=');
        if (eq == std::string_view::npos)
        {
            throw DomainError(origin + ":" + std::to_string(line_no)
                              + ": expected 'key = value'");
        }
        try
        {
            cfg.set(std::string(trim(line.substr(0, eq))),
                    std::string(trim(line.substr(eq + 1))));
        }
        catch (DomainError const& e)
        {
            throw DomainError(origin + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    return cfg;
}

Config Config::load(std::string const& path)
{
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot read config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path);
}

void Config::set(std::string const& key, std::string value)
{
    auto const& keys = config_keys();
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
        throw DomainError("unknown configuration key '" + key + "'");
    if (value.empty())
        throw DomainError("empty value for '" + key + "'");
    values_[key] = std::move(value);
}

bool Config::has(std::string const& key) const
{
    return values_.count(key) != 0;
}

std::optional<std::string> Config::find(std::string const& key) const
{
    auto const it = values_.find(key);
    if (it == values_.end())
        return std::nullopt;
    return it->second;
}

std::string Config::get(std::string const& key, std::string const& fallback) const
{
    return find(key).value_or(fallback);
}

void Config::merge(Config const& other)
{
    for (auto const& [k, v] : other.values_)
        values_[k] = v;
}

std::string Config::serialize() const
{
    std::string out;
    for (auto const& [k, v] : values_)
        out += k + " = " + v + "\n";
    return out;
}

//---------------------------------------------------------------------------//
double parse_number(std::string_view text, std::string const& key)
{
    auto const [v, unit] = split_unit(text, key);
    if (!unit.empty())
        throw DomainError(key + ": unexpected trailing text '" + unit + "'");
    return v;
}

int parse_integer(std::string_view text, std::string const& key)
{
    text = trim(text);
    int v = 0;
    auto const [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw DomainError(key + ": expected an integer, got '" + std::string(text) + "'");
    return v;
}

bool parse_bool(std::string_view text, std::string const& key)
{
    std::string const v = lower(trim(text));
    if (v == "true" || v == "yes" || v == "1" || v == "on")
        return true;
    if (v == "false" || v == "no" || v == "0" || v == "off")
        return false;
    throw DomainError(key + ": expected a boolean, got '" + v + "'");
}

Energy parse_energy(std::string_view text, ConstantsProfile const& profile)
{
    auto const [v, unit] = split_unit(text, "kinetic_energy");
    require_non_negative(v, "kinetic energy");
    if (unit.empty() || unit == "ev")
        return energy_to_au(v, profile);
    if (unit == "kev")
        return energy_to_au(v * 1e3, profile);
    if (unit == "mev")
        return energy_to_au(v * 1e6, profile);
    if (unit == "au")
        return Energy{v};
    throw DomainError("kinetic_energy: unknown unit '" + unit + "' (eV, keV, MeV, au)");
}

FieldStrength parse_field(std::string_view text, ConstantsProfile const& profile)
{
    auto const [v, unit] = split_unit(text, "field_strength");
    require_non_negative(v, "field strength");
    if (unit.empty() || unit == "v/cm")
        return field_to_au(v, profile);
    if (unit == "au")
        return FieldStrength{v};
    throw DomainError("field_strength: unknown unit '" + unit + "' (V/cm, au)");
}

Frequency parse_photon_energy(std::string_view text, ConstantsProfile const& profile)
{
    auto const [v, unit] = split_unit(text, "frequency");
    if (!(v > 0))
        throw DomainError("frequency must be > 0");
    if (unit.empty() || unit == "ev")
        return photon_energy_to_au(v, profile);
    if (unit == "au")
        return Frequency{v};
    throw DomainError("frequency: unknown unit '" + unit + "' (eV, au)");
}

double parse_angle(std::string_view text, std::string const& key)
{
    auto const [v, unit] = split_unit(text, key);
    if (unit.empty() || unit == "deg")
        return v * k_pi / 180;
    if (unit == "rad")
        return v;
    throw DomainError(key + ": unknown unit '" + unit + "' (deg, rad)");
}

ChannelRange parse_channel_range(std::string_view text, std::string const& key)
{
    text = trim(text);
    auto const colon = text.find(':');
    if (colon == std::string_view::npos)
    {
        int const s = parse_integer(text, key);
        return {s, s};
    }
    ChannelRange r{parse_integer(text.substr(0, colon), key),
                   parse_integer(text.substr(colon + 1), key)};
    if (r.lo > r.hi)
        throw DomainError(key + ": lower order exceeds upper order");
    return r;
}

std::string format_number(double value)
{
    char buf[64];
    auto const [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

//---------------------------------------------------------------------------//
DcsRequest build_request(Config const& cfg)
{
    DcsRequest req;
    req.profile = ConstantsProfile::by_name(cfg.get("profile", "paper"));
    auto const& prof = req.profile;

    auto const kinetic = cfg.find("kinetic_energy");
    if (!kinetic)
        throw DomainError("missing required key 'kinetic_energy'");
    req.kinetic = parse_energy(*kinetic, prof);
    if (!(req.kinetic.value > 0))
        throw DomainError("kinetic energy must be > 0");

    req.geometry.theta_i = parse_angle(cfg.get("theta_i", "0"), "theta_i");
    req.geometry.phi_i = parse_angle(cfg.get("phi_i", "0"), "phi_i");
    req.geometry.theta_f = parse_angle(cfg.get("theta_f", "0"), "theta_f");
    req.geometry.phi_f = parse_angle(cfg.get("phi_f", "0"), "phi_f");

    if (auto const field = cfg.find("field_strength"))
    {
        req.laser = build_laser(parse_field(*field, prof),
                                parse_photon_energy(cfg.get("frequency", "1.17eV"), prof),
                                prof);
    }
    else if (cfg.has("frequency"))
    {
        req.laser = build_laser(FieldStrength{0},
                                parse_photon_energy(*cfg.find("frequency"), prof),
                                prof);
    }

    if (auto const name = cfg.find("regime"))
        req.regime = regime_from_string(*name);
    else
        req.regime = req.laser ? Regime::ElectronDressed : Regime::LaserFree;

    req.z_charge = parse_integer(cfg.get("z_charge", "1"), "z_charge");
    if (auto const s = cfg.find("s_range"))
        req.s_range = parse_channel_range(*s, "s_range");
    if (auto const l = cfg.find("l_range"))
        req.l_range = parse_channel_range(*l, "l_range");
    req.cutoff_threshold = parse_number(cfg.get("cutoff_threshold", "1e-6"), "cutoff_threshold");
    if (!(req.cutoff_threshold > 0 && req.cutoff_threshold < 1))
        throw DomainError("cutoff_threshold must lie in (0, 1)");
    req.threads = parse_integer(cfg.get("threads", "1"), "threads");
    if (req.threads < 1)
        throw DomainError("threads must be >= 1");
    return req;
}

//---------------------------------------------------------------------------//
char const* to_string(ScanVariable v)
{
    switch (v)
    {
        case ScanVariable::ThetaF: return "theta_f";
        case ScanVariable::FieldStrength: return "field_strength";
        case ScanVariable::Frequency: return "frequency";
        case ScanVariable::KineticEnergy: return "kinetic_energy";
        case ScanVariable::Z: return "Z";
        case ScanVariable::S: return "s";
    }
    return "?";
}

ScanVariable scan_variable_from_string(std::string const& name)
{
    for (auto v : {ScanVariable::ThetaF, ScanVariable::FieldStrength, ScanVariable::Frequency,
                   ScanVariable::KineticEnergy, ScanVariable::Z, ScanVariable::S})
    {
        if (name == to_string(v))
            return v;
    }
    if (name == "z")
        return ScanVariable::Z;
    throw DomainError("unknown scan variable '" + name
                      + "' (theta_f, field_strength, frequency, kinetic_energy, Z, s)");
}

char const* display_unit(ScanVariable v)
{
    switch (v)
    {
        case ScanVariable::ThetaF: return "deg";
        case ScanVariable::FieldStrength: return "V/cm";
        case ScanVariable::Frequency: return "eV";
        case ScanVariable::KineticEnergy: return "eV";
        default: return "";
    }
}

std::vector<double> ScanAxis::values() const
{
    if (points < 2)
        throw DomainError("scan needs at least 2 points");
    if (log && !(min > 0 && max > 0))
        throw DomainError("logarithmic scan requires min > 0 and max > 0");
    std::vector<double> out(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i)
    {
        double const t = static_cast<double>(i) / (points - 1);
        double v = log ? std::pow(10.0, std::log10(min) + t * (std::log10(max) - std::log10(min)))
                       : min + t * (max - min);
        if (i == 0)
            v = min;
        if (i == points - 1)
            v = max;
        if (variable == ScanVariable::Z || variable == ScanVariable::S)
            v = std::round(v);
        out[static_cast<std::size_t>(i)] = v;
    }
    return out;
}

namespace
{
// Scan bound in display units; unit suffixes are honoured
double parse_bound(std::string const& text,
                   ScanVariable v,
                   ConstantsProfile const& prof,
                   std::string const& key)
{
    // Display-unit values are kept verbatim so CSV values match the input
    auto const [number, unit] = split_unit(text, key);
    if (unit.empty() || unit == lower(display_unit(v)))
        return number;
    switch (v)
    {
        case ScanVariable::ThetaF:
            return parse_angle(text, key) * 180 / k_pi;
        case ScanVariable::FieldStrength:
            return field_to_v_per_cm(parse_field(text, prof), prof);
        case ScanVariable::Frequency:
            return energy_to_ev(Energy{parse_photon_energy(text, prof).value}, prof);
        case ScanVariable::KineticEnergy:
            return energy_to_ev(parse_energy(text, prof), prof);
        default:
            return parse_number(text, key);
    }
}

ScanAxis build_axis(Config const& cfg, std::string const& prefix, ConstantsProfile const& prof)
{
    auto need = [&](std::string const& key) {
        auto v = cfg.find(prefix + key);
        if (!v)
            throw DomainError("missing required key '" + prefix + key + "'");
        return *v;
    };
    ScanAxis axis;
    axis.variable = scan_variable_from_string(need("variable"));
    axis.min = parse_bound(need("min"), axis.variable, prof, prefix + "min");
    axis.max = parse_bound(need("max"), axis.variable, prof, prefix + "max");
    axis.points = parse_integer(need("points"), prefix + "points");
    std::string const scale = lower(cfg.get(prefix + "scale", "linear"));
    if (scale != "linear" && scale != "log")
        throw DomainError(prefix + "scale must be 'linear' or 'log'");
    axis.log = scale == "log";
    axis.values();  // validates the range
    return axis;
}
}  // namespace

ScanSpec build_scan(Config const& cfg)
{
    ScanSpec plan;
    plan.fixed = build_request(cfg);
    plan.axis = build_axis(cfg, "scan_", plan.fixed.profile);
    if (cfg.has("scan2_variable"))
    {
        plan.second = build_axis(cfg, "scan2_", plan.fixed.profile);
        if (plan.second->variable == plan.axis.variable)
            throw DomainError("the two scan axes must use different variables");
    }
    std::string const q = cfg.get("quantity", "dcs");
    if (q == "dcs")
        plan.quantity = ScanQuantity::Dcs;
    else if (q == "momentum_transfer")
        plan.quantity = ScanQuantity::MomentumTransfer;
    else
        throw DomainError("quantity must be 'dcs' or 'momentum_transfer'");
    auto const out = cfg.find("output");
    if (!out)
        throw DomainError("scan requires 'output' (CSV path)");
    plan.output_path = *out;
    return plan;
}

DcsRequest with_variable(DcsRequest base, ScanVariable v, double value)
{
    auto const& prof = base.profile;
    auto laser_or_default = [&] {
        if (base.laser)
            return *base.laser;
        return build_laser(FieldStrength{0}, photon_energy_to_au(1.17, prof), prof);
    };
    switch (v)
    {
        case ScanVariable::ThetaF:
            base.geometry.theta_f = value * k_pi / 180;
            break;
        case ScanVariable::FieldStrength: {
            LaserField const l = laser_or_default();
            base.laser = build_laser(field_to_au(value, prof), l.omega, prof);
            break;
        }
        case ScanVariable::Frequency: {
            LaserField const l = laser_or_default();
            base.laser = build_laser(l.e0, photon_energy_to_au(value, prof), prof);
            break;
        }
        case ScanVariable::KineticEnergy:
            base.kinetic = energy_to_au(value, prof);
            break;
        case ScanVariable::Z:
            base.z_charge = static_cast<int>(value);
            break;
        case ScanVariable::S:
            base.s_range = ChannelRange{static_cast<int>(value), static_cast<int>(value)};
            break;
    }
    return base;
}
}  // namespace laserep
