#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cross_sections.hpp"

namespace laserep
{
//---------------------------------------------------------------------------//
/*!
 * Flat run configuration: one `key = value` per line, `#` starts a comment.
 *
 * Keys are validated against a fixed vocabulary so that typos fail loudly.
 * Values stay textual until a request is built, which keeps the unit suffix
 * the user wrote and lets the configuration be written back verbatim.
 */
class Config
{
  public:
    static Config parse(std::string_view text, std::string const& origin = "config");
    static Config load(std::string const& path);

    void set(std::string const& key, std::string value);
    bool has(std::string const& key) const;
    std::optional<std::string> find(std::string const& key) const;
    std::string get(std::string const& key, std::string const& fallback) const;

    // Entries of `other` replace entries of this configuration
    void merge(Config const& other);

    // Sorted `key = value` lines
    std::string serialize() const;

    std::map<std::string, std::string> const& entries() const { return values_; }

  private:
    std::map<std::string, std::string> values_;
};

// Every accepted configuration key
std::vector<std::string> const& config_keys();

//---------------------------------------------------------------------------//
// Value parsers. Bare numbers use the default unit noted for each quantity.
//---------------------------------------------------------------------------//
double parse_number(std::string_view text, std::string const& key);
int parse_integer(std::string_view text, std::string const& key);
bool parse_bool(std::string_view text, std::string const& key);

// eV (default), keV, MeV or au
Energy parse_energy(std::string_view text, ConstantsProfile const& profile);
// V/cm (default) or au
FieldStrength parse_field(std::string_view text, ConstantsProfile const& profile);
// Photon energy: eV (default) or au
Frequency parse_photon_energy(std::string_view text, ConstantsProfile const& profile);
// Degrees (default), deg or rad; result in radians
double parse_angle(std::string_view text, std::string const& key);
// "lo:hi" or a single order
ChannelRange parse_channel_range(std::string_view text, std::string const& key);

// Shortest decimal text that reads back to the same double
std::string format_number(double value);

//---------------------------------------------------------------------------//
// Requests and scans
//---------------------------------------------------------------------------//
DcsRequest build_request(Config const& cfg);

enum class ScanVariable
{
    ThetaF,
    FieldStrength,
    Frequency,
    KineticEnergy,
    Z,
    S,
};

char const* to_string(ScanVariable v);
ScanVariable scan_variable_from_string(std::string const& name);

// Display unit of a scan variable: deg, V/cm, eV, eV, none, none
char const* display_unit(ScanVariable v);

struct ScanAxis
{
    ScanVariable variable{ScanVariable::ThetaF};
    double min{0};  //!< display units
    double max{0};
    int points{2};
    bool log{false};

    std::vector<double> values() const;
};

enum class ScanQuantity
{
    Dcs,
    MomentumTransfer,
};

struct ScanSpec
{
    ScanAxis axis;
    std::optional<ScanAxis> second;  //!< inner axis of a 2-D grid
    DcsRequest fixed;
    ScanQuantity quantity{ScanQuantity::Dcs};
    std::string output_path;
};

ScanSpec build_scan(Config const& cfg);

// Copy of `base` with one variable set (value in display units)
DcsRequest with_variable(DcsRequest base, ScanVariable v, double value);
}  // namespace laserep
