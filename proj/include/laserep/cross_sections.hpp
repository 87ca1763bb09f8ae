#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kinematics.hpp"
#include "units.hpp"

namespace laserep
{
enum class Regime
{
    LaserFree,
    ElectronDressed,
    FullyDressed,
    MottLimit,
};

char const* to_string(Regime r);
Regime regime_from_string(std::string const& name);

// Closed interval of photon orders
struct ChannelRange
{
    int lo{0};
    int hi{0};
};

struct DcsRequest
{
    Regime regime{Regime::LaserFree};
    Energy kinetic;  //!< projectile kinetic energy T1
    ScatteringGeometry geometry;
    std::optional<LaserField> laser;
    int z_charge{1};  //!< nuclear charge (Mott limit only)
    std::optional<ChannelRange> s_range;  //!< empty: automatic
    std::optional<ChannelRange> l_range;  //!< empty: automatic
    ConstantsProfile profile = ConstantsProfile::paper();

    double cutoff_threshold{1e-6};  //!< relative to the largest partial
    int electron_margin{40};
    int proton_margin{15};
    int threads{1};
};

struct ChannelValue
{
    int s{0};
    int l{0};
    double dcs{0};
    bool closed{false};
};

struct DcsDiagnostics
{
    double max_residual{0};  //!< worst mass-shell residual
    double z{0};  //!< electron dressing argument at s = 0
    double z_p{0};  //!< proton dressing argument at s = l = 0
    bool converged{true};
    int evaluated{0};
};

struct DcsResult
{
    double total{0};
    std::vector<ChannelValue> per_channel;  //!< sorted by (s, l)
    int cutoff_negative{0};  //!< first vanishing order below zero (<= 0)
    int cutoff_positive{0};  //!< first vanishing order above zero (>= 0)
    int cutoff_l{0};  //!< symmetric proton cutoff
    std::vector<ChannelValue> closed_channels;
    DcsDiagnostics diagnostics;
};

// Laser-free e-P cross section (target at rest, with recoil)
DcsResult dcs_laser_free(DcsRequest const& req);

// Laser-free cross section with the target mass raised to 1e6 M
double dcs_heavy_target(DcsRequest const& req);

/*!
 * Point-Coulomb limit Z^2 (1 - beta^2 sin^2(theta/2)) / (4 p^2 v^2 sin^4),
 * obtained from the heavy-target cross section rescaled to Z^2 e^4.
 * With a laser present the heavy-target electron-dressed sum is used.
 */
DcsResult dcs_mott_limit(DcsRequest const& req);

// Single electron-dressed channel; 0 for closed channels
double dcs_partial(DcsRequest const& req, int s, bool* closed = nullptr);

// Electron-dressed sum over s
DcsResult dcs_summed(DcsRequest const& req);

// Electron and target dressed, double sum over (s, l)
DcsResult dcs_fully_dressed(DcsRequest const& req);

// Dispatch on req.regime
DcsResult evaluate(DcsRequest const& req);

struct SumRuleReport
{
    double laser_free{0};
    double summed{0};
    double relative_gap{0};
    int cutoff{0};
};

SumRuleReport sum_rule_report(DcsRequest const& req);

// |q| of the laser-free momentum transfer p3 - p1
double laser_free_momentum_transfer(DcsRequest const& req);
}  // namespace laserep
