#include "laserep/cross_sections.hpp"

#include <algorithm>
#include <cmath>

#include "laserep/amplitudes.hpp"
#include "laserep/dressing.hpp"
#include "laserep/errors.hpp"
#include "laserep/parallel.hpp"

namespace laserep
{
namespace
{
double constexpr k_pi = 3.14159265358979323846;
double constexpr k_heavy_scale = 1e6;
double constexpr k_clamp = 1e-300;
double constexpr k_tail = 1e-15;
int constexpr k_block = 10;

double prefactor(double mass, double c, double qq)
{
    double const c2 = c * c;
    return 1 / (16 * (2 * k_pi) * (2 * k_pi) * mass * c2 * c2 * c2 * qq * qq);
}

double clamp_small(double v)
{
    return v < k_clamp ? 0.0 : v;
}

LaserField laser_or_off(DcsRequest const& req)
{
    if (req.laser)
        return *req.laser;
    return LaserField{};
}

struct ChannelEval
{
    double dcs{0};
    double residual{0};
    double z{0};
    double z_p{0};
    bool closed{false};
};

//---------------------------------------------------------------------------//
// Electron-dressed channel for a target of mass `target_mass` at rest
class ElectronDressedEvaluator
{
  public:
    ElectronDressedEvaluator(DcsRequest const& req, double target_mass)
        : req_(req)
        , laser_(laser_or_off(req))
        , target_mass_(target_mass)
        , c_(req.profile.c)
    {
        p1_ = incident_electron(req.kinetic, req.geometry, req.profile);
        p2_ = {target_mass * c_, 0, 0, 0};
        q1_ = dress(p1_, req.profile.electron_mass, laser_, req.profile);
    }

    ChannelEval operator()(int s) const
    {
        ChannelEval r;
        FinalElectron fe;
        try
        {
            fe = solve_final_energy_dressed(
                q1_, s, req_.geometry, laser_, p2_, target_mass_, req_.profile);
        }
        catch (ChannelClosedError const&)
        {
            r.closed = true;
            return r;
        }
        FourVector const p3 = undress(fe.q3, laser_, req_.profile);
        KinematicPoint const pt
            = make_point(p1_, p2_, p3, fe.heavy, laser_, target_mass_, c_);
        DressingArgument const arg
            = electron_dressing_argument(p1_, p3, laser_, c_);
        double const amp
            = electron_dressed_amplitude(pt, coupling_triple(arg, s));
        double const qq
            = checked_transfer_square(momentum_transfer(q1_.q, fe.q3, s, laser_));
        double const ratio = fe.q3.spatial_norm() / q1_.q.spatial_norm();
        r.dcs = clamp_small(prefactor(target_mass_, c_, qq) * ratio * amp
                            / fe.jacobian);
        r.residual = fe.residual;
        r.z = arg.z;
        return r;
    }

  private:
    DcsRequest const& req_;
    LaserField laser_;
    double target_mass_;
    double c_;
    FourVector p1_;
    FourVector p2_;
    DressedState q1_;
};

//---------------------------------------------------------------------------//
class FullyDressedEvaluator
{
  public:
    explicit FullyDressedEvaluator(DcsRequest const& req)
        : req_(req), laser_(laser_or_off(req)), c_(req.profile.c)
    {
        double const mass = req.profile.proton_mass();
        p1_ = incident_electron(req.kinetic, req.geometry, req.profile);
        p2_ = {mass * c_, 0, 0, 0};
        q1_ = dress(p1_, req.profile.electron_mass, laser_, req.profile);
        q2_ = dress(p2_, mass, laser_, req.profile);
    }

    double effective_target_mass() const { return q2_.effective_mass; }

    ChannelEval operator()(int s, int l) const
    {
        ChannelEval r;
        FinalElectron fe;
        try
        {
            fe = solve_final_energy_dressed(q1_,
                                            s + l,
                                            req_.geometry,
                                            laser_,
                                            q2_.q,
                                            q2_.effective_mass,
                                            req_.profile);
        }
        catch (ChannelClosedError const&)
        {
            r.closed = true;
            return r;
        }
        FourVector const p3 = undress(fe.q3, laser_, req_.profile);
        FourVector const p4 = undress(fe.heavy, laser_, req_.profile);
        KinematicPoint const pt
            = make_point(p1_, p2_, p3, p4, laser_, q2_.mass, c_);
        DressingArgument const ea
            = electron_dressing_argument(p1_, p3, laser_, c_);
        DressingArgument const pa
            = proton_dressing_argument(p2_, p4, laser_, c_);
        double const amp = fully_dressed_amplitude(
            pt, coupling_triple(ea, s), coupling_triple(pa, l));
        double const qq
            = checked_transfer_square(momentum_transfer(q1_.q, fe.q3, s, laser_));
        double const ratio = fe.q3.spatial_norm() / q1_.q.spatial_norm();
        r.dcs = clamp_small(prefactor(q2_.effective_mass, c_, qq) * ratio * amp
                            / fe.jacobian);
        r.residual = fe.residual;
        r.z = ea.z;
        r.z_p = pa.z;
        return r;
    }

  private:
    DcsRequest const& req_;
    LaserField laser_;
    double c_;
    FourVector p1_;
    FourVector p2_;
    DressedState q1_;
    DressedState q2_;
};

// First vanishing order on each side of zero, given per-order magnitudes
void detect_cutoff(std::vector<std::pair<int, double>> const& marginal,
                   double threshold,
                   int& negative,
                   int& positive)
{
    double peak = 0;
    for (auto const& [s, v] : marginal)
        peak = std::max(peak, v);
    double const floor = threshold * peak;
    int last_pos = 0;
    int last_neg = 0;
    for (auto const& [s, v] : marginal)
    {
        if (peak == 0 || v < floor)
            continue;
        if (s > 0)
            last_pos = std::max(last_pos, s);
        if (s < 0)
            last_neg = std::min(last_neg, s);
    }
    positive = last_pos > 0 ? last_pos + 1 : 0;
    negative = last_neg < 0 ? last_neg - 1 : 0;
}

void finalize(DcsResult& result)
{
    std::sort(result.per_channel.begin(),
              result.per_channel.end(),
              [](ChannelValue const& a, ChannelValue const& b) {
                  return a.s != b.s ? a.s < b.s : a.l < b.l;
              });
    result.total = 0;
    result.closed_channels.clear();
    for (auto const& ch : result.per_channel)
    {
        result.total += ch.dcs;
        if (ch.closed)
            result.closed_channels.push_back(ch);
    }
    result.diagnostics.evaluated = static_cast<int>(result.per_channel.size());
}

void require_laser_regime(DcsRequest const& req)
{
    if (req.laser && !(req.laser->omega.value > 0))
        throw KinematicsError("laser frequency must be > 0");
}

DcsResult summed_with_target(DcsRequest const& req, double target_mass)
{
    require_laser_regime(req);
    ElectronDressedEvaluator const eval(req, target_mass);
    DcsResult result;

    auto record = [&](int s, ChannelEval const& e) {
        result.per_channel.push_back({s, 0, e.dcs, e.closed});
        result.diagnostics.max_residual
            = std::max(result.diagnostics.max_residual, e.residual);
    };

    ChannelEval const centre = eval(0);
    result.diagnostics.z = centre.z;

    if (req.s_range)
    {
        int const lo = req.s_range->lo;
        int const hi = req.s_range->hi;
        if (hi < lo)
            throw DomainError("empty photon-order range");
        auto values = parallel_map<ChannelEval>(
            static_cast<std::size_t>(hi - lo + 1), req.threads, [&](std::size_t i) {
                int const s = lo + static_cast<int>(i);
                return s == 0 ? centre : eval(s);
            });
        for (int s = lo; s <= hi; ++s)
            record(s, values[static_cast<std::size_t>(s - lo)]);
    }
    else
    {
        int const limit = static_cast<int>(std::ceil(centre.z)) + req.electron_margin;
        record(0, centre);
        double running = centre.dcs;
        bool open_pos = true;
        bool open_neg = true;
        for (int start = 1; start <= limit && (open_pos || open_neg); start += k_block)
        {
            int const stop = std::min(limit, start + k_block - 1);
            std::vector<int> orders;
            for (int s = start; s <= stop; ++s)
            {
                if (open_pos)
                    orders.push_back(s);
                if (open_neg)
                    orders.push_back(-s);
            }
            auto values = parallel_map<ChannelEval>(
                orders.size(), req.threads, [&](std::size_t i) {
                    return eval(orders[i]);
                });
            double block_pos = 0;
            double block_neg = 0;
            for (std::size_t i = 0; i < orders.size(); ++i)
            {
                record(orders[i], values[i]);
                running += values[i].dcs;
                (orders[i] > 0 ? block_pos : block_neg)
                    = std::max(orders[i] > 0 ? block_pos : block_neg, values[i].dcs);
            }
            int const width = stop - start + 1;
            if (open_pos && width == k_block && block_pos < k_tail * running)
                open_pos = false;
            if (open_neg && width == k_block && block_neg < k_tail * running)
                open_neg = false;
        }
        result.diagnostics.converged = !(open_pos || open_neg);
    }

    finalize(result);
    std::vector<std::pair<int, double>> marginal;
    for (auto const& ch : result.per_channel)
        marginal.emplace_back(ch.s, ch.dcs);
    detect_cutoff(marginal,
                  req.cutoff_threshold,
                  result.cutoff_negative,
                  result.cutoff_positive);
    return result;
}

DcsResult laser_free_with_target(DcsRequest const& req, double target_mass)
{
    ConstantsProfile const& profile = req.profile;
    double const c = profile.c;
    FourVector const p1 = incident_electron(req.kinetic, req.geometry, profile);
    FourVector const p2{target_mass * c, 0, 0, 0};
    FinalElectron const fe
        = solve_final_energy_laser_free(p1, req.geometry, profile, target_mass);
    KinematicPoint const pt
        = make_point(p1, p2, fe.q3, fe.heavy, LaserField{}, target_mass, c);
    double const qq = checked_transfer_square(fe.q3 - p1);
    double const ratio = fe.q3.spatial_norm() / p1.spatial_norm();
    double const dcs = clamp_small(prefactor(target_mass, c, qq) * ratio
                                   * laser_free_amplitude(pt) / fe.jacobian);

    DcsResult result;
    result.per_channel.push_back({0, 0, dcs, false});
    result.diagnostics.max_residual = fe.residual;
    finalize(result);
    return result;
}

double mott_scale(DcsRequest const& req)
{
    double const c = req.profile.c;
    double const z = req.z_charge;
    return z * z * 16 * k_pi * k_pi / (c * c);
}
}  // namespace

//---------------------------------------------------------------------------//
char const* to_string(Regime r)
{
    switch (r)
    {
        case Regime::LaserFree:
            return "laser_free";
        case Regime::ElectronDressed:
            return "electron_dressed";
        case Regime::FullyDressed:
            return "fully_dressed";
        case Regime::MottLimit:
            return "mott";
    }
    return "unknown";
}

Regime regime_from_string(std::string const& name)
{
    for (Regime r : {Regime::LaserFree,
                     Regime::ElectronDressed,
                     Regime::FullyDressed,
                     Regime::MottLimit})
    {
        if (name == to_string(r))
            return r;
    }
    throw DomainError("unknown regime '" + name + "'");
}

DcsResult dcs_laser_free(DcsRequest const& req)
{
    return laser_free_with_target(req, req.profile.proton_mass());
}

double dcs_heavy_target(DcsRequest const& req)
{
    return laser_free_with_target(req, k_heavy_scale * req.profile.proton_mass())
        .total;
}

DcsResult dcs_mott_limit(DcsRequest const& req)
{
    if (req.z_charge < 1)
        throw DomainError("nuclear charge must be >= 1");
    double const heavy = k_heavy_scale * req.profile.proton_mass();
    DcsResult result = (req.laser && !req.laser->is_off())
                           ? summed_with_target(req, heavy)
                           : laser_free_with_target(req, heavy);
    double const scale = mott_scale(req);
    for (auto& ch : result.per_channel)
        ch.dcs *= scale;
    finalize(result);
    return result;
}

double dcs_partial(DcsRequest const& req, int s, bool* closed)
{
    require_laser_regime(req);
    ElectronDressedEvaluator const eval(req, req.profile.proton_mass());
    ChannelEval const e = eval(s);
    if (closed)
        *closed = e.closed;
    return e.dcs;
}

DcsResult dcs_summed(DcsRequest const& req)
{
    return summed_with_target(req, req.profile.proton_mass());
}

DcsResult dcs_fully_dressed(DcsRequest const& req)
{
    require_laser_regime(req);
    FullyDressedEvaluator const eval(req);
    ChannelEval const centre = eval(0, 0);

    ChannelRange s_range{0, 0};
    ChannelRange l_range{0, 0};
    if (req.s_range)
    {
        s_range = *req.s_range;
    }
    else
    {
        int const n = static_cast<int>(std::ceil(centre.z)) + req.electron_margin;
        s_range = {-n, n};
    }
    if (req.l_range)
    {
        l_range = *req.l_range;
    }
    else
    {
        int const n = static_cast<int>(std::ceil(centre.z_p)) + req.proton_margin;
        l_range = {-n, n};
    }
    if (s_range.hi < s_range.lo || l_range.hi < l_range.lo)
        throw DomainError("empty photon-order range");

    std::size_t const ns = static_cast<std::size_t>(s_range.hi - s_range.lo + 1);
    std::size_t const nl = static_cast<std::size_t>(l_range.hi - l_range.lo + 1);
    auto values
        = parallel_map<ChannelEval>(ns * nl, req.threads, [&](std::size_t i) {
              int const s = s_range.lo + static_cast<int>(i / nl);
              int const l = l_range.lo + static_cast<int>(i % nl);
              return eval(s, l);
          });

    DcsResult result;
    result.diagnostics.z = centre.z;
    result.diagnostics.z_p = centre.z_p;
    std::vector<std::pair<int, double>> by_s;
    std::vector<std::pair<int, double>> by_l;
    for (std::size_t i = 0; i < values.size(); ++i)
    {
        int const s = s_range.lo + static_cast<int>(i / nl);
        int const l = l_range.lo + static_cast<int>(i % nl);
        result.per_channel.push_back({s, l, values[i].dcs, values[i].closed});
        result.diagnostics.max_residual
            = std::max(result.diagnostics.max_residual, values[i].residual);
    }
    finalize(result);

    for (int s = s_range.lo; s <= s_range.hi; ++s)
        by_s.emplace_back(s, 0.0);
    for (int l = l_range.lo; l <= l_range.hi; ++l)
        by_l.emplace_back(l, 0.0);
    for (auto const& ch : result.per_channel)
    {
        by_s[static_cast<std::size_t>(ch.s - s_range.lo)].second += ch.dcs;
        by_l[static_cast<std::size_t>(ch.l - l_range.lo)].second += ch.dcs;
    }
    detect_cutoff(
        by_s, req.cutoff_threshold, result.cutoff_negative, result.cutoff_positive);
    int l_neg = 0;
    int l_pos = 0;
    detect_cutoff(by_l, req.cutoff_threshold, l_neg, l_pos);
    result.cutoff_l = std::max(-l_neg, l_pos);
    return result;
}

DcsResult evaluate(DcsRequest const& req)
{
    switch (req.regime)
    {
        case Regime::LaserFree:
            return dcs_laser_free(req);
        case Regime::ElectronDressed:
            return dcs_summed(req);
        case Regime::FullyDressed:
            return dcs_fully_dressed(req);
        case Regime::MottLimit:
            return dcs_mott_limit(req);
    }
    throw DomainError("unknown regime");
}

SumRuleReport sum_rule_report(DcsRequest const& req)
{
    SumRuleReport report;
    report.laser_free = dcs_laser_free(req).total;
    DcsResult const summed = dcs_summed(req);
    report.summed = summed.total;
    report.relative_gap
        = std::abs(report.summed - report.laser_free) / report.laser_free;
    report.cutoff = std::max(-summed.cutoff_negative, summed.cutoff_positive);
    return report;
}

double laser_free_momentum_transfer(DcsRequest const& req)
{
    FourVector const p1 = incident_electron(req.kinetic, req.geometry, req.profile);
    FinalElectron const fe = solve_final_energy_laser_free(
        p1, req.geometry, req.profile, req.profile.proton_mass());
    return (fe.q3 - p1).spatial_norm();
}
}  // namespace laserep
