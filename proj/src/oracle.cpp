#include "laserep/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "laserep/dressing.hpp"
#include "laserep/errors.hpp"

namespace laserep
{
namespace
{
double constexpr k_pi = 3.14159265358979323846;

double relative(double a, double b, double scale)
{
    return std::abs(a - b) / scale;
}
}  // namespace

OracleSample
random_oracle_sample(std::mt19937_64& rng, ConstantsProfile const& profile)
{
    std::uniform_real_distribution<double> u(0, 1);
    double const c = profile.c;
    double const mass = profile.proton_mass();
    for (;;)
    {
        OracleSample smp;
        smp.kinetic = energy_to_au(1e3 * std::pow(1e3, u(rng)), profile).value;
        smp.field = 0.05 * u(rng);
        smp.omega = 0.01 + 0.09 * u(rng);
        smp.s = static_cast<int>(std::floor(41 * u(rng))) - 20;
        smp.geometry = {0.05 + (k_pi - 0.1) * u(rng),
                        2 * k_pi * u(rng),
                        0.05 + (k_pi - 0.1) * u(rng),
                        2 * k_pi * u(rng)};
        // Keep away from the forward pole
        if (geometry_factor(smp.geometry) > std::cos(5 * k_pi / 180))
            continue;

        LaserField const laser
            = build_laser(FieldStrength{smp.field}, Frequency{smp.omega}, profile);
        FourVector const p1
            = incident_electron(Energy{smp.kinetic}, smp.geometry, profile);
        FourVector const p2{mass * c, 0, 0, 0};
        DressedState const q1 = dress(p1, 1, laser, profile);
        FinalElectron fe;
        try
        {
            fe = solve_final_energy_dressed(
                q1, smp.s, smp.geometry, laser, p2, mass, profile);
        }
        catch (ChannelClosedError const&)
        {
            continue;
        }
        FourVector const p3 = undress(fe.q3, laser, profile);
        smp.point = make_point(p1, p2, p3, fe.heavy, laser, mass, c);
        smp.triple = coupling_triple(
            electron_dressing_argument(p1, p3, laser, c), smp.s);
        return smp;
    }
}

std::string describe(OracleSample const& smp)
{
    std::ostringstream os;
    os.precision(17);
    os << "T1=" << smp.kinetic << " au, E0=" << smp.field
       << " au, omega=" << smp.omega << " au, s=" << smp.s
       << ", theta_i=" << smp.geometry.theta_i
       << ", phi_i=" << smp.geometry.phi_i
       << ", theta_f=" << smp.geometry.theta_f
       << ", phi_f=" << smp.geometry.phi_f << " rad\n";
    char const* names[] = {"p1", "p2", "p3", "p4"};
    for (int i = 0; i < 4; ++i)
    {
        FourVector const& p = smp.point.p[i];
        os << "  " << names[i] << " = (" << p.t << ", " << p.x << ", " << p.y
           << ", " << p.z << ")\n";
    }
    return os.str();
}

NumericCoefficients numeric_m_coefficients(KinematicPoint const& pt)
{
    auto amp = [&](complex bs, complex b1, complex b2) {
        return numeric_electron_dressed_amplitude(pt, {bs, b1, b2});
    };
    complex const one{1, 0};
    complex const zero{};
    complex const i{0, 1};

    // The spin sum is a Hermitian form sum H_ij B_i B_j*; a real probe
    // (1, 1) gives 2 Re H_ij and an imaginary probe (1, i) gives 2 Im H_ij
    NumericCoefficients out;
    MCoefficients& m = out.m;
    m.m1 = amp(one, zero, zero);
    m.m2 = amp(zero, one, zero);
    m.m3 = amp(zero, zero, one);
    double const r12 = amp(one, one, zero) - m.m1 - m.m2;
    double const i12 = amp(one, i, zero) - m.m1 - m.m2;
    double const r13 = amp(one, zero, one) - m.m1 - m.m3;
    double const i13 = amp(one, zero, i) - m.m1 - m.m3;
    double const r23 = amp(zero, one, one) - m.m2 - m.m3;
    double const i23 = amp(zero, one, i) - m.m2 - m.m3;
    m.m4 = m.m6 = 0.5 * r12;
    m.m5 = m.m8 = 0.5 * r13;
    m.m7 = m.m9 = 0.5 * r23;
    out.imaginary = 0.5 * std::max({std::abs(i12), std::abs(i13), std::abs(i23)});
    return out;
}

OracleReport run_oracle(std::uint64_t seed,
                        int n_points,
                        ConstantsProfile const& profile,
                        bool flip_m5_sign,
                        bool laser_off)
{
    if (n_points < 1)
        throw DomainError("oracle needs at least one point");
    std::mt19937_64 rng(seed);
    OracleReport report;
    report.points = n_points;
    for (int n = 0; n < n_points; ++n)
    {
        OracleSample smp = random_oracle_sample(rng, profile);
        if (laser_off)
        {
            LaserField const off = build_laser(
                FieldStrength{0}, Frequency{smp.omega}, profile);
            smp.field = 0;
            smp.s = 0;
            KinematicPoint const& q = smp.point;
            // Rebuild the elastic point without the field
            FourVector const p1 = q.p[0];
            FinalElectron const fe = solve_final_energy_laser_free(
                p1, smp.geometry, profile, q.target_mass);
            smp.point = make_point(
                p1, q.p[1], fe.q3, fe.heavy, off, q.target_mass, profile.c);
            smp.triple = {1, 0, 0};
        }
        KinematicPoint const& pt = smp.point;
        double amp_dev = 0;
        double coef_dev = 0;

        double const numeric = numeric_electron_dressed_amplitude(pt, smp.triple);
        double closed = 0;
        if (pt.laser.is_off())
        {
            closed = laser_free_amplitude(pt) * std::norm(smp.triple.b_s);
            coef_dev = relative(laser_free_amplitude(pt),
                                numeric_laser_free_amplitude(pt),
                                std::abs(numeric_laser_free_amplitude(pt)));
        }
        else
        {
            MCoefficients const m = m_coefficients(pt, flip_m5_sign);
            closed = electron_dressed_amplitude(m, smp.triple);
            NumericCoefficients const num = numeric_m_coefficients(pt);
            MCoefficients const& ref = num.m;
            double const a[] = {m.m1, m.m2, m.m3, m.m4, m.m5, m.m6, m.m7, m.m8, m.m9};
            double const b[] = {ref.m1, ref.m2, ref.m3, ref.m4, ref.m5,
                                ref.m6, ref.m7, ref.m8, ref.m9};
            double scale = 0;
            for (double v : b)
                scale = std::max(scale, std::abs(v));
            for (int k = 0; k < 9; ++k)
                coef_dev = std::max(coef_dev, relative(a[k], b[k], scale));
            // Closed form has real cross coefficients
            coef_dev = std::max(coef_dev, num.imaginary / scale);
        }
        amp_dev = std::abs(closed - numeric) / std::max(std::abs(numeric), 1e-300);

        if (amp_dev > report.max_amplitude_deviation
            || coef_dev > report.max_coefficient_deviation || report.worst_index < 0)
        {
            double const old = std::max(report.max_amplitude_deviation,
                                        report.max_coefficient_deviation);
            if (std::max(amp_dev, coef_dev) >= old)
            {
                report.worst_index = n;
                report.worst = smp;
            }
        }
        report.max_amplitude_deviation = std::max(report.max_amplitude_deviation, amp_dev);
        report.max_coefficient_deviation
            = std::max(report.max_coefficient_deviation, coef_dev);
    }
    return report;
}
}  // namespace laserep
