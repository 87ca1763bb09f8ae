#include "laserep/kinematics.hpp"

#include <cmath>
#include <limits>

#include "laserep/errors.hpp"

namespace laserep
{
namespace
{
double constexpr k_pi = 3.14159265358979323846;

FourVector rotate_z(FourVector v, double angle)
{
    double const cs = std::cos(angle);
    double const sn = std::sin(angle);
    return {v.t, cs * v.x - sn * v.y, sn * v.x + cs * v.y, v.z};
}

double cross_kp(FourVector const& k, FourVector const& p)
{
    double const kp = minkowski_dot(k, p);
    if (kp == 0)
    {
        throw CollinearLightlikeError(
            "k.p = 0: particle collinear with the laser wave front");
    }
    return kp;
}

/*
 * Shared root solver. Mass shell (P - q3)^2 = Mf^2 c^2 with P = e + h,
 * q3 = (x, |q3| n), x = Q3/c, |q3| = sqrt(x^2 - m^2 c^2). Squaring gives a
 * quadratic in x; the signed projection Pn selects the branch that satisfies
 * the unsquared equation. The electron part e and heavy part h are kept
 * apart so that P^2 - Mf^2 c^2 never cancels at large target mass.
 */
FinalElectron solve_mass_shell(FourVector const& electron_part,
                               FourVector const& heavy_part,
                               double electron_mass,
                               double heavy_mass,
                               std::array<double, 3> const& n,
                               double c)
{
    FourVector const total = electron_part + heavy_part;
    double const mc = electron_mass * c;
    double const mfc = heavy_mass * c;
    double const p0 = total.t;
    double const pn = total.x * n[0] + total.y * n[1] + total.z * n[2];
    double const heavy_offset
        = minkowski_dot(heavy_part, heavy_part) - mfc * mfc;
    double const a = 0.5 * (minkowski_dot(electron_part, electron_part) + mc * mc)
                     + minkowski_dot(electron_part, heavy_part)
                     + 0.5 * heavy_offset;
    double const lead = (p0 - pn) * (p0 + pn);
    double const disc = a * a - mc * mc * lead;
    if (!(lead > 0) || !(disc >= 0))
    {
        throw ChannelClosedError("no real final-energy root");
    }
    double x = (a * p0 + pn * std::sqrt(disc)) / lead;
    if (!(x > mc))
    {
        throw ChannelClosedError("final electron energy below its rest mass");
    }

    auto norm = [mc](double xx) { return std::sqrt((xx - mc) * (xx + mc)); };
    // Half the mass-shell function and its x-derivative
    auto half_g = [&](double xx) { return a - p0 * xx + norm(xx) * pn; };

    double qn = norm(x);
    if (qn > 0)
    {
        double const slope = -p0 + x * pn / qn;
        if (slope != 0)
        {
            double const polished = x - half_g(x) / slope;
            if (polished > mc && std::abs(half_g(polished)) <= std::abs(half_g(x)))
            {
                x = polished;
                qn = norm(x);
            }
        }
    }

    double const scale = std::max(mfc * mfc, std::abs(a));
    double const residual = 2 * std::abs(half_g(x)) / scale;
    // A spurious root of the squared equation leaves |half_g| ~ |a|
    if (!(residual < 1e-8) || !(qn > 0))
    {
        throw ChannelClosedError("no physical final-energy root");
    }

    FinalElectron out;
    out.energy = x * c;
    out.q3 = {x, qn * n[0], qn * n[1], qn * n[2]};
    out.heavy = total - out.q3;
    if (!(out.heavy.t > 0))
    {
        throw ChannelClosedError("final heavy particle has negative energy");
    }
    out.jacobian = std::abs(p0 - x * pn / qn) / c;
    out.residual = residual;
    return out;
}
}  // namespace

LaserField LaserField::rotated(double angle) const
{
    LaserField r = *this;
    r.a1 = rotate_z(a1, angle);
    r.a2 = rotate_z(a2, angle);
    return r;
}

LaserField
build_laser(FieldStrength e0, Frequency omega, ConstantsProfile const& profile)
{
    if (!(omega.value > 0) || !std::isfinite(omega.value))
    {
        throw KinematicsError("laser frequency must be > 0");
    }
    if (!(e0.value >= 0) || !std::isfinite(e0.value))
    {
        throw DomainError("field strength must be finite and >= 0");
    }
    double const c = profile.c;
    double const amp = c * e0.value / omega.value;

    LaserField laser;
    laser.omega = omega;
    laser.e0 = e0;
    laser.k = {omega.value / c, 0, 0, omega.value / c};
    laser.a1 = {0, amp, 0, 0};
    laser.a2 = {0, 0, amp, 0};
    laser.a_sq = -amp * amp;
    return laser;
}

std::array<double, 3> direction(double theta, double phi)
{
    return {std::sin(theta) * std::cos(phi),
            std::sin(theta) * std::sin(phi),
            std::cos(theta)};
}

std::array<double, 3> ScatteringGeometry::incident_direction() const
{
    return direction(theta_i, phi_i);
}

std::array<double, 3> ScatteringGeometry::final_direction() const
{
    if (theta_f < 0)
        return direction(-theta_f, phi_f + k_pi);
    return direction(theta_f, phi_f);
}

ScatteringGeometry ScatteringGeometry::from_degrees(double theta_i,
                                                    double phi_i,
                                                    double theta_f,
                                                    double phi_f)
{
    double const deg = k_pi / 180;
    return {theta_i * deg, phi_i * deg, theta_f * deg, phi_f * deg};
}

double geometry_factor(ScatteringGeometry const& geom)
{
    auto const ni = geom.incident_direction();
    auto const nf = geom.final_direction();
    return ni[0] * nf[0] + ni[1] * nf[1] + ni[2] * nf[2];
}

FourVector on_shell_momentum(double energy,
                             double mass,
                             std::array<double, 3> const& dir,
                             double c)
{
    double const rest = mass * c * c;
    double const pmag = std::sqrt(std::max(0.0, (energy - rest) * (energy + rest))) / c;
    return {energy / c, pmag * dir[0], pmag * dir[1], pmag * dir[2]};
}

FourVector incident_electron(Energy kinetic,
                             ScatteringGeometry const& geom,
                             ConstantsProfile const& profile)
{
    Energy const e1
        = kinetic_to_total_energy(kinetic, profile.electron_mass, profile);
    return on_shell_momentum(
        e1.value, profile.electron_mass, geom.incident_direction(), profile.c);
}

double effective_mass(double mass,
                      LaserField const& laser,
                      ConstantsProfile const& profile)
{
    double const c2 = profile.c * profile.c;
    return std::sqrt(mass * mass - laser.a_sq / (c2 * c2));
}

DressedState dress(FourVector const& p,
                   double mass,
                   LaserField const& laser,
                   ConstantsProfile const& profile)
{
    DressedState st;
    st.p = p;
    st.mass = mass;
    st.q = p;
    st.effective_mass = mass;
    if (!laser.is_off())
    {
        double const kp = cross_kp(laser.k, p);
        double const c2 = profile.c * profile.c;
        st.q = p - (laser.a_sq / (2 * c2 * kp)) * laser.k;
        st.effective_mass = effective_mass(mass, laser, profile);
    }
    st.total_energy_q = st.q.t * profile.c;
    return st;
}

FourVector undress(FourVector const& q,
                   LaserField const& laser,
                   ConstantsProfile const& profile)
{
    if (laser.is_off())
        return q;
    double const kq = cross_kp(laser.k, q);
    double const c2 = profile.c * profile.c;
    return q + (laser.a_sq / (2 * c2 * kq)) * laser.k;
}

FinalElectron solve_final_energy_laser_free(FourVector const& p1,
                                            ScatteringGeometry const& geom,
                                            ConstantsProfile const& profile,
                                            double target_mass)
{
    FourVector const p2{target_mass * profile.c, 0, 0, 0};
    return solve_mass_shell(p1,
                            p2,
                            profile.electron_mass,
                            target_mass,
                            geom.final_direction(),
                            profile.c);
}

FinalElectron solve_final_energy_dressed(DressedState const& q1,
                                         int photons,
                                         ScatteringGeometry const& geom,
                                         LaserField const& laser,
                                         FourVector const& initial_heavy,
                                         double heavy_mass,
                                         ConstantsProfile const& profile)
{
    FourVector electron = q1.q;
    if (photons != 0)
        electron += static_cast<double>(photons) * laser.k;
    return solve_mass_shell(electron,
                            initial_heavy,
                            q1.effective_mass,
                            heavy_mass,
                            geom.final_direction(),
                            profile.c);
}

FourVector momentum_transfer(FourVector const& q1,
                             FourVector const& q3,
                             int s,
                             LaserField const& laser)
{
    FourVector q = q3 - q1;
    if (s != 0)
        q -= static_cast<double>(s) * laser.k;
    return q;
}

double checked_transfer_square(FourVector const& q)
{
    double const q2 = minkowski_dot(q, q);
    if (!(std::abs(q2) >= 1e-20))
    {
        throw SingularKinematicsError(
            "momentum transfer q.q vanishes (forward scattering pole)");
    }
    return q2;
}
}  // namespace laserep
