#pragma once

#include <array>

#include "four_vector.hpp"
#include "units.hpp"

namespace laserep
{
//---------------------------------------------------------------------------//
/*!
 * Circularly polarized plane wave A = a1 cos(k.x) + a2 sin(k.x) travelling
 * along +z.
 *
 * a1 = (0,|a|,0,0), a2 = (0,0,|a|,0) with |a| = c E0 / omega, so
 * a1.a1 = a2.a2 = a_sq = -(c E0/omega)^2.
 */
struct LaserField
{
    Frequency omega;
    FieldStrength e0;
    FourVector k;
    FourVector a1;
    FourVector a2;
    double a_sq{0};

    bool is_off() const { return a_sq == 0; }
    // Rotate the polarization pair about z (probes the circular symmetry)
    LaserField rotated(double angle) const;
};

LaserField
build_laser(FieldStrength e0, Frequency omega, ConstantsProfile const& profile);

// Unit vector along polar/azimuthal angles measured from +z
std::array<double, 3> direction(double theta, double phi);

//---------------------------------------------------------------------------//
/*!
 * Incident and scattered directions (radians).
 *
 * A negative final polar angle means polar angle |theta_f| at azimuth
 * phi_f + pi, so that one-dimensional theta_f scans can cross the z axis.
 */
struct ScatteringGeometry
{
    double theta_i{0};
    double phi_i{0};
    double theta_f{0};
    double phi_f{0};

    std::array<double, 3> incident_direction() const;
    std::array<double, 3> final_direction() const;

    static ScatteringGeometry from_degrees(double theta_i,
                                           double phi_i,
                                           double theta_f,
                                           double phi_f);
};

// Cosine of the angle between incident and final directions
double geometry_factor(ScatteringGeometry const& geom);

FourVector incident_electron(Energy kinetic,
                             ScatteringGeometry const& geom,
                             ConstantsProfile const& profile);

// On-shell momentum of mass `mass` at total energy `energy` along `dir`
FourVector on_shell_momentum(double energy,
                             double mass,
                             std::array<double, 3> const& dir,
                             double c);

//---------------------------------------------------------------------------//
/*!
 * Free momentum together with its laser-dressed counterpart.
 *
 * q = p - a^2 k / (2 c^2 (k.p)), q.q = m*^2 c^2, Q = c q^0.
 */
struct DressedState
{
    FourVector p;
    FourVector q;
    double mass{1};
    double effective_mass{1};
    double total_energy_q{0};
};

DressedState dress(FourVector const& p,
                   double mass,
                   LaserField const& laser,
                   ConstantsProfile const& profile);

// sqrt(mass^2 - a^2/c^4)
double effective_mass(double mass,
                      LaserField const& laser,
                      ConstantsProfile const& profile);

// Invert the dressing: free momentum whose dressed momentum is q
FourVector undress(FourVector const& q,
                   LaserField const& laser,
                   ConstantsProfile const& profile);

//---------------------------------------------------------------------------//
/*!
 * Solved scattered electron.
 *
 * `jacobian` is |dG/dQ3| / 2 where G(Q3) = (P - q3)^2 - M_f^2 c^2 and P is
 * the conserved total. The energy is the dressed energy (the free energy in
 * the laser-free case).
 */
struct FinalElectron
{
    double energy{0};
    FourVector q3;
    FourVector heavy;  //!< final heavy-particle (dressed) momentum
    double jacobian{0};
    double residual{0};  //!< |G| / (M_f^2 c^2) at the returned root
};

// Elastic laser-free final state; target proton at rest
FinalElectron solve_final_energy_laser_free(FourVector const& p1,
                                            ScatteringGeometry const& geom,
                                            ConstantsProfile const& profile,
                                            double target_mass);

/*!
 * Dressed final state with net photon number `photons` (s or s + l).
 *
 * `initial_heavy` is the (possibly dressed) target momentum and
 * `heavy_mass` the mass on whose shell the final heavy particle lies.
 * Throws ChannelClosedError if no physical root exists.
 */
FinalElectron solve_final_energy_dressed(DressedState const& q1,
                                         int photons,
                                         ScatteringGeometry const& geom,
                                         LaserField const& laser,
                                         FourVector const& initial_heavy,
                                         double heavy_mass,
                                         ConstantsProfile const& profile);

// q3 - q1 - s k
FourVector momentum_transfer(FourVector const& q1,
                             FourVector const& q3,
                             int s,
                             LaserField const& laser);

// Rejects |q.q| below 1e-20 with SingularKinematicsError
double checked_transfer_square(FourVector const& q);
}  // namespace laserep
