#pragma once

#include <array>

#include "dirac.hpp"
#include "dressing.hpp"
#include "four_vector.hpp"
#include "kinematics.hpp"

namespace laserep
{
//---------------------------------------------------------------------------//
/*!
 * Free momenta p1 (electron in), p2 (target in), p3 (electron out), p4
 * (target out) with every scalar product used by the closed forms.
 *
 * Index 0..3 in the caches corresponds to p1..p4.
 */
struct KinematicPoint
{
    std::array<FourVector, 4> p;
    double target_mass{0};
    double c{0};
    LaserField laser;

    std::array<double, 4> kp{};  //!< k.p_i
    std::array<double, 4> a1p{};  //!< a1.p_i
    std::array<double, 4> a2p{};  //!< a2.p_i
    std::array<std::array<double, 4>, 4> pp{};  //!< p_i.p_j

    double dot(int i, int j) const { return pp[i][j]; }
};

KinematicPoint make_point(FourVector const& p1,
                          FourVector const& p2,
                          FourVector const& p3,
                          FourVector const& p4,
                          LaserField const& laser,
                          double target_mass,
                          double c);

//---------------------------------------------------------------------------//
/*!
 * Coefficients of the spin-averaged electron-dressed amplitude
 *   M1 |Bs|^2 + M2 |B1s|^2 + M3 |B2s|^2 + M4 Bs B1s* + M6 B1s Bs*
 *   + M5 Bs B2s* + M8 B2s Bs* + M7 B1s B2s* + M9 B2s B1s*.
 */
struct MCoefficients
{
    double m1{0}, m2{0}, m3{0}, m4{0}, m5{0}, m6{0}, m7{0}, m8{0}, m9{0};
};

// Spin-averaged laser-free |M|^2 (initial-spin average included)
double laser_free_amplitude(KinematicPoint const& pt);

/*!
 * Closed-form M1..M9 for an electron mass of one.
 *
 * `flip_m5_sign` corrupts M5 (and M8) for mutation tests of the oracle.
 */
MCoefficients
m_coefficients(KinematicPoint const& pt, bool flip_m5_sign = false);

double electron_dressed_amplitude(MCoefficients const& m,
                                  CouplingTriple const& t);
double electron_dressed_amplitude(KinematicPoint const& pt,
                                  CouplingTriple const& t);

// Same quantity from explicit gamma-matrix traces
double numeric_electron_dressed_amplitude(
    KinematicPoint const& pt,
    CouplingTriple const& t,
    GammaBasis const& basis = GammaBasis::dirac());

// Numeric laser-free double trace
double numeric_laser_free_amplitude(KinematicPoint const& pt,
                                    GammaBasis const& basis
                                    = GammaBasis::dirac());

/*!
 * Both particles dressed: (1/4) Tr[electron] Tr[proton] with the electron
 * vertex of order s and the proton vertex of order l.
 */
double fully_dressed_amplitude(KinematicPoint const& pt,
                               CouplingTriple const& electron,
                               CouplingTriple const& proton,
                               GammaBasis const& basis = GammaBasis::dirac());
}  // namespace laserep
