#pragma once

#include <complex>

#include "bessel.hpp"
#include "four_vector.hpp"
#include "kinematics.hpp"

namespace laserep
{
using complex = std::complex<double>;

//---------------------------------------------------------------------------//
/*!
 * Argument of the Bessel expansion of the Volkov phase difference:
 * exp(-i z sin(phi - phi0)) with (alpha1, alpha2) = z (cos phi0, sin phi0).
 */
struct DressingArgument
{
    double alpha1{0};
    double alpha2{0};
    double z{0};
    double phi0{0};

    static DressingArgument from_components(double alpha1, double alpha2);
};

// alpha_i = a_i.p1 / (c k.p1) - a_i.p3 / (c k.p3)
DressingArgument electron_dressing_argument(FourVector const& p1,
                                            FourVector const& p3,
                                            LaserField const& laser,
                                            double c);

// Opposite charge: alpha_i = a_i.p4/(c k.p4) - a_i.p2/(c k.p2)
DressingArgument proton_dressing_argument(FourVector const& p2,
                                          FourVector const& p4,
                                          LaserField const& laser,
                                          double c);

// Target initially at rest (a_i.p2 = 0)
DressingArgument proton_dressing_argument(FourVector const& p4,
                                          LaserField const& laser,
                                          double c);

//---------------------------------------------------------------------------//
/*!
 * Fourier coefficients of 1, cos(phi), sin(phi) against the Volkov phase
 * for exchange order s:
 *   b_s  = J_s e^{i s phi0}
 *   b_1s = (B_{s+1} + B_{s-1}) / 2
 *   b_2s = (B_{s+1} - B_{s-1}) / 2i
 * with B_n = J_n(z) e^{i n phi0}.
 */
struct CouplingTriple
{
    complex b_s;
    complex b_1s;
    complex b_2s;
};

CouplingTriple coupling_triple(DressingArgument const& arg, int s);

// Same, reading J values from a precomputed row of argument arg.z
CouplingTriple
coupling_triple(DressingArgument const& arg, int s, BesselRow const& row);
}  // namespace laserep
