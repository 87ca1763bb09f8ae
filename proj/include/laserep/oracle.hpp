#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "amplitudes.hpp"
#include "kinematics.hpp"

namespace laserep
{
//---------------------------------------------------------------------------//
/*!
 * Physical electron-dressed kinematic point drawn at random.
 *
 * T1 is log-uniform in [1 keV, 1 MeV], the field uniform in [0, 0.05] a.u.,
 * the order s uniform in [-20, 20].
 */
struct OracleSample
{
    double kinetic{0};
    double field{0};
    double omega{0};
    ScatteringGeometry geometry;
    int s{0};
    KinematicPoint point;
    CouplingTriple triple;
};

OracleSample
random_oracle_sample(std::mt19937_64& rng, ConstantsProfile const& profile);

// Human-readable dump sufficient to reproduce the point
std::string describe(OracleSample const& sample);

struct OracleReport
{
    int points{0};
    double max_amplitude_deviation{0};  //!< relative to the amplitude
    double max_coefficient_deviation{0};  //!< relative to max |M_i|
    int worst_index{-1};
    OracleSample worst;
};

/*!
 * Closed-form coefficients and amplitude against the gamma-trace engine.
 *
 * Each coefficient is recovered from the numeric tensor by evaluating it at
 * one-hot and pairwise coupling values.
 */
OracleReport run_oracle(std::uint64_t seed,
                        int n_points,
                        ConstantsProfile const& profile,
                        bool flip_m5_sign = false,
                        bool laser_off = false);

struct NumericCoefficients
{
    MCoefficients m;
    double imaginary{0};  //!< largest |Im| of a cross coefficient
};

// Coefficients reconstructed from numeric traces
NumericCoefficients numeric_m_coefficients(KinematicPoint const& pt);
}  // namespace laserep
