#pragma once

#include <string>
#include <string_view>

namespace laserep
{
//---------------------------------------------------------------------------//
// Scalar wrappers. Everything inside the library is in atomic units
// (hbar = m_e = e = 1); the wrappers only mark intent at API boundaries.
//---------------------------------------------------------------------------//
template<class Tag>
struct Quantity
{
    double value{0};

    constexpr Quantity() = default;
    constexpr explicit Quantity(double v) : value(v) {}
    constexpr bool operator==(Quantity const&) const = default;
};

struct EnergyTag;
struct FieldStrengthTag;
struct FrequencyTag;

using Energy = Quantity<EnergyTag>;
using FieldStrength = Quantity<FieldStrengthTag>;
using Frequency = Quantity<FrequencyTag>;

//---------------------------------------------------------------------------//
/*!
 * Physical constants and laboratory-unit conversion factors.
 *
 * Two profiles exist: CODATA, and PAPER whose atomic field unit is the
 * rounded 5.14225e9 V/cm used to quote the reference field strengths.
 * Profiles are immutable values.
 */
struct ConstantsProfile
{
    std::string name;
    double c;                     //!< speed of light [a.u.]
    double electron_mass{1.0};    //!< fixed by the unit system
    double proton_mass_ratio;     //!< M / m_e
    double au_field_in_V_per_cm;  //!< 1 a.u. of field in V/cm
    double hartree_in_eV;         //!< 1 a.u. of energy in eV

    static ConstantsProfile const& codata();
    static ConstantsProfile const& paper();

    //! Lookup by case-insensitive name ("codata" | "paper")
    static ConstantsProfile const& by_name(std::string_view name);

    double proton_mass() const { return proton_mass_ratio * electron_mass; }
};

// Validate the profile invariants, throwing DomainError on violation
void check(ConstantsProfile const& profile);

FieldStrength field_to_au(double v_per_cm, ConstantsProfile const& profile);
double field_to_v_per_cm(FieldStrength e0, ConstantsProfile const& profile);

Frequency photon_energy_to_au(double ev, ConstantsProfile const& profile);

// Kinetic energy given in eV
Energy energy_to_au(double ev, ConstantsProfile const& profile);
double energy_to_ev(Energy e, ConstantsProfile const& profile);

// E = T + m c^2
Energy kinetic_to_total_energy(Energy kinetic,
                               double mass,
                               ConstantsProfile const& profile);
}  // namespace laserep
