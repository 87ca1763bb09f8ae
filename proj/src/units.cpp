#include "laserep/units.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "laserep/errors.hpp"

namespace laserep
{
namespace
{
void require_nonnegative(double v, char const* what)
{
    if (!(v >= 0) || !std::isfinite(v))
    {
        throw DomainError(std::string(what) + " must be finite and >= 0");
    }
}
}  // namespace

ConstantsProfile const& ConstantsProfile::codata()
{
    static ConstantsProfile const p{"CODATA",
                                    137.035999084,
                                    1.0,
                                    1836.15267343,
                                    5.14220674763e9,
                                    27.211386245988};
    return p;
}

ConstantsProfile const& ConstantsProfile::paper()
{
    static ConstantsProfile const p{
        "PAPER", 137.035999, 1.0, 1836.15267245, 5.14225e9, 27.211386};
    return p;
}

ConstantsProfile const& ConstantsProfile::by_name(std::string_view name)
{
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](char ch) {
        return static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    });
    if (lower == "codata")
        return codata();
    if (lower == "paper")
        return paper();
    throw DomainError("unknown constants profile '" + std::string(name)
                      + "' (expected codata|paper)");
}

void check(ConstantsProfile const& p)
{
    if (!(p.c > 0) || !(p.proton_mass_ratio > 1800)
        || !(p.au_field_in_V_per_cm > 0) || !(p.hartree_in_eV > 0))
    {
        throw DomainError("constants profile '" + p.name
                          + "' violates its invariants");
    }
}

FieldStrength field_to_au(double v_per_cm, ConstantsProfile const& profile)
{
    require_nonnegative(v_per_cm, "field strength");
    return FieldStrength{v_per_cm / profile.au_field_in_V_per_cm};
}

double field_to_v_per_cm(FieldStrength e0, ConstantsProfile const& profile)
{
    return e0.value * profile.au_field_in_V_per_cm;
}

Frequency photon_energy_to_au(double ev, ConstantsProfile const& profile)
{
    require_nonnegative(ev, "photon energy");
    return Frequency{ev / profile.hartree_in_eV};
}

Energy energy_to_au(double ev, ConstantsProfile const& profile)
{
    require_nonnegative(ev, "kinetic energy");
    return Energy{ev / profile.hartree_in_eV};
}

double energy_to_ev(Energy e, ConstantsProfile const& profile)
{
    return e.value * profile.hartree_in_eV;
}

Energy kinetic_to_total_energy(Energy kinetic,
                               double mass,
                               ConstantsProfile const& profile)
{
    require_nonnegative(kinetic.value, "kinetic energy");
    return Energy{kinetic.value + mass * profile.c * profile.c};
}
}  // namespace laserep
