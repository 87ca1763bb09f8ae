#include "laserep/dressing.hpp"

#include <cmath>

#include "laserep/errors.hpp"

namespace laserep
{
namespace
{
double phase_ratio(FourVector const& a, FourVector const& p, LaserField const& laser, double c)
{
    double const kp = minkowski_dot(laser.k, p);
    if (kp == 0)
        throw CollinearLightlikeError("k.p = 0 in dressing argument");
    return minkowski_dot(a, p) / (c * kp);
}

template<class J>
CouplingTriple make_triple(DressingArgument const& arg, int s, J&& bessel)
{
    auto coefficient = [&](int n) {
        double const j = bessel(n);
        if (j == 0)
            return complex{0, 0};
        return j * std::polar(1.0, n * arg.phi0);
    };
    complex const up = coefficient(s + 1);
    complex const down = coefficient(s - 1);
    CouplingTriple t;
    t.b_s = coefficient(s);
    t.b_1s = 0.5 * (up + down);
    t.b_2s = (up - down) / complex{0, 2};
    return t;
}
}  // namespace

DressingArgument DressingArgument::from_components(double alpha1, double alpha2)
{
    DressingArgument arg;
    arg.alpha1 = alpha1;
    arg.alpha2 = alpha2;
    arg.z = std::hypot(alpha1, alpha2);
    arg.phi0 = (alpha1 == 0 && alpha2 == 0) ? 0.0 : std::atan2(alpha2, alpha1);
    return arg;
}

DressingArgument electron_dressing_argument(FourVector const& p1,
                                            FourVector const& p3,
                                            LaserField const& laser,
                                            double c)
{
    if (laser.is_off())
        return {};
    return DressingArgument::from_components(
        phase_ratio(laser.a1, p1, laser, c) - phase_ratio(laser.a1, p3, laser, c),
        phase_ratio(laser.a2, p1, laser, c) - phase_ratio(laser.a2, p3, laser, c));
}

DressingArgument proton_dressing_argument(FourVector const& p2,
                                          FourVector const& p4,
                                          LaserField const& laser,
                                          double c)
{
    if (laser.is_off())
        return {};
    return DressingArgument::from_components(
        phase_ratio(laser.a1, p4, laser, c) - phase_ratio(laser.a1, p2, laser, c),
        phase_ratio(laser.a2, p4, laser, c) - phase_ratio(laser.a2, p2, laser, c));
}

DressingArgument proton_dressing_argument(FourVector const& p4,
                                          LaserField const& laser,
                                          double c)
{
    if (laser.is_off())
        return {};
    return DressingArgument::from_components(phase_ratio(laser.a1, p4, laser, c),
                                             phase_ratio(laser.a2, p4, laser, c));
}

CouplingTriple coupling_triple(DressingArgument const& arg, int s)
{
    return make_triple(arg, s, [&](int n) { return bessel_j(n, arg.z); });
}

CouplingTriple
coupling_triple(DressingArgument const& arg, int s, BesselRow const& row)
{
    if (std::abs(s) + 1 > row.s_max())
        return coupling_triple(arg, s);
    return make_triple(arg, s, [&](int n) { return row(n); });
}
}  // namespace laserep
