#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <random>

#include "laserep/dressing.hpp"
#include "laserep/errors.hpp"

using namespace laserep;

namespace
{
auto const& prof = ConstantsProfile::paper();
double const c = prof.c;
double const proton = prof.proton_mass();

LaserField laser_at(double v_per_cm)
{
    return build_laser(field_to_au(v_per_cm, prof), photon_energy_to_au(1.17, prof), prof);
}

complex boost_b(int n, DressingArgument const& arg)
{
    return boost::math::cyl_bessel_j(static_cast<double>(n), arg.z)
           * std::polar(1.0, n * arg.phi0);
}

struct Pair
{
    FourVector p1, p3, p4;
};

// Elastic laser-free final state for the given geometry
Pair elastic(double t_ev, ScatteringGeometry const& g)
{
    FourVector const p1 = incident_electron(energy_to_au(t_ev, prof), g, prof);
    FinalElectron const f = solve_final_energy_laser_free(p1, g, prof, proton);
    return {p1, f.q3, f.heavy};
}
}  // namespace

TEST_CASE("argument components")
{
    DressingArgument const a = DressingArgument::from_components(-3, 4);
    CHECK(a.z == doctest::Approx(5));
    CHECK(a.z * std::cos(a.phi0) == doctest::Approx(-3).epsilon(1e-12));
    CHECK(a.z * std::sin(a.phi0) == doctest::Approx(4).epsilon(1e-12));
    DressingArgument const q3 = DressingArgument::from_components(-1, -1);
    CHECK(q3.phi0 == doctest::Approx(-3 * M_PI / 4));
    DressingArgument const zero = DressingArgument::from_components(0, 0);
    CHECK(zero.z == 0);
    CHECK(zero.phi0 == 0);
}

TEST_CASE("electron dressing argument")
{
    ScatteringGeometry const g = ScatteringGeometry::from_degrees(15, 15, 0, 105);
    Pair const k = elastic(2700, g);
    LaserField const l = laser_at(1e7);

    CHECK(electron_dressing_argument(k.p1, k.p1, l, c).z == 0);
    CHECK(electron_dressing_argument(k.p1, k.p3, laser_at(0), c).z == 0);

    DressingArgument const a = electron_dressing_argument(k.p1, k.p3, l, c);
    auto comp = [&](FourVector const& ai) {
        return minkowski_dot(ai, k.p1) / (c * minkowski_dot(l.k, k.p1))
               - minkowski_dot(ai, k.p3) / (c * minkowski_dot(l.k, k.p3));
    };
    CHECK(a.alpha1 == doctest::Approx(comp(l.a1)).epsilon(1e-14));
    CHECK(a.alpha2 == doctest::Approx(comp(l.a2)).epsilon(1e-14));
    CHECK(a.z == doctest::Approx(4.24).epsilon(2e-3));
    // Orders beyond the +-10 cutoff are negligible at this argument
    CHECK(std::pow(bessel_j(10, a.z) / bessel_j(0, a.z), 2) < 1e-5);
    CHECK(std::pow(bessel_j(12, a.z) / bessel_j(0, a.z), 2) < 1e-8);

    FourVector const along{1, 0, 0, 1};
    CHECK_THROWS_AS(electron_dressing_argument(along, k.p3, l, c), CollinearLightlikeError);
}

TEST_CASE("proton dressing argument")
{
    ScatteringGeometry const g = ScatteringGeometry::from_degrees(60, 0, 1, 90);
    Pair const k = elastic(2700, g);
    FourVector const rest{proton * c, 0, 0, 0};

    CHECK(proton_dressing_argument(rest, laser_at(1e9), c).z == 0);
    CHECK(proton_dressing_argument(k.p4, laser_at(0), c).z == 0);

    LaserField const l = laser_at(1e9);
    DressingArgument const a = proton_dressing_argument(k.p4, l, c);
    double const kp4 = minkowski_dot(l.k, k.p4);
    double const expect
        = std::hypot(minkowski_dot(l.a1, k.p4), minkowski_dot(l.a2, k.p4)) / (c * kp4);
    CHECK(a.z == doctest::Approx(expect).epsilon(1e-14));
    CHECK(a.phi0 == doctest::Approx(std::atan2(minkowski_dot(l.a2, k.p4), minkowski_dot(l.a1, k.p4))));
    CHECK(a.z < 1);

    DressingArgument const b = proton_dressing_argument(rest, k.p4, l, c);
    CHECK(b.z == doctest::Approx(a.z).epsilon(1e-14));
    // Electron ordering (in minus out) gives the opposite vector
    DressingArgument const e = electron_dressing_argument(rest, k.p4, l, c);
    CHECK(e.alpha1 == doctest::Approx(-a.alpha1));
    CHECK(e.alpha2 == doctest::Approx(-a.alpha2));
    // Linear in the field amplitude
    CHECK(proton_dressing_argument(k.p4, laser_at(1e10), c).z == doctest::Approx(10 * a.z).epsilon(1e-12));
}

TEST_CASE("coupling triple at zero argument")
{
    DressingArgument const zero{};
    CouplingTriple const t0 = coupling_triple(zero, 0);
    CHECK(t0.b_s == complex{1, 0});
    CHECK(t0.b_1s == complex{0, 0});
    CHECK(t0.b_2s == complex{0, 0});

    CouplingTriple const up = coupling_triple(zero, 1);
    CHECK(up.b_s == complex{0, 0});
    CHECK(std::abs(up.b_1s - complex{0.5, 0}) < 1e-16);
    CHECK(std::abs(up.b_2s - (-1.0 / complex{0, 2})) < 1e-16);
    CouplingTriple const down = coupling_triple(zero, -1);
    CHECK(std::abs(down.b_1s - complex{0.5, 0}) < 1e-16);
    CHECK(std::abs(down.b_2s - (1.0 / complex{0, 2})) < 1e-16);
    for (int s : {2, -2, 7})
    {
        CouplingTriple const t = coupling_triple(zero, s);
        CHECK(std::abs(t.b_s) + std::abs(t.b_1s) + std::abs(t.b_2s) == 0);
    }
}

TEST_CASE("coupling triple properties")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> uz(0, 60);
    std::uniform_real_distribution<double> up(-M_PI, M_PI);
    std::uniform_int_distribution<int> us(-70, 70);
    for (int i = 0; i < 300; ++i)
    {
        double const z = uz(rng);
        double const phi = up(rng);
        DressingArgument const arg
            = DressingArgument::from_components(z * std::cos(phi), z * std::sin(phi));
        int const s = us(rng);
        CouplingTriple const t = coupling_triple(arg, s);

        // Independent Bessel values
        complex const bp = boost_b(s + 1, arg), bm = boost_b(s - 1, arg);
        CHECK(std::abs(t.b_s - boost_b(s, arg)) < 1e-12);
        CHECK(std::abs(t.b_1s - 0.5 * (bp + bm)) < 1e-12);
        CHECK(std::abs(t.b_2s - (bp - bm) / complex{0, 2}) < 1e-12);

        // Neighbour form with the common phase e^{i s phi0} factored out
        double const jp = boost::math::cyl_bessel_j(s + 1.0, z);
        double const jm = boost::math::cyl_bessel_j(s - 1.0, z);
        complex const common = std::polar(1.0, s * arg.phi0);
        complex const alt = 0.5 * (std::polar(1.0, arg.phi0) * jp + std::polar(1.0, -arg.phi0) * jm) * common;
        CHECK(std::abs(t.b_1s - alt) < 1e-12);

        // Conjugation under phi0 -> -phi0
        DressingArgument mirror = arg;
        mirror.phi0 = -arg.phi0;
        CouplingTriple const m = coupling_triple(mirror, s);
        CHECK(std::abs(m.b_s - std::conj(t.b_s)) < 1e-14);
        CHECK(std::abs(m.b_1s - std::conj(t.b_1s)) < 1e-14);
        CHECK(std::abs(m.b_2s + std::conj(t.b_2s)) < 1e-14);

        // Parity under phi0 -> phi0 + pi
        DressingArgument flip = arg;
        flip.phi0 = arg.phi0 + M_PI;
        double const sign = (std::abs(s) % 2 == 0) ? 1 : -1;
        CHECK(std::abs(coupling_triple(flip, s).b_s - sign * t.b_s) < 1e-12);
    }
}

TEST_CASE("coupling normalization")
{
    for (double z : {0.3, 4.24, 21.8, 197.6})
    {
        DressingArgument const arg = DressingArgument::from_components(z * 0.6, z * 0.8);
        int const n = static_cast<int>(std::ceil(z)) + 40;
        double sum = 0;
        for (int s = -n; s <= n; ++s)
            sum += std::norm(coupling_triple(arg, s).b_s);
        CHECK(sum == doctest::Approx(1).epsilon(1e-10));
    }
}

TEST_CASE("row-based triple matches direct evaluation")
{
    DressingArgument const arg = DressingArgument::from_components(12, -5);
    BesselRow const row = bessel_row(arg.z, 60);
    for (int s = -70; s <= 70; ++s)
    {
        CouplingTriple const a = coupling_triple(arg, s);
        CouplingTriple const b = coupling_triple(arg, s, row);
        CHECK(std::abs(a.b_s - b.b_s) < 1e-13);
        CHECK(std::abs(a.b_1s - b.b_1s) < 1e-13);
        CHECK(std::abs(a.b_2s - b.b_2s) < 1e-13);
    }
}
