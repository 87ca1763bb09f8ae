#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <limits>
#include <random>

#include "laserep/bessel.hpp"
#include "laserep/errors.hpp"

using namespace laserep;

namespace
{
// Ascending series in long double, summed until terms stop contributing
long double series_oracle(int n, long double z)
{
    long double const half = z / 2;
    long double term = 1;
    for (int k = 1; k <= n; ++k)
        term *= half / k;
    long double sum = term;
    for (int k = 1; k < 500; ++k)
    {
        term *= -half * half / (static_cast<long double>(k) * (k + n));
        sum += term;
        if (std::fabs(term) < 1e-22L * std::fabs(sum))
            break;
    }
    return sum;
}

double boost_j(int n, double z)
{
    return boost::math::cyl_bessel_j(static_cast<double>(n), z);
}
}  // namespace

TEST_CASE("values at the origin")
{
    CHECK(bessel_j(0, 0) == 1);
    for (int n : {1, 2, -3, 50, 400})
        CHECK(bessel_j(n, 0) == 0);
}

TEST_CASE("moderate order against the series oracle")
{
    CHECK(bessel_j(10, 5) == doctest::Approx(1.4678e-3).epsilon(1e-4));
    for (int n = 0; n <= 30; ++n)
    {
        for (double z : {0.1, 0.7, 1.9, 2.1, 5.0, 7.3, 12.0})
        {
            double const ref = static_cast<double>(series_oracle(n, z));
            CHECK(std::abs(bessel_j(n, z) - ref) < 1e-14);
        }
    }
}

TEST_CASE("large order and argument against Boost")
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> uz(0, 400);
    std::uniform_int_distribution<int> un(-400, 400);
    double worst = 0;
    for (int i = 0; i < 4000; ++i)
    {
        double const z = uz(rng);
        int const n = un(rng);
        worst = std::max(worst, std::abs(bessel_j(n, z) - boost_j(n, z)));
    }
    CHECK(worst < 1e-13);

    // Grid through the turning point and the asymptotic region
    worst = 0;
    for (double z : {2.0, 4.24, 21.8, 49.9, 50.1, 120.0, 197.6, 350.0, 400.0})
    {
        for (int n = -400; n <= 400; n += 7)
            worst = std::max(worst, std::abs(bessel_j(n, z) - boost_j(n, z)));
    }
    CHECK(worst < 1e-13);

    // Far asymptotic arguments
    for (double z : {1e3, 1e5, 1e8, 1e10})
    {
        for (int n : {0, 1, 5, 30, 100})
        {
            double const ref = boost_j(n, z);
            CHECK(std::abs(bessel_j(n, z) - ref) < 1e-10 / std::sqrt(z) + 1e-13);
        }
    }
}

TEST_CASE("negative order parity")
{
    for (double z : {0.5, 3.0, 40.0, 300.0})
    {
        for (int n = 1; n < 60; ++n)
        {
            double const sign = (n % 2 == 0) ? 1 : -1;
            CHECK(bessel_j(-n, z) == sign * bessel_j(n, z));
        }
    }
}

TEST_CASE("normalization identity")
{
    double sum = 0;
    for (int n = -60; n <= 60; ++n)
        sum += bessel_j(n, 7.3) * bessel_j(n, 7.3);
    CHECK(sum == doctest::Approx(1).epsilon(1e-13));
}

TEST_CASE("suppression beyond the turning point")
{
    // A fixed margin of 30 orders suffices for small arguments only
    for (double z : {0.5, 5.0, 12.0, 20.0})
    {
        int const first = static_cast<int>(std::floor(z + 30)) + 1;
        for (int n = first; n < first + 60; n += 3)
            CHECK(std::abs(bessel_j(n, z)) < 1e-15);
    }
    // The transition region widens as z^(1/3)
    for (double z : {21.8, 100.0, 197.6, 350.0})
    {
        int const first = static_cast<int>(std::floor(z + 12 * std::cbrt(z))) + 1;
        for (int n = first; n < first + 60; n += 3)
            CHECK(std::abs(bessel_j(n, z)) < 1e-15);
        CHECK(std::abs(bessel_j(static_cast<int>(z) + 31, z)) > 1e-15);
    }
}

TEST_CASE("domain errors")
{
    CHECK_THROWS_AS(bessel_j(0, -1), DomainError);
    CHECK_THROWS_AS(bessel_j(2, std::numeric_limits<double>::quiet_NaN()), DomainError);
    CHECK_THROWS_AS(bessel_j(2000000, 1), DomainError);
    CHECK_THROWS_AS(bessel_row(-2, 3), DomainError);
}

TEST_CASE("bessel row")
{
    SUBCASE("origin")
    {
        BesselRow const r = bessel_row(0, 5);
        for (int n = -5; n <= 5; ++n)
            CHECK(r(n) == (n == 0 ? 1.0 : 0.0));
    }
    SUBCASE("elementwise agreement")
    {
        for (double z : {0.3, 1.99, 4.24, 12.0, 21.8, 60.0, 197.6, 400.0})
        {
            int const smax = static_cast<int>(z) + 100;
            BesselRow const r = bessel_row(z, smax);
            CHECK(r.s_max() == smax);
            CHECK(r.z() == z);
            for (int n = -smax; n <= smax; ++n)
                CHECK(std::abs(r(n) - bessel_j(n, z)) < 1e-13);
            CHECK(r(smax + 1) == 0);
            CHECK(r(-smax - 1) == 0);
        }
    }
    SUBCASE("three-term recurrence")
    {
        double const z = 12;
        BesselRow const r = bessel_row(z, 80);
        for (int n = -79; n <= 79; ++n)
            CHECK(std::abs(r(n - 1) + r(n + 1) - 2 * n / z * r(n)) < 1e-10);
    }
    SUBCASE("normalization")
    {
        for (double z : {3.0, 21.8, 197.6})
        {
            int const smax = static_cast<int>(std::ceil(z)) + 40;
            BesselRow const r = bessel_row(z, smax);
            double sum = 0;
            for (int n = -smax; n <= smax; ++n)
                sum += r(n) * r(n);
            CHECK(sum == doctest::Approx(1).epsilon(1e-12));
        }
    }
}
