#include "laserep/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "laserep/errors.hpp"

namespace laserep
{
namespace
{
double constexpr k_pi = 3.14159265358979323846;

void check_argument(double z)
{
    if (!(z >= 0) || !std::isfinite(z))
        throw DomainError("Bessel argument must be finite and >= 0");
}

double series(int n, double z)
{
    double const half = 0.5 * z;
    // Leading term (z/2)^n / n!, in logs to survive large n
    double term = (n == 0) ? 1.0
                           : std::exp(n * std::log(half) - std::lgamma(n + 1.0));
    if (term == 0)
        return 0;
    double const q = -half * half;
    double sum = term;
    for (int k = 1; k < 200; ++k)
    {
        term *= q / (static_cast<double>(k) * (k + n));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum))
            break;
    }
    return sum;
}

bool use_asymptotic(int n, double z)
{
    double const nn = static_cast<double>(n);
    return z > 50 && z > 0.5 * nn * nn;
}

// Hankel expansion; valid for z >> n^2
double asymptotic(int n, double z)
{
    double const mu = 4.0 * n * n;
    double const eight_z = 8 * z;
    double p = 1, q = 0;
    double term = 1;
    double last = std::numeric_limits<double>::infinity();
    for (int k = 1; k < 400; ++k)
    {
        double const odd = 2.0 * k - 1;
        term *= (mu - odd * odd) / (k * eight_z);
        double const mag = std::abs(term);
        if (mag == 0 || mag > last)
            break;
        last = mag;
        // Alternate between Q (odd k) and P (even k) with signs - + ...
        if (k % 2 == 1)
            q += ((k / 2) % 2 == 0 ? 1 : -1) * term;
        else
            p += ((k / 2) % 2 == 1 ? -1 : 1) * term;
        if (mag < 1e-17)
            break;
    }
    // chi = z - (n/2 + 1/4) pi with the n-dependent part reduced mod 2 pi
    double const shift = std::fmod(0.5 * n + 0.25, 2.0) * k_pi;
    // Angle-sum form keeps the phase exact when z is much larger than 2 pi
    double const cz = std::cos(z), sz = std::sin(z);
    double const cs_shift = std::cos(shift), sn_shift = std::sin(shift);
    double const cs = cz * cs_shift + sz * sn_shift;
    double const sn = sz * cs_shift - cz * sn_shift;
    return std::sqrt(2 / (k_pi * z)) * (p * cs - q * sn);
}

/*
 * Miller's algorithm: recur downward from well above max(n, z) with
 * arbitrary seed, then normalize with J_0 + 2 sum J_{2k} = 1.
 * Returns J_0..J_{n_max}.
 */
std::vector<double> miller(int n_max, double z)
{
    int const top_order = std::max(n_max, static_cast<int>(std::ceil(z)));
    int start = top_order + 40
                + static_cast<int>(std::sqrt(40.0 * std::max(top_order, 1)));
    start += start % 2;

    std::vector<double> out(static_cast<std::size_t>(n_max) + 1, 0.0);
    double next = 0;     // J_{m+1}
    double current = 1e-300;  // J_m
    double norm = 0;
    double const big = 1e250;
    for (int m = start; m > 0; --m)
    {
        double const prev = (2.0 * m / z) * current - next;
        next = current;
        current = prev;  // now J_{m-1}
        int const order = m - 1;
        if (order <= n_max)
            out[static_cast<std::size_t>(order)] = current;
        if (order > 0 && order % 2 == 0)
            norm += 2 * current;
        if (std::abs(current) > big)
        {
            double const s = 1 / big;
            current *= s;
            next *= s;
            norm *= s;
            for (int j = order; j <= n_max; ++j)
                out[static_cast<std::size_t>(j)] *= s;
        }
    }
    norm += current;  // J_0
    for (auto& v : out)
        v /= norm;
    return out;
}

double positive_order(int n, double z)
{
    if (z == 0)
        return n == 0 ? 1.0 : 0.0;
    if (z < 2)
        return series(n, z);
    if (use_asymptotic(n, z))
        return asymptotic(n, z);
    return miller(n, z).back();
}
}  // namespace

double bessel_j(int n, double z)
{
    check_argument(z);
    int const an = std::abs(n);
    if (an > 1000000)
        throw DomainError("Bessel order magnitude exceeds 1e6");
    double const v = positive_order(an, z);
    return (n < 0 && an % 2 == 1) ? -v : v;
}

BesselRow::BesselRow(double z, int s_max) : z_(z), s_max_(s_max)
{
    check_argument(z);
    if (s_max < 0)
        throw DomainError("Bessel row requires s_max >= 0");
    auto const len = static_cast<std::size_t>(s_max) + 1;
    if (z == 0)
    {
        positive_.assign(len, 0.0);
        positive_[0] = 1;
    }
    else if (z < 2 || use_asymptotic(s_max, z))
    {
        positive_.resize(len);
        for (int n = 0; n <= s_max; ++n)
            positive_[static_cast<std::size_t>(n)] = positive_order(n, z);
    }
    else
    {
        positive_ = miller(s_max, z);
    }
}

double BesselRow::operator()(int n) const
{
    int const an = std::abs(n);
    if (an > s_max_)
        return 0;
    double const v = positive_[static_cast<std::size_t>(an)];
    return (n < 0 && an % 2 == 1) ? -v : v;
}

BesselRow bessel_row(double z, int s_max)
{
    return BesselRow(z, s_max);
}
}  // namespace laserep
