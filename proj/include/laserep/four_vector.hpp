#pragma once

#include <array>
#include <cmath>

namespace laserep
{
//---------------------------------------------------------------------------//
/*!
 * Contravariant Minkowski four-vector (t, x, y, z), metric diag(+,-,-,-).
 *
 * For momenta the time component is E/c.
 */
struct FourVector
{
    double t{0}, x{0}, y{0}, z{0};

    constexpr double operator[](int mu) const
    {
        return mu == 0 ? t : mu == 1 ? x : mu == 2 ? y : z;
    }

    // Component with lowered index
    constexpr double lower(int mu) const
    {
        return mu == 0 ? t : -(*this)[mu];
    }

    constexpr double spatial_norm2() const { return x * x + y * y + z * z; }
    double spatial_norm() const { return std::sqrt(spatial_norm2()); }

    constexpr FourVector& operator+=(FourVector const& o)
    {
        t += o.t;
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    constexpr FourVector& operator-=(FourVector const& o)
    {
        t -= o.t;
        x -= o.x;
        y -= o.y;
        z -= o.z;
        return *this;
    }
    constexpr FourVector& operator*=(double s)
    {
        t *= s;
        x *= s;
        y *= s;
        z *= s;
        return *this;
    }

    constexpr bool operator==(FourVector const&) const = default;
};

constexpr FourVector operator+(FourVector a, FourVector const& b)
{
    return a += b;
}
constexpr FourVector operator-(FourVector a, FourVector const& b)
{
    return a -= b;
}
constexpr FourVector operator-(FourVector a)
{
    return a *= -1.0;
}
constexpr FourVector operator*(double s, FourVector a)
{
    return a *= s;
}
constexpr FourVector operator*(FourVector a, double s)
{
    return a *= s;
}

constexpr double minkowski_dot(FourVector const& a, FourVector const& b)
{
    return a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z;
}

// Euclidean dot product of the spatial parts
constexpr double spatial_dot(FourVector const& a, FourVector const& b)
{
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

// Metric tensor diagonal entry g^{mu mu} (= g_{mu mu})
constexpr double metric(int mu)
{
    return mu == 0 ? 1.0 : -1.0;
}
}  // namespace laserep
