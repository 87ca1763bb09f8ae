#include "laserep/dirac.hpp"

#include <cmath>

#include "laserep/errors.hpp"

namespace laserep
{
SpinMatrix SpinMatrix::identity()
{
    SpinMatrix m;
    for (int i = 0; i < 4; ++i)
        m(i, i) = 1;
    return m;
}

SpinMatrix& SpinMatrix::operator+=(SpinMatrix const& o)
{
    for (int i = 0; i < 16; ++i)
        data_[i] += o.data_[i];
    return *this;
}

SpinMatrix& SpinMatrix::operator-=(SpinMatrix const& o)
{
    for (int i = 0; i < 16; ++i)
        data_[i] -= o.data_[i];
    return *this;
}

SpinMatrix& SpinMatrix::operator*=(complex s)
{
    for (auto& x : data_)
        x *= s;
    return *this;
}

SpinMatrix SpinMatrix::adjoint() const
{
    SpinMatrix r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            r(i, j) = std::conj((*this)(j, i));
    return r;
}

complex SpinMatrix::trace() const
{
    return data_[0] + data_[5] + data_[10] + data_[15];
}

SpinMatrix operator+(SpinMatrix a, SpinMatrix const& b)
{
    return a += b;
}

SpinMatrix operator-(SpinMatrix a, SpinMatrix const& b)
{
    return a -= b;
}

SpinMatrix operator*(SpinMatrix const& a, SpinMatrix const& b)
{
    SpinMatrix r;
    for (int i = 0; i < 4; ++i)
    {
        for (int k = 0; k < 4; ++k)
        {
            complex const aik = a(i, k);
            if (aik == complex{})
                continue;
            for (int j = 0; j < 4; ++j)
                r(i, j) += aik * b(k, j);
        }
    }
    return r;
}

SpinMatrix operator*(complex s, SpinMatrix a)
{
    return a *= s;
}

SpinMatrix operator*(SpinMatrix a, complex s)
{
    return a *= s;
}

complex trace_of_product(SpinMatrix const& a, SpinMatrix const& b)
{
    complex t{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            t += a(i, j) * b(j, i);
    return t;
}

double max_abs_difference(SpinMatrix const& a, SpinMatrix const& b)
{
    double m = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

//---------------------------------------------------------------------------//
namespace
{
GammaBasis make_dirac()
{
    complex const i{0, 1};
    GammaBasis b;
    auto& g0 = b.upper[0];
    g0(0, 0) = g0(1, 1) = 1;
    g0(2, 2) = g0(3, 3) = -1;

    // gamma^k = [[0, sigma_k], [-sigma_k, 0]]
    std::array<std::array<complex, 4>, 3> const sigma{{
        {complex{0}, complex{1}, complex{1}, complex{0}},
        {complex{0}, -i, i, complex{0}},
        {complex{1}, complex{0}, complex{0}, complex{-1}},
    }};
    for (int k = 0; k < 3; ++k)
    {
        auto& g = b.upper[k + 1];
        for (int r = 0; r < 2; ++r)
        {
            for (int col = 0; col < 2; ++col)
            {
                g(r, col + 2) = sigma[k][2 * r + col];
                g(r + 2, col) = -sigma[k][2 * r + col];
            }
        }
    }
    return b;
}

VertexOperator dressed_vertex(FourVector const& p_in,
                              FourVector const& p_out,
                              LaserField const& laser,
                              CouplingTriple const& t,
                              double c,
                              double charge_sign,
                              GammaBasis const& basis)
{
    VertexOperator v;
    if (laser.is_off())
    {
        for (int mu = 0; mu < 4; ++mu)
            v[mu] = t.b_s * basis.lower(mu);
        return v;
    }
    double const kp_in = minkowski_dot(laser.k, p_in);
    double const kp_out = minkowski_dot(laser.k, p_out);
    if (kp_in == 0 || kp_out == 0)
        throw CollinearLightlikeError("k.p = 0 in dressed vertex");
    double const c_in = 1 / (2 * c * kp_in);
    double const c_out = 1 / (2 * c * kp_out);

    SpinMatrix const ks = slash(laser.k, basis);
    SpinMatrix const k_a1 = ks * slash(laser.a1, basis);
    SpinMatrix const a1_k = slash(laser.a1, basis) * ks;
    SpinMatrix const k_a2 = ks * slash(laser.a2, basis);
    SpinMatrix const a2_k = slash(laser.a2, basis) * ks;
    double const a2_term = 2 * laser.a_sq * c_in * c_out;

    for (int mu = 0; mu < 4; ++mu)
    {
        SpinMatrix const g = basis.lower(mu);
        SpinMatrix c0 = g - (a2_term * laser.k.lower(mu)) * ks;
        SpinMatrix c1 = c_in * (g * k_a1) + c_out * (a1_k * g);
        SpinMatrix c2 = c_in * (g * k_a2) + c_out * (a2_k * g);
        v[mu] = t.b_s * c0 + (charge_sign * t.b_1s) * c1
                + (charge_sign * t.b_2s) * c2;
    }
    return v;
}
}  // namespace

GammaBasis const& GammaBasis::dirac()
{
    static GammaBasis const basis = make_dirac();
    return basis;
}

GammaBasis GammaBasis::conjugated(SpinMatrix const& unitary) const
{
    GammaBasis r;
    SpinMatrix const ud = unitary.adjoint();
    for (int mu = 0; mu < 4; ++mu)
        r.upper[mu] = unitary * upper[mu] * ud;
    return r;
}

SpinMatrix GammaBasis::lower(int mu) const
{
    return metric(mu) * upper[mu];
}

SpinMatrix GammaBasis::bar(SpinMatrix const& x) const
{
    return upper[0] * x.adjoint() * upper[0];
}

SpinMatrix slash(FourVector const& v, GammaBasis const& basis)
{
    SpinMatrix r;
    for (int mu = 0; mu < 4; ++mu)
    {
        double const vl = v.lower(mu);
        if (vl != 0)
            r += vl * basis.upper[mu];
    }
    return r;
}

VertexOperator plain_vertex(GammaBasis const& basis)
{
    VertexOperator v;
    for (int mu = 0; mu < 4; ++mu)
        v[mu] = basis.lower(mu);
    return v;
}

VertexOperator electron_vertex(FourVector const& p_in,
                               FourVector const& p_out,
                               LaserField const& laser,
                               CouplingTriple const& triple,
                               double c,
                               GammaBasis const& basis)
{
    return dressed_vertex(p_in, p_out, laser, triple, c, 1.0, basis);
}

VertexOperator proton_vertex(FourVector const& p_in,
                             FourVector const& p_out,
                             LaserField const& laser,
                             CouplingTriple const& triple,
                             double c,
                             GammaBasis const& basis)
{
    return dressed_vertex(p_in, p_out, laser, triple, c, -1.0, basis);
}

SpinTensor spin_tensor(double mass,
                       FourVector const& p_out,
                       FourVector const& p_in,
                       VertexOperator const& v,
                       double c,
                       GammaBasis const& basis)
{
    SpinMatrix const rest = (mass * c * c) * SpinMatrix::identity();
    SpinMatrix const out = c * slash(p_out, basis) + rest;
    SpinMatrix const in = c * slash(p_in, basis) + rest;

    std::array<SpinMatrix, 4> left;
    std::array<SpinMatrix, 4> right;
    for (int mu = 0; mu < 4; ++mu)
    {
        left[mu] = out * v[mu] * in;
        right[mu] = basis.bar(v[mu]);
    }
    SpinTensor t;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            t[mu][nu] = trace_of_product(left[mu], right[nu]);
    return t;
}

complex contract_complex(SpinTensor const& l, SpinTensor const& h)
{
    complex sum{};
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            sum += metric(mu) * metric(nu) * l[mu][nu] * h[mu][nu];
    return 0.25 * sum;
}

double contract(SpinTensor const& l, SpinTensor const& h)
{
    complex sum{};
    double scale = 0;
    for (int mu = 0; mu < 4; ++mu)
    {
        for (int nu = 0; nu < 4; ++nu)
        {
            complex const term = metric(mu) * metric(nu) * l[mu][nu] * h[mu][nu];
            sum += term;
            scale = std::max(scale, std::abs(term));
        }
    }
    scale = std::max(scale, std::abs(sum));
    if (std::abs(sum.imag()) > 1e-10 * scale)
    {
        throw ConsistencyError("spin-summed amplitude is not real");
    }
    return 0.25 * sum.real();
}
}  // namespace laserep
