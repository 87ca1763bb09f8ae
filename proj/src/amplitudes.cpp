#include "laserep/amplitudes.hpp"

#include "laserep/errors.hpp"

namespace laserep
{
KinematicPoint make_point(FourVector const& p1,
                          FourVector const& p2,
                          FourVector const& p3,
                          FourVector const& p4,
                          LaserField const& laser,
                          double target_mass,
                          double c)
{
    KinematicPoint pt;
    pt.p = {p1, p2, p3, p4};
    pt.target_mass = target_mass;
    pt.c = c;
    pt.laser = laser;
    for (int i = 0; i < 4; ++i)
    {
        pt.kp[i] = minkowski_dot(laser.k, pt.p[i]);
        pt.a1p[i] = minkowski_dot(laser.a1, pt.p[i]);
        pt.a2p[i] = minkowski_dot(laser.a2, pt.p[i]);
        for (int j = 0; j < 4; ++j)
            pt.pp[i][j] = minkowski_dot(pt.p[i], pt.p[j]);
    }
    return pt;
}

double laser_free_amplitude(KinematicPoint const& pt)
{
    double const c2 = pt.c * pt.c;
    double const mm = pt.target_mass * pt.target_mass;
    double const p12 = pt.dot(0, 1), p13 = pt.dot(0, 2), p14 = pt.dot(0, 3);
    double const p23 = pt.dot(1, 2), p24 = pt.dot(1, 3), p34 = pt.dot(2, 3);
    return 8 * c2 * c2
           * (p12 * p34 + p14 * p23 - c2 * (mm * p13 + p24) + 2 * c2 * c2 * mm);
}

MCoefficients m_coefficients(KinematicPoint const& pt, bool flip_m5_sign)
{
    double const c = pt.c;
    double const c2 = c * c;
    double const c4 = c2 * c2;
    double const mm = pt.target_mass * pt.target_mass;
    double const as = pt.laser.a_sq;

    double const kp1 = pt.kp[0], kp2 = pt.kp[1], kp3 = pt.kp[2], kp4 = pt.kp[3];
    if (kp1 == 0 || kp3 == 0)
        throw CollinearLightlikeError("k.p = 0 in amplitude coefficients");

    double const p12 = pt.dot(0, 1), p13 = pt.dot(0, 2), p14 = pt.dot(0, 3);
    double const p23 = pt.dot(1, 2), p24 = pt.dot(1, 3), p34 = pt.dot(2, 3);
    double const den = kp1 * kp3;

    MCoefficients m;
    m.m1 = 4 / den
           * (as * as * kp2 * kp4
              - as * c2
                    * (2 * c2 * (kp2 * kp4 + kp1 * kp3 * mm) + kp3 * kp4 * p12
                       - 2 * kp2 * kp4 * p13 + kp2 * kp3 * p14
                       + kp1 * kp4 * p23 - 2 * kp1 * kp3 * p24
                       + kp1 * kp2 * p34)
              + 2 * c4 * kp1 * kp3
                    * (2 * c4 * mm + p14 * p23 - c2 * (mm * p13 + p24)
                       + p12 * p34));

    // a_j.p_i, 1-based to follow the coefficient layout
    auto diagonal = [&](std::array<double, 4> const& a) {
        double const a1 = a[0], a3 = a[2], a4 = a[3];
        return 4 * c2 / den
               * (-2 * a1 * a4 * kp2 * kp3
                  + a3 * (-2 * a4 * kp1 * kp2 + 4 * a1 * kp2 * kp4)
                  + as
                        * (c2 * (2 * kp2 * kp4 + (kp1 * kp1 + kp3 * kp3) * mm)
                           + kp3 * kp4 * p12 - 2 * kp2 * kp4 * p13
                           + kp2 * kp3 * p14 - kp3 * kp4 * p23
                           - kp2 * kp3 * p34
                           + kp1
                                 * (-kp4 * p12 - kp2 * p14 + kp4 * p23
                                    - 2 * kp3 * p24 + kp2 * p34)));
    };
    auto mixed = [&](std::array<double, 4> const& a) {
        double const a1 = a[0], a3 = a[2], a4 = a[3];
        return 2 * c / den
               * (as * kp2 * (a4 * (kp1 + kp3) - 2 * (a1 + a3) * kp4)
                  + 2 * c2
                        * (a3 * kp1
                               * (c2 * (kp3 - kp1) * mm + kp4 * p12
                                  + kp2 * p14)
                           + kp3
                                 * (-a4 * kp1 * (p12 + p23)
                                    + a1
                                          * (c2 * (kp1 - kp3) * mm
                                             + kp4 * p23 + kp2 * p34))));
    };

    m.m2 = diagonal(pt.a1p);
    m.m3 = diagonal(pt.a2p);
    m.m4 = mixed(pt.a1p);
    m.m5 = mixed(pt.a2p);

    auto const& x = pt.a1p;
    auto const& y = pt.a2p;
    m.m7 = -4 * c2 * kp2 / den
           * (x[3] * y[2] * kp1 + x[2] * y[3] * kp1 + x[3] * y[0] * kp3
              + x[0] * y[3] * kp3 - 2 * (x[2] * y[0] + x[0] * y[2]) * kp4);

    if (flip_m5_sign)
        m.m5 = -m.m5;
    m.m6 = m.m4;
    m.m8 = m.m5;
    m.m9 = m.m7;
    return m;
}

double electron_dressed_amplitude(MCoefficients const& m, CouplingTriple const& t)
{
    complex const bs = t.b_s, b1 = t.b_1s, b2 = t.b_2s;
    complex const sum = m.m1 * std::norm(bs) + m.m2 * std::norm(b1)
                        + m.m3 * std::norm(b2) + m.m4 * bs * std::conj(b1)
                        + m.m6 * b1 * std::conj(bs) + m.m5 * bs * std::conj(b2)
                        + m.m8 * b2 * std::conj(bs) + m.m7 * b1 * std::conj(b2)
                        + m.m9 * b2 * std::conj(b1);
    return sum.real();
}

double electron_dressed_amplitude(KinematicPoint const& pt, CouplingTriple const& t)
{
    if (pt.laser.is_off())
        return laser_free_amplitude(pt) * std::norm(t.b_s);
    return electron_dressed_amplitude(m_coefficients(pt), t);
}

double numeric_electron_dressed_amplitude(KinematicPoint const& pt,
                                          CouplingTriple const& t,
                                          GammaBasis const& basis)
{
    VertexOperator const ve
        = electron_vertex(pt.p[0], pt.p[2], pt.laser, t, pt.c, basis);
    SpinTensor const l = spin_tensor(1.0, pt.p[2], pt.p[0], ve, pt.c, basis);
    SpinTensor const h = spin_tensor(
        pt.target_mass, pt.p[3], pt.p[1], plain_vertex(basis), pt.c, basis);
    return contract(l, h);
}

double numeric_laser_free_amplitude(KinematicPoint const& pt, GammaBasis const& basis)
{
    VertexOperator const g = plain_vertex(basis);
    SpinTensor const l = spin_tensor(1.0, pt.p[2], pt.p[0], g, pt.c, basis);
    SpinTensor const h
        = spin_tensor(pt.target_mass, pt.p[3], pt.p[1], g, pt.c, basis);
    return contract(l, h);
}

double fully_dressed_amplitude(KinematicPoint const& pt,
                               CouplingTriple const& electron,
                               CouplingTriple const& proton,
                               GammaBasis const& basis)
{
    VertexOperator const ve
        = electron_vertex(pt.p[0], pt.p[2], pt.laser, electron, pt.c, basis);
    VertexOperator const vp
        = proton_vertex(pt.p[1], pt.p[3], pt.laser, proton, pt.c, basis);
    SpinTensor const l = spin_tensor(1.0, pt.p[2], pt.p[0], ve, pt.c, basis);
    SpinTensor const h
        = spin_tensor(pt.target_mass, pt.p[3], pt.p[1], vp, pt.c, basis);
    return contract(l, h);
}
}  // namespace laserep
