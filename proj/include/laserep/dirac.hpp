#pragma once

#include <array>
#include <complex>

#include "dressing.hpp"
#include "four_vector.hpp"
#include "kinematics.hpp"

namespace laserep
{
//---------------------------------------------------------------------------//
/*!
 * Dense 4x4 complex matrix, row-major.
 */
class SpinMatrix
{
  public:
    static SpinMatrix identity();

    complex& operator()(int row, int col) { return data_[4 * row + col]; }
    complex operator()(int row, int col) const { return data_[4 * row + col]; }

    SpinMatrix& operator+=(SpinMatrix const& o);
    SpinMatrix& operator-=(SpinMatrix const& o);
    SpinMatrix& operator*=(complex s);

    SpinMatrix adjoint() const;
    complex trace() const;

  private:
    std::array<complex, 16> data_{};
};

SpinMatrix operator+(SpinMatrix a, SpinMatrix const& b);
SpinMatrix operator-(SpinMatrix a, SpinMatrix const& b);
SpinMatrix operator*(SpinMatrix const& a, SpinMatrix const& b);
SpinMatrix operator*(complex s, SpinMatrix a);
SpinMatrix operator*(SpinMatrix a, complex s);

// Tr(a b) without forming the product
complex trace_of_product(SpinMatrix const& a, SpinMatrix const& b);

// Largest entry-wise modulus of a - b
double max_abs_difference(SpinMatrix const& a, SpinMatrix const& b);

//---------------------------------------------------------------------------//
/*!
 * Contravariant gamma matrices gamma^mu.
 *
 * The default is the Dirac representation. A basis conjugated by a unitary
 * U (gamma -> U gamma U^dagger) gives identical traces.
 */
struct GammaBasis
{
    std::array<SpinMatrix, 4> upper;

    static GammaBasis const& dirac();
    GammaBasis conjugated(SpinMatrix const& unitary) const;

    // gamma_mu = g_{mu mu} gamma^mu
    SpinMatrix lower(int mu) const;
    // gamma^0 X^dagger gamma^0
    SpinMatrix bar(SpinMatrix const& x) const;
};

// v_mu gamma^mu
SpinMatrix slash(FourVector const& v, GammaBasis const& basis = GammaBasis::dirac());

//---------------------------------------------------------------------------//
//! Lorentz vector of matrices with lower index mu
using VertexOperator = std::array<SpinMatrix, 4>;

//! Complex rank-2 tensor T_{mu nu}, both indices lower
using SpinTensor = std::array<std::array<complex, 4>, 4>;

// gamma_mu
VertexOperator plain_vertex(GammaBasis const& basis = GammaBasis::dirac());

/*!
 * Laser-dressed electron vertex for one photon order:
 *   C0 = gamma_mu - 2 k_mu a^2 kslash C(p1) C(p3)
 *   C1 = C(p1) gamma_mu kslash a1slash + C(p3) a1slash kslash gamma_mu
 *   C2 = same with a2
 *   Gamma_mu = C0 b_s + C1 b_1s + C2 b_2s,   C(p) = 1 / (2 c k.p)
 */
VertexOperator electron_vertex(FourVector const& p_in,
                               FourVector const& p_out,
                               LaserField const& laser,
                               CouplingTriple const& triple,
                               double c,
                               GammaBasis const& basis = GammaBasis::dirac());

// Positive charge: C1 and C2 change sign
VertexOperator proton_vertex(FourVector const& p_in,
                             FourVector const& p_out,
                             LaserField const& laser,
                             CouplingTriple const& triple,
                             double c,
                             GammaBasis const& basis = GammaBasis::dirac());

/*!
 * T_{mu nu} = Tr[(c pslash_out + m c^2) V_mu (c pslash_in + m c^2) Vbar_nu].
 */
SpinTensor spin_tensor(double mass,
                       FourVector const& p_out,
                       FourVector const& p_in,
                       VertexOperator const& v,
                       double c,
                       GammaBasis const& basis = GammaBasis::dirac());

/*!
 * (1/4) L_{mu nu} H^{mu nu}.
 *
 * Throws ConsistencyError if the imaginary part exceeds 1e-10 of the
 * magnitude scale.
 */
double contract(SpinTensor const& l, SpinTensor const& h);

// As above without the realness check
complex contract_complex(SpinTensor const& l, SpinTensor const& h);
}  // namespace laserep
