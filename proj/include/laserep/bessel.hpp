#pragma once

#include <vector>

namespace laserep
{
/*!
 * Integer-order Bessel function of the first kind, real argument z >= 0.
 *
 * Ascending series for z < 2, Hankel asymptotic expansion once z dominates
 * n^2, Miller downward recurrence otherwise. J_{-n} = (-1)^n J_n.
 */
double bessel_j(int n, double z);

/*!
 * Row of J_n(z) for n in [-s_max, s_max], computed in a single pass.
 */
class BesselRow
{
  public:
    BesselRow() = default;
    BesselRow(double z, int s_max);

    double z() const { return z_; }
    int s_max() const { return s_max_; }

    //! J_n(z); zero outside the stored range
    double operator()(int n) const;

  private:
    double z_{0};
    int s_max_{0};
    std::vector<double> positive_;  //!< J_0 .. J_{s_max}
};

BesselRow bessel_row(double z, int s_max);
}  // namespace laserep
