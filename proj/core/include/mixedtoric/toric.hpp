#ifndef MIXEDTORIC_TORIC_HPP
#define MIXEDTORIC_TORIC_HPP

#include "mixedtoric/fan.hpp"
#include "mixedtoric/mixedpoly.hpp"

namespace mixedtoric {

/// Chart of the toric modification: columns are the cone's rays (in either
/// order, so the determinant is +-1). The chart map is
///   pi(u1, u2) = (u1^{a.x} u2^{b.x}, u1^{a.y} u2^{b.y}).
struct ChartMap {
    Ray col1, col2;

    ChartMap(Ray c1, Ray c2);
    explicit ChartMap(const Cone2& c) : ChartMap(c.a, c.b) {}

    static ChartMap identity() { return ChartMap(Ray::e1(), Ray::e2()); }

    long determinant() const { return det(col1, col2); }

    /// Apply the monomial map to a point of the chart torus.
    std::vector<std::complex<double>> apply(
        const std::vector<std::complex<double>>& u) const;
};

/// Pullback factored as (prod_i u_i^{m_i} ubar_i^{mbar_i}) * reduced.
struct StrictTransform {
    std::array<int, 2> exceptional_nu{0, 0};  // u_i exponents m_i
    std::array<int, 2> exceptional_mu{0, 0};  // ubar_i exponents mbar_i
    MixedPolynomial reduced;                  // f~ in chart coordinates
};

/// Term-wise substitution z_j -> prod_i u_i^{(P_i)_j}; exact.
MixedPolynomial pullback(const MixedPolynomial& f, const ChartMap& chart);

/// Factor out the maximal exceptional monomial (independent minima over
/// holomorphic and antiholomorphic exponents per chart variable).
StrictTransform strict_transform(const MixedPolynomial& f, const ChartMap& chart);

/// Restriction of the reduced transform to u_axis = 0 (drop terms with a
/// positive u_axis or ubar_axis exponent); a one-variable mixed polynomial.
MixedPolynomial exceptional_locus_values(const StrictTransform& st, int axis);

}  // namespace mixedtoric

#endif
