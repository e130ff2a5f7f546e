#ifndef MIXEDTORIC_RESOLUTION_HPP
#define MIXEDTORIC_RESOLUTION_HPP

#include "mixedtoric/nondeg.hpp"
#include "mixedtoric/toric.hpp"

namespace mixedtoric {

struct OneVarZero {
    std::complex<double> u;
    double abs_f = 0.0;
};

/// All torus zeros of a one-variable mixed polynomial (in chart variable
/// `axis`): polar grid scan with local polish, deduplicated.
std::vector<OneVarZero> torus_zeros_1var(const MixedPolynomial& g, int axis,
                                         double radius = 12.0,
                                         int theta_grid = 720, int r_grid = 200);

struct ExceptionalIntersection {
    int axis = 0;  // chart variable index of the strictly positive ray
    Ray ray;
    MixedPolynomial restriction;  // f~ restricted to u_axis = 0
    std::vector<OneVarZero> zeros;
    bool empty() const { return zeros.empty(); }
};

struct ChartReport {
    ChartMap chart;
    StrictTransform transform;
    std::vector<ExceptionalIntersection> intersections;
    // f~(0,0) when both rays are strictly positive (both divisors meet here).
    std::optional<std::complex<double>> origin_value;
    bool assumption_star = false;
};

/// Strict transform, per-divisor restrictions, and their torus zeros for one
/// regular cone's chart.
ChartReport chart_report(const MixedPolynomial& f, const Cone2& cone);

struct LambdaOffender {
    ExponentPair exps;
    Ray vertex;
    long excess = 0;  // P(nu+mu) - d(P)
};

struct LambdaValue {
    std::vector<Ray> cone_rays;  // 1 or 2 strictly positive rays
    std::vector<LambdaOffender> offenders;
    std::optional<long> value;  // min excess; absent iff no offenders
};

/// Lambda per cone of the fan whose vertex rays are all strictly positive
/// (including the 1-dimensional cones).
std::vector<LambdaValue> lambda(const MixedPolynomial& f, const Fan2& fan);

struct LSigmaCheck {
    LambdaValue lam;
    bool stratum_empty = false;
    std::vector<std::string> notes;
};

struct ResolutionReport {
    MixedPolynomial poly;
    Fan2 fan;
    std::vector<ChartReport> charts;  // one per 2-dimensional cone
    std::vector<LambdaValue> lambda_values;
    std::vector<LSigmaCheck> l_sigma_checks;
    bool l_sigma_empty = false;
    std::vector<std::string> notes;
};

/// Full pipeline over a fan: chart reports, Lambda table, and the
/// stratum-emptiness checks behind the L(Sigma*) verdict.
ResolutionReport resolve(const MixedPolynomial& f, const Fan2& fan);

}  // namespace mixedtoric

#endif
