#ifndef MIXEDTORIC_J10_HPP
#define MIXEDTORIC_J10_HPP

#include "mixedtoric/nondeg.hpp"

namespace mixedtoric {

/// Parameters of the mixed deformation family of (z2-z1^2)(z2-2z1^2)(z2-kz1^2):
/// z2^a zbar2^{3-a} - (k+3) z1^b zbar1^{2-b} z2^c zbar2^{2-c}
///   + (3k+2) z1^d zbar1^{4-d} z2^e zbar2^{1-e} - 2k z1^f zbar1^{6-f}
struct J10Params {
    int a = 2, b = 2, c = 1, d = 2, e = 1, f = 4;  // the case-IV exponents
    Rational k{3};

    void validate() const;
};

MixedPolynomial j10_build(const J10Params& params);

struct FamilyRow {
    J10Params params;
    long polar_degree = 0;  // w.r.t. P = (1,2); radial degree is always 6
    bool holomorphic = false;
};

/// All parameter tuples (2520) that are strongly mixed weighted homogeneous
/// with positive polar degree w.r.t. P = (1,2) (conjugate mirrors excluded);
/// independent of the exact k > 2 used.
std::vector<FamilyRow> j10_classify_family();

struct NonexistenceOracleReport {
    // |a2|^4 - 8|a1|^4|a2|^2 + 11|a1|^8 at |a2|^2 = (4 +- sqrt5)|a1|^4
    double quartic_residual_plus = 0.0;
    double quartic_residual_minus = 0.0;
    // lambda(|a1|,|a2|) = 6(|a1|^4+|a2|^2)/(11|a1|^4+|a2|^2): direction factor
    double direction_factor_plus = 0.0;
    double direction_factor_minus = 0.0;
    double direction_consistency_plus = 0.0;   // |lambda - xi| at the constrained moduli
    double direction_consistency_minus = 0.0;
    // cubic xi^3 - 6 xi^2 + 11 xi - 6 at xi = sqrt(4 +- sqrt5): the contradiction
    double cubic_at_xi_plus = 0.0;
    double cubic_at_xi_minus = 0.0;
    std::vector<double> cubic_roots;  // {1, 2, 3} for k = 3
    bool contradiction_confirmed = false;
};

/// Checkable identities from the no-mixed-critical-points argument (case IV).
NonexistenceOracleReport j10_nonexistence_oracles(const Rational& k);

struct SweepEntry {
    int case_id = 4;  // II..V as 2..5
    double k = 3.0;
    double best_residual = 0.0;
    int candidates = 0;
};

struct SweepReport {
    std::vector<SweepEntry> entries;
    std::string note = "exploratory: existence of mixed critical points for "
                       "these parameters is an open question";
};

/// Residual search over a case/k grid; parallel over entries, deterministic.
SweepReport j10_sweep(int case_id, const std::vector<double>& k_grid,
                      const SearchConfig& cfg);

/// Exponent tuples for the five strongly mixed rows (1-based case id 1..5).
J10Params j10_case(int case_id, Rational k = Rational(3));

}  // namespace mixedtoric

#endif
