#include "mixedtoric/j10.hpp"

#include <cmath>
#include <thread>

namespace mixedtoric {

void J10Params::validate() const {
    if (a < 0 || a > 3 || b < 0 || b > 2 || c < 0 || c > 2 || d < 0 || d > 4 ||
        e < 0 || e > 1 || f < 0 || f > 6)
        throw std::invalid_argument("J10Params: exponent out of range");
    if (k <= 2) throw std::invalid_argument("J10Params: k must be > 2");
}

MixedPolynomial j10_build(const J10Params& p) {
    p.validate();
    auto term = [](ExactComplex c, int n1, int m1, int n2, int m2) {
        return MixedTerm{std::move(c), ExponentPair({n1, n2}, {m1, m2})};
    };
    std::vector<MixedTerm> ts = {
        term(ExactComplex(Rational(1)), 0, 0, p.a, 3 - p.a),
        term(ExactComplex(-(p.k + 3)), p.b, 2 - p.b, p.c, 2 - p.c),
        term(ExactComplex(3 * p.k + 2), p.d, 4 - p.d, p.e, 1 - p.e),
        term(ExactComplex(-2 * p.k), p.f, 6 - p.f, 0, 0),
    };
    return MixedPolynomial(2, std::move(ts));
}

std::vector<FamilyRow> j10_classify_family() {
    const WeightVector P{1, 2};
    std::vector<FamilyRow> rows;
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int c = 0; c <= 2; ++c)
                for (int d = 0; d <= 4; ++d)
                    for (int e = 0; e <= 1; ++e)
                        for (int f = 0; f <= 6; ++f) {
                            J10Params params{a, b, c, d, e, f, Rational(3)};
                            MixedPolynomial poly = j10_build(params);
                            HomogeneityCertificate cert = classify(poly, P);
                            if (!cert.strongly_mixed) continue;
                            // drop the conjugate mirrors (negative polar degree)
                            if (cert.polar->degree <= 0) continue;
                            rows.push_back({params, cert.polar->degree,
                                            poly.is_holomorphic()});
                        }
    return rows;
}

J10Params j10_case(int case_id, Rational k) {
    switch (case_id) {
        case 1: return {3, 2, 2, 4, 1, 6, std::move(k)};  // holomorphic
        case 2: return {2, 2, 1, 4, 0, 4, std::move(k)};
        case 3: return {2, 0, 2, 4, 0, 4, std::move(k)};
        case 4: return {2, 2, 1, 2, 1, 4, std::move(k)};
        case 5: return {2, 0, 2, 2, 1, 4, std::move(k)};
    }
    throw std::invalid_argument("j10_case: case id must be 1..5");
}

NonexistenceOracleReport j10_nonexistence_oracles(const Rational& k) {
    NonexistenceOracleReport rep;
    const double a1 = 1.0;  // scaling action reduces to |a1| = 1
    const double s5 = std::sqrt(5.0);

    auto quartic = [&](double a2sq) {
        // |a2|^4 - 8 |a1|^4 |a2|^2 + 11 |a1|^8
        return a2sq * a2sq - 8.0 * std::pow(a1, 4) * a2sq + 11.0 * std::pow(a1, 8);
    };
    const double a2sq_plus = (4.0 + s5) * std::pow(a1, 4);
    const double a2sq_minus = (4.0 - s5) * std::pow(a1, 4);
    rep.quartic_residual_plus = std::abs(quartic(a2sq_plus));
    rep.quartic_residual_minus = std::abs(quartic(a2sq_minus));

    // a2 = lambda * a1^2 with lambda = 6(|a1|^4+|a2|^2)/(11|a1|^4+|a2|^2);
    // at the constrained moduli, lambda must coincide with xi = |a2|/|a1|^2.
    auto direction = [&](double a2sq) {
        return 6.0 * (std::pow(a1, 4) + a2sq) / (11.0 * std::pow(a1, 4) + a2sq);
    };
    rep.direction_factor_plus = direction(a2sq_plus);
    rep.direction_factor_minus = direction(a2sq_minus);
    rep.direction_consistency_plus =
        std::abs(rep.direction_factor_plus - std::sqrt(a2sq_plus) / (a1 * a1));
    rep.direction_consistency_minus =
        std::abs(rep.direction_factor_minus - std::sqrt(a2sq_minus) / (a1 * a1));

    // Substituting a2 = xi a1^2 into f gives xi^3 - (k+3) xi^2 + (3k+2) xi - 2k.
    const double kd = static_cast<double>(k);
    auto cubic = [&](double xi) {
        return xi * xi * xi - (kd + 3.0) * xi * xi + (3.0 * kd + 2.0) * xi - 2.0 * kd;
    };
    const double xi_plus = std::sqrt(4.0 + s5);
    const double xi_minus = std::sqrt(4.0 - s5);
    rep.cubic_at_xi_plus = cubic(xi_plus);
    rep.cubic_at_xi_minus = cubic(xi_minus);
    rep.cubic_roots = {1.0, 2.0, kd};  // (xi-1)(xi-2)(xi-k)
    rep.contradiction_confirmed =
        std::abs(rep.cubic_at_xi_plus) > 1e-6 && std::abs(rep.cubic_at_xi_minus) > 1e-6;
    return rep;
}

namespace {

Rational rational_from_double(double x) {
    // exact: doubles are dyadic rationals
    int exp = 0;
    double m = std::frexp(x, &exp);
    long long mant = static_cast<long long>(std::ldexp(m, 53));
    exp -= 53;
    Rational r(mant);
    boost::multiprecision::cpp_int two(1);
    if (exp >= 0) {
        two <<= exp;
        return r * Rational(two);
    }
    two <<= -exp;
    return r / Rational(two);
}

}  // namespace

SweepReport j10_sweep(int case_id, const std::vector<double>& k_grid,
                      const SearchConfig& cfg) {
    if (case_id < 2 || case_id > 5)
        throw std::invalid_argument("j10_sweep: case id must be 2..5");
    SweepReport rep;
    rep.entries.resize(k_grid.size());

    auto run = [&](std::size_t i, const SearchConfig& use) {
        J10Params p = j10_case(case_id, rational_from_double(k_grid[i]));
        MixedPolynomial poly = j10_build(p);
        SearchReport sr = search_critical(poly, use);
        rep.entries[i] = {case_id, k_grid[i], sr.best_residual,
                          static_cast<int>(sr.candidates.size())};
    };
    const int workers =
        std::min<int>(worker_count(cfg.threads), std::max<std::size_t>(1, k_grid.size()));
    if (workers <= 1 || k_grid.size() <= 1) {
        for (std::size_t i = 0; i < k_grid.size(); ++i) run(i, cfg);
    } else {
        SearchConfig inner = cfg;
        inner.threads = 1;  // parallelism moves to the (case, k) grid here
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < k_grid.size(); i += workers) run(i, inner);
            });
        for (auto& t : pool) t.join();
    }
    return rep;
}

}  // namespace mixedtoric
