#include <doctest.h>

#include <random>

#include "mixedtoric/homogeneity.hpp"
#include "mixedtoric/parser.hpp"

using namespace mixedtoric;

namespace {

// Random polynomial every term of which has P(nu+mu) = dr and P(nu-mu) = dp.
MixedPolynomial random_homogeneous(std::mt19937_64& rng, const WeightVector& P,
                                   long dr, long dp) {
    std::vector<ExponentPair> pool;
    for (int n1 = 0; n1 <= 8; ++n1)
        for (int m1 = 0; m1 <= 8; ++m1)
            for (int n2 = 0; n2 <= 8; ++n2)
                for (int m2 = 0; m2 <= 8; ++m2) {
                    ExponentPair e({n1, n2}, {m1, m2});
                    if (P.radial(e) == dr && P.polar(e) == dp)
                        pool.push_back(e);
                }
    if (pool.empty()) return MixedPolynomial(2);  // caller skips this combo
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> c(1, 5);
    std::vector<MixedTerm> ts;
    int count = 1 + int(pick(rng) % 4);
    for (int t = 0; t < count; ++t)
        ts.push_back({ExactComplex(c(rng), c(rng)), pool[pick(rng)]});
    return MixedPolynomial(2, std::move(ts));
}

}  // namespace

TEST_SUITE("homogeneity") {

TEST_CASE("degrees of the deformed cusp polynomial") {
    MixedPolynomial f =
        parse("z2^2*~z2 - 6*z1^2*z2*~z2 + 11*z1^2*~z1^2*z2 - 6*z1^4*~z1^2", {});
    WeightVector P{1, 2};
    CHECK(radial_degree(f, P) == 6);
    CHECK(polar_degree(f, P) == 2);
    HomogeneityCertificate cert = classify(f, P);
    CHECK(cert.strongly_mixed);
    CHECK(cert.polar_positive);
    CHECK(cert.radial->degree == 6);
    CHECK(cert.polar->degree == 2);
}

TEST_CASE("squared-norm germ: radial 2, polar 0") {
    MixedPolynomial rho = parse("z1*~z1 + z2*~z2", {});
    WeightVector P{1, 1};
    CHECK(radial_degree(rho, P) == 2);
    CHECK(polar_degree(rho, P) == 0);
    HomogeneityCertificate cert = classify(rho, P);
    CHECK(cert.strongly_mixed);
    CHECK_FALSE(cert.polar_positive);
}

TEST_CASE("non-homogeneous polynomial has no degree") {
    MixedPolynomial f = parse("z1 + z1^2", {});
    CHECK_FALSE(radial_degree(f, WeightVector{1, 1}).has_value());
}

TEST_CASE("euler identities hold exactly") {
    MixedPolynomial f =
        parse("z2^2*~z2 - 6*z1^2*z2*~z2 + 11*z1^2*~z1^2*z2 - 6*z1^4*~z1^2", {});
    EulerReport rep = verify_euler(f, WeightVector{1, 2});
    CHECK(rep.radial_checked);
    CHECK(rep.radial_ok);
    CHECK(rep.polar_checked);
    CHECK(rep.polar_ok);
    // d_r = 6, d_p = 2: both half-degrees integral
    CHECK(rep.half_checked);
    CHECK(rep.half_ok);
    CHECK(rep.half_sum == 4);
    CHECK(rep.half_diff == 2);
}

TEST_CASE("euler identities on random strongly homogeneous sums") {
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<long> w(1, 3);
    for (int trial = 0; trial < 25; ++trial) {
        WeightVector P{w(rng), w(rng)};
        long dr = 6 + long(trial % 5);
        long dp = long(trial % 3) - 1;
        if ((dr + dp) % 2 != 0) ++dp;  // keep nu/mu solvable
        MixedPolynomial f = random_homogeneous(rng, P, dr, dp);
        if (f.is_zero()) continue;  // (dr, dp) unreachable for this weight
        EulerReport rep = verify_euler(f, P);
        CHECK(rep.radial_ok);
        CHECK(rep.polar_ok);
    }
}

TEST_CASE("numeric scaling action check") {
    MixedPolynomial f =
        parse("z2^2*~z2 - 6*z1^2*z2*~z2 + 11*z1^2*~z1^2*z2 - 6*z1^4*~z1^2", {});
    ActionReport rep = check_action(f, WeightVector{1, 2});
    CHECK(rep.pass);
    CHECK(rep.max_radial_error < 1e-9);
    CHECK(rep.max_polar_error < 1e-9);
}

TEST_CASE("radial weight recovery") {
    MixedPolynomial f =
        parse("z2^2*~z2 - 6*z1^2*z2*~z2 + 11*z1^2*~z1^2*z2 - 6*z1^4*~z1^2", {});
    auto P = find_radial_weight(f);
    REQUIRE(P.has_value());
    CHECK(*P == WeightVector{1, 2});
    auto Q = find_radial_weight(parse("z1*~z1 + z2*~z2", {}));
    REQUIRE(Q.has_value());
    CHECK(*Q == WeightVector{1, 1});
    CHECK_FALSE(find_radial_weight(parse("z1 + z1^2", {})).has_value());
}

}
