#include <doctest.h>

#include <random>

#include "mixedtoric/parser.hpp"
#include "mixedtoric/toric.hpp"

using namespace mixedtoric;

namespace {

MixedPolynomial deformed_cusp() {
    return parse("z2^2*~z2 - 6*z1^2*z2*~z2 + 11*z1^2*~z1^2*z2 - 6*z1^4*~z1^2",
                 {});
}

}  // namespace

TEST_SUITE("toric") {

TEST_CASE("chart map validation and application") {
    CHECK_THROWS(ChartMap(Ray(1, 0), Ray(1, 2)));  // |det| = 2
    ChartMap chart(Ray(1, 1), Ray(1, 0));          // det -1 accepted
    CHECK(chart.determinant() == -1);
    std::vector<std::complex<double>> u{{2.0, 0.0}, {3.0, 0.0}};
    auto z = chart.apply(u);  // z1 = u1 u2, z2 = u1
    CHECK(std::abs(z[0] - std::complex<double>(6.0, 0.0)) < 1e-14);
    CHECK(std::abs(z[1] - std::complex<double>(2.0, 0.0)) < 1e-14);
}

TEST_CASE("strict transform in the chart with first ray (1,1)") {
    StrictTransform st =
        strict_transform(deformed_cusp(), ChartMap(Ray(1, 1), Ray(1, 0)));
    CHECK(st.exceptional_nu == std::array<int, 2>{2, 0});
    CHECK(st.exceptional_mu == std::array<int, 2>{1, 0});
    CHECK(st.reduced ==
          parse("1 - 6*u1*u2^2 + 11*u1*~u1*u2^2*~u2^2 - 6*u1^2*~u1*u2^4*~u2^2",
                {}));
}

TEST_CASE("strict transform in the chart with first ray (1,2)") {
    StrictTransform st =
        strict_transform(deformed_cusp(), ChartMap(Ray(1, 2), Ray(0, 1)));
    CHECK(st.exceptional_nu == std::array<int, 2>{4, 0});
    CHECK(st.exceptional_mu == std::array<int, 2>{2, 0});
    CHECK(st.reduced == parse("u2^2*~u2 - 6*u2*~u2 + 11*u2 - 6", {}));
}

TEST_CASE("identity chart is a no-op") {
    MixedPolynomial f = deformed_cusp();
    StrictTransform st = strict_transform(f, ChartMap::identity());
    CHECK(st.exceptional_nu == std::array<int, 2>{0, 0});
    CHECK(st.exceptional_mu == std::array<int, 2>{0, 0});
    CHECK(st.reduced == f);
}

TEST_CASE("pullback agrees with composition numerically") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(0.2, 1.8), a(-3.14, 3.14);
    std::vector<ChartMap> charts = {
        ChartMap(Ray(1, 1), Ray(1, 0)), ChartMap(Ray(1, 1), Ray(1, 2)),
        ChartMap(Ray(1, 2), Ray(0, 1)), ChartMap(Ray(2, 5), Ray(1, 2))};
    MixedPolynomial f = deformed_cusp();
    for (const auto& chart : charts)
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<std::complex<double>> p{
                std::polar(u(rng), a(rng)), std::polar(u(rng), a(rng))};
            std::complex<double> direct = f.evaluate(chart.apply(p));
            std::complex<double> pulled = pullback(f, chart).evaluate(p);
            CHECK(std::abs(direct - pulled) <= 1e-10 * (1.0 + std::abs(direct)));
        }
}

TEST_CASE("strict transform factorization is exact") {
    // exceptional monomial times reduced re-assembles the pullback
    ChartMap chart(Ray(1, 1), Ray(1, 2));
    MixedPolynomial f = deformed_cusp();
    StrictTransform st = strict_transform(f, chart);
    ExponentPair mono({st.exceptional_nu[0], st.exceptional_nu[1]},
                      {st.exceptional_mu[0], st.exceptional_mu[1]});
    MixedPolynomial factor = MixedPolynomial::monomial(2, ExactComplex(1L), mono);
    CHECK(factor * st.reduced == pullback(f, chart));
    // reduced has a term free of each variable
    for (int axis = 0; axis < 2; ++axis) {
        bool free = false;
        for (const auto& t : st.reduced.terms())
            if (t.exps.nu[axis] == 0 && t.exps.mu[axis] == 0) free = true;
        CHECK(free);
    }
}

TEST_CASE("exceptional restriction") {
    ChartMap chart(Ray(1, 1), Ray(1, 0));
    StrictTransform st = strict_transform(deformed_cusp(), chart);
    // u1 = 0 leaves only the constant 1
    CHECK(exceptional_locus_values(st, 0) == parse("1", {}));
}

}
