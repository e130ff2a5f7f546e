#include <doctest.h>

#include <random>

#include "mixedtoric/nondeg.hpp"
#include "mixedtoric/parser.hpp"

using namespace mixedtoric;

namespace {

TorusPoint random_torus_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.2, 2.0), a(-3.14, 3.14);
    return {{std::polar(u(rng), a(rng)), std::polar(u(rng), a(rng))}};
}

MixedPolynomial deformed_cusp() {
    return parse("z2^2*~z2 - 6*z1^2*z2*~z2 + 11*z1^2*~z1^2*z2 - 6*z1^4*~z1^2",
                 {});
}

}  // namespace

TEST_SUITE("nondeg") {

TEST_CASE("residual is zero everywhere for the squared norm") {
    MixedPolynomial rho = parse("z1*~z1 + z2*~z2", {});
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        auto r = criticality_residual(rho, random_torus_point(rng));
        CHECK(r.residual < 1e-12);
    }
}

TEST_CASE("residual is one for a holomorphic coordinate") {
    MixedPolynomial f = parse("z1", {});
    auto r = criticality_residual(f, TorusPoint{{{1, 0}, {1, 0}}});
    CHECK(r.residual == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("residual is scale invariant") {
    MixedPolynomial f = deformed_cusp();
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        TorusPoint p = random_torus_point(rng);
        double r1 = criticality_residual(f, p).residual;
        MixedPolynomial g = f.scaled(ExactComplex(1000L));
        double r2 = criticality_residual(g, p).residual;
        CHECK(r1 == doctest::Approx(r2).epsilon(1e-9));
    }
}

TEST_CASE("residual rejects points off the torus") {
    CHECK_THROWS(criticality_residual(parse("z1", {}),
                                      TorusPoint{{{0, 0}, {1, 0}}}));
}

TEST_CASE("monomial certificates") {
    FaceCertificate strong = monomial_face_check(parse("z2^2*~z2", {}));
    CHECK(strong.status == FaceStatus::strongly_nondegenerate);
    CHECK(strong.symbolic);
    FaceCertificate degen = monomial_face_check(parse("z1*~z1", {}));
    CHECK(degen.status == FaceStatus::degenerate);
    CHECK(degen.symbolic);
    CHECK_THROWS(monomial_face_check(parse("z1 + z2", {})));
}

TEST_CASE("torus zero witness for the deformed cusp") {
    auto w = torus_zero_witness(deformed_cusp());
    REQUIRE(w.has_value());
    CHECK(std::abs(deformed_cusp().evaluate(w->coords)) < 1e-10);
    CHECK(std::abs(w->coords[0]) > 1e-8);
    CHECK(std::abs(w->coords[1]) > 1e-8);
}

TEST_CASE("no witness for a positive polynomial") {
    CHECK_FALSE(torus_zero_witness(parse("z1*~z1 + z2*~z2", {})).has_value());
}

TEST_CASE("search is deterministic for a fixed config") {
    SearchConfig cfg;
    cfg.starts = 200;
    MixedPolynomial f = deformed_cusp();
    SearchReport a = search_critical(f, cfg);
    SearchReport b = search_critical(f, cfg);
    CHECK(a.best_residual == b.best_residual);
    CHECK(a.candidates.size() == b.candidates.size());
    CHECK(a.starts == 200);
    CHECK(a.normalized);  // weighted homogeneous: one coordinate fixed
}

TEST_CASE("search finds the critical manifold of the squared norm") {
    SearchConfig cfg;
    cfg.starts = 50;
    SearchReport rep = search_critical(parse("z1*~z1 + z2*~z2", {}), cfg);
    CHECK(rep.best_residual < 1e-10);
}

TEST_CASE("face certification of the deformed cusp") {
    MixedPolynomial f = deformed_cusp();
    NewtonPolyhedron np = newton_polyhedron(f);
    SearchConfig cfg;
    cfg.starts = 400;
    auto certs = certify_faces(f, np, cfg);
    REQUIRE(certs.size() == 3);  // two vertices and the edge
    for (const auto& c : certs) {
        CHECK(c.status == FaceStatus::strongly_nondegenerate);
        if (c.face.dim == 0) CHECK(c.symbolic);
    }
}

TEST_CASE("face certification of the squared norm stays non-strong") {
    MixedPolynomial rho = parse("z1*~z1 + z2*~z2", {});
    NewtonPolyhedron np = newton_polyhedron(rho);
    SearchConfig cfg;
    cfg.starts = 100;
    auto certs = certify_faces(rho, np, cfg);
    bool any_strong = false, all_newton = true;
    for (const auto& c : certs) {
        if (c.status == FaceStatus::strongly_nondegenerate) any_strong = true;
        if (c.status != FaceStatus::newton_nondegenerate &&
            c.status != FaceStatus::strongly_nondegenerate)
            all_newton = false;
    }
    CHECK(all_newton);
    CHECK_FALSE(any_strong);  // every torus point is mixed critical
}

TEST_CASE("worker count respects the environment cap") {
    CHECK(worker_count(3) == 3);
    CHECK(worker_count(0) >= 1);
}

}
