#include <doctest.h>

#include <numeric>

#include "mixedtoric/fan.hpp"
#include "mixedtoric/parser.hpp"

using namespace mixedtoric;

TEST_SUITE("fan") {

TEST_CASE("ray validation") {
    CHECK_THROWS(Ray(0, 0));
    CHECK_THROWS(Ray(-1, 2));
    CHECK_THROWS(Ray(2, 4));  // not primitive
    CHECK(Ray(1, 2).strictly_positive());
    CHECK_FALSE(Ray::e1().strictly_positive());
}

TEST_CASE("cone orientation") {
    CHECK_THROWS(Cone2(Ray(1, 2), Ray(1, 0)));  // det < 0
    CHECK_THROWS(Cone2(Ray(1, 2), Ray(1, 2)));
    Cone2 c(Ray(1, 1), Ray(1, 2));
    CHECK(c.regular());
    CHECK_FALSE(Cone2(Ray(1, 0), Ray(1, 2)).regular());
}

TEST_CASE("subdivision of the weighted edge fan") {
    Fan2 fan = subdivide({Ray::e1(), Ray(1, 2), Ray::e2()});
    REQUIRE(fan.rays.size() == 4);
    CHECK(fan.rays[0] == Ray(1, 0));
    CHECK(fan.rays[1] == Ray(1, 1));
    CHECK(fan.rays[2] == Ray(1, 2));
    CHECK(fan.rays[3] == Ray(0, 1));
    CHECK(fan.regular_simplicial());
    CHECK(fan.cones().size() == 3);
}

TEST_CASE("subdivision terminates on higher-determinant cones") {
    Fan2 fan = subdivide({Ray::e1(), Ray(2, 5), Ray::e2()});
    CHECK(fan.regular_simplicial());
    CHECK(fan.contains_ray(Ray(2, 5)));
    CHECK(fan.rays.front() == Ray::e1());
    CHECK(fan.rays.back() == Ray::e2());
    // minimality: dropping any inserted ray leaves a non-regular pair
    for (std::size_t i = 1; i + 1 < fan.rays.size(); ++i) {
        if (fan.rays[i] == Ray(2, 5)) continue;
        CHECK(det(fan.rays[i - 1], fan.rays[i + 1]) > 1);
    }
}

TEST_CASE("subdivision minimality across small inputs") {
    for (long x = 1; x <= 7; ++x)
        for (long y = 1; y <= 7; ++y) {
            if (std::gcd(x, y) != 1) continue;
            Fan2 fan = subdivide({Ray::e1(), Ray(x, y), Ray::e2()});
            CHECK(fan.regular_simplicial());
            for (std::size_t i = 1; i + 1 < fan.rays.size(); ++i) {
                if (fan.rays[i] == Ray(x, y)) continue;
                CHECK(det(fan.rays[i - 1], fan.rays[i + 1]) > 1);
            }
        }
}

TEST_CASE("subdivision input validation") {
    CHECK_THROWS(subdivide({Ray(1, 1), Ray(1, 2)}));  // missing axes
}

TEST_CASE("admissibility and convenience of the subdivision") {
    MixedPolynomial f =
        parse("z2^2*~z2 - 6*z1^2*z2*~z2 + 11*z1^2*~z1^2*z2 - 6*z1^4*~z1^2", {});
    NewtonPolyhedron np = newton_polyhedron(f);
    Fan2 fan = subdivide({Ray::e1(), Ray(1, 2), Ray::e2()});
    CHECK(is_admissible(fan, np));
    CHECK(is_convenient_subdivision(fan, f));
    Fan2 bare = subdivide({Ray::e1(), Ray::e2()});
    CHECK_FALSE(is_admissible(bare, np));
}

TEST_CASE("chart matrix columns are the cone rays") {
    Cone2 c(Ray(1, 1), Ray(1, 2));
    auto m = chart_matrix(c);
    CHECK(m[0][0] == 1);
    CHECK(m[0][1] == 1);
    CHECK(m[1][0] == 1);
    CHECK(m[1][1] == 2);
}

}
