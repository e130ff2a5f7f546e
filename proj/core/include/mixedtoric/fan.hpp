#ifndef MIXEDTORIC_FAN_HPP
#define MIXEDTORIC_FAN_HPP

#include <array>

#include "mixedtoric/newton.hpp"

namespace mixedtoric {

/// Primitive integer ray in the closed positive quadrant.
struct Ray {
    long x = 0, y = 0;

    Ray() = default;
    Ray(long px, long py);

    bool strictly_positive() const { return x > 0 && y > 0; }
    bool operator==(const Ray& o) const { return x == o.x && y == o.y; }

    static Ray e1() { return Ray(1, 0); }
    static Ray e2() { return Ray(0, 1); }
};

long det(const Ray& a, const Ray& b);

/// Ordered pair of rays with det(a, b) > 0.
struct Cone2 {
    Ray a, b;
    Cone2(Ray ra, Ray rb);
    bool regular() const { return det(a, b) == 1; }
};

/// Counterclockwise fan of rays from E1 to E2 with the cones between them.
struct Fan2 {
    std::vector<Ray> rays;

    bool regular_simplicial() const;
    std::vector<Cone2> cones() const;
    bool contains_ray(const Ray& r) const;
};

/// Minimal regular simplicial refinement containing all input rays
/// (Hirzebruch-Jung insertion between each adjacent pair).
Fan2 subdivide(std::vector<Ray> rays);

/// The fan refines the dual Newton diagram: every dual ray is a fan ray.
bool is_admissible(const Fan2& fan, const NewtonPolyhedron& np);

/// Definition of a convenient subdivision, specialized to n = 2:
/// for each I with f^I != 0, the complementary axis cone is in the fan.
bool is_convenient_subdivision(const Fan2& fan, const MixedPolynomial& f);

/// Columns are the cone's rays in order; determinant 1.
std::array<std::array<long, 2>, 2> chart_matrix(const Cone2& c);

}  // namespace mixedtoric

#endif
