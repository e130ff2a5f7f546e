#include "mixedtoric/fan.hpp"

#include <algorithm>
#include <numeric>

namespace mixedtoric {

Ray::Ray(long px, long py) : x(px), y(py) {
    if (x < 0 || y < 0 || (x == 0 && y == 0))
        throw std::invalid_argument("Ray: must be nonzero with non-negative entries");
    long g = std::gcd(x, y);
    if (g != 1) throw std::invalid_argument("Ray: not primitive");
}

long det(const Ray& a, const Ray& b) { return a.x * b.y - a.y * b.x; }

Cone2::Cone2(Ray ra, Ray rb) : a(ra), b(rb) {
    if (det(a, b) <= 0) throw std::invalid_argument("Cone2: det(a,b) must be > 0");
}

bool Fan2::regular_simplicial() const {
    for (std::size_t i = 0; i + 1 < rays.size(); ++i)
        if (det(rays[i], rays[i + 1]) != 1) return false;
    return true;
}

std::vector<Cone2> Fan2::cones() const {
    std::vector<Cone2> cs;
    for (std::size_t i = 0; i + 1 < rays.size(); ++i)
        cs.emplace_back(rays[i], rays[i + 1]);
    return cs;
}

bool Fan2::contains_ray(const Ray& r) const {
    return std::find(rays.begin(), rays.end(), r) != rays.end();
}

namespace {

// Hirzebruch-Jung step: the primitive ray c strictly inside Cone(a,b) with
// det(a,c) = 1 and det(c,b) minimal (in [1, det(a,b)]).
Ray hj_neighbor(const Ray& a, const Ray& b) {
    const long d = det(a, b);
    // Solve a.x * c.y - a.y * c.x = 1 by extended gcd; gcd(a.x, a.y) = 1.
    long x0 = 0, y0 = 0;  // base solution (c.x, c.y)
    {
        // extended gcd for a.x * v - a.y * u = 1
        long r0 = a.x, r1 = a.y, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
        while (r1 != 0) {
            long q = r0 / r1;
            std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
            std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
            std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
        }
        // r0 == 1 == a.x*s0 + a.y*t0; pick c = (-t0, s0).
        x0 = -t0;
        y0 = s0;
    }
    // General solution c = (x0, y0) + t*(a.x, a.y); want det(c,b) in [1, d].
    long base = x0 * b.y - y0 * b.x;  // det(c0, b)
    // det(c,b) = base + t*d; choose t so base + t*d in [1, d].
    long t = -(base - 1) / d;
    while (base + t * d < 1) ++t;
    while (base + t * d > d) --t;
    return Ray(x0 + t * a.x, y0 + t * a.y);
}

bool slope_less(const Ray& a, const Ray& b) {
    return a.y * b.x < b.y * a.x;  // y/x increasing, E2 = (0,1) last
}

}  // namespace

Fan2 subdivide(std::vector<Ray> rays) {
    if (std::find(rays.begin(), rays.end(), Ray::e1()) == rays.end() ||
        std::find(rays.begin(), rays.end(), Ray::e2()) == rays.end())
        throw std::invalid_argument("subdivide: input must contain E1 and E2");
    std::sort(rays.begin(), rays.end(), slope_less);
    for (std::size_t i = 0; i + 1 < rays.size(); ++i)
        if (rays[i] == rays[i + 1])
            throw std::invalid_argument("subdivide: duplicate (parallel) rays");

    Fan2 fan;
    for (std::size_t i = 0; i + 1 < rays.size(); ++i) {
        fan.rays.push_back(rays[i]);
        Ray a = rays[i];
        const Ray b = rays[i + 1];
        while (det(a, b) > 1) {
            Ray c = hj_neighbor(a, b);
            fan.rays.push_back(c);
            a = c;
        }
    }
    fan.rays.push_back(rays.back());
    return fan;
}

bool is_admissible(const Fan2& fan, const NewtonPolyhedron& np) {
    for (const auto& P : dual_diagram(np))
        if (!fan.contains_ray(Ray(P.entries[0], P.entries[1]))) return false;
    return true;
}

bool is_convenient_subdivision(const Fan2& fan, const MixedPolynomial& f) {
    if (f.dim() != 2)
        throw std::invalid_argument("is_convenient_subdivision: n == 2 only");
    ConvenienceReport conv = is_convenient(f);
    for (const auto& entry : conv.entries) {
        if (!entry.nonzero) continue;  // vacuous for this I
        if (entry.subset.size() == 2) continue;  // I = {1,2}: trivial cone
        // I = {j}: complementary axis cone is Cone(E_{3-j}).
        const Ray required = entry.subset[0] == 1 ? Ray::e2() : Ray::e1();
        if (!fan.contains_ray(required)) return false;
    }
    return true;
}

std::array<std::array<long, 2>, 2> chart_matrix(const Cone2& c) {
    if (!c.regular()) throw std::invalid_argument("chart_matrix: cone is not regular");
    return {{{c.a.x, c.b.x}, {c.a.y, c.b.y}}};
}

}  // namespace mixedtoric
