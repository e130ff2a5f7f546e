#include "mixedtoric/newton.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace mixedtoric {

namespace {

long cross(const std::vector<int>& o, const std::vector<int>& a, const std::vector<int>& b) {
    return long(a[0] - o[0]) * long(b[1] - o[1]) - long(a[1] - o[1]) * long(b[0] - o[0]);
}

}  // namespace

NewtonPolyhedron newton_polyhedron(const MixedPolynomial& f) {
    if (f.dim() != 2) throw std::invalid_argument("newton_polyhedron: n == 2 only");
    if (f.is_zero()) throw std::invalid_argument("newton_polyhedron: zero polynomial");

    NewtonPolyhedron np;
    std::map<std::vector<int>, std::vector<ExponentPair>> by_point;
    for (const auto& t : f.terms()) by_point[t.exps.total()].push_back(t.exps);
    for (auto& [p, ws] : by_point) np.support.push_back({p, std::move(ws)});

    // Lower hull (monotone chain) of the support points, sorted by (x, y).
    std::vector<std::vector<int>> pts;
    for (const auto& s : np.support) pts.push_back(s.point);
    std::sort(pts.begin(), pts.end());
    std::vector<std::vector<int>> lower;
    for (const auto& p : pts) {
        while (lower.size() >= 2 &&
               cross(lower[lower.size() - 2], lower[lower.size() - 1], p) <= 0)
            lower.pop_back();
        lower.push_back(p);
    }
    // Compact faces of Gamma_+ are the strictly decreasing part of the lower
    // hull (edges with strictly positive inner normal); trailing edges with
    // dy >= 0 bound non-compact faces.
    std::vector<std::vector<int>> chain;
    chain.push_back(lower[0]);
    for (std::size_t i = 1; i < lower.size(); ++i) {
        if (lower[i][1] < chain.back()[1]) chain.push_back(lower[i]);
    }
    np.hull_vertices = chain;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        long dx = chain[i + 1][0] - chain[i][0];
        long dy = chain[i + 1][1] - chain[i][1];  // dx > 0, dy < 0
        long p1 = -dy, p2 = dx;
        long g = std::gcd(p1, p2);
        np.compact_edges.push_back(
            {chain[i], chain[i + 1], WeightVector{p1 / g, p2 / g}});
    }
    return np;
}

Face face(const MixedPolynomial& f, const WeightVector& P) {
    if (f.is_zero()) throw std::invalid_argument("face: zero polynomial");
    for (long p : P.entries)
        if (p < 0) throw std::invalid_argument("face: weight entries must be >= 0");
    Face fc;
    fc.normal = P;
    bool first = true;
    std::map<std::vector<int>, bool> seen;
    for (const auto& t : f.terms()) {
        long v = P.radial(t.exps);
        if (first || v < fc.d) {
            fc.d = v;
            fc.points.clear();
            seen.clear();
            first = false;
        }
        if (v == fc.d) {
            auto pt = t.exps.total();
            if (!seen.count(pt)) {
                seen[pt] = true;
                fc.points.push_back(pt);
            }
        }
    }
    std::sort(fc.points.begin(), fc.points.end());
    fc.dim = fc.points.size() > 1 ? 1 : 0;
    return fc;
}

MixedPolynomial face_function(const MixedPolynomial& f, const WeightVector& P) {
    if (!P.strictly_positive())
        throw std::invalid_argument("face_function: P must be strictly positive");
    Face fc = face(f, P);
    std::vector<MixedTerm> ts;
    for (const auto& t : f.terms())
        if (P.radial(t.exps) == fc.d) ts.push_back(t);
    return MixedPolynomial(f.dim(), std::move(ts));
}

ConvenienceReport is_convenient(const MixedPolynomial& f) {
    const int n = f.dim();
    ConvenienceReport rep;
    rep.convenient = true;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<bool> keep(n, false);
        std::vector<int> subset;
        for (int j = 0; j < n; ++j)
            if (mask & (1u << j)) { keep[j] = true; subset.push_back(j + 1); }
        bool nonzero = !f.restrict_to(keep).is_zero();
        if (!nonzero) rep.convenient = false;
        rep.entries.push_back({subset, nonzero});
    }
    return rep;
}

std::vector<WeightVector> dual_diagram(const NewtonPolyhedron& np) {
    std::vector<WeightVector> rays;
    rays.push_back(WeightVector{1, 0});
    // Edge normals come out ordered by increasing slope since hull edges are
    // scanned left to right with decreasing steepness.
    std::vector<WeightVector> normals;
    for (const auto& e : np.compact_edges) normals.push_back(e.normal);
    std::sort(normals.begin(), normals.end(), [](const WeightVector& a, const WeightVector& b) {
        return a.entries[1] * b.entries[0] < b.entries[1] * a.entries[0];
    });
    for (auto& nv : normals) rays.push_back(std::move(nv));
    rays.push_back(WeightVector{0, 1});
    return rays;
}

}  // namespace mixedtoric
