#ifndef MIXEDTORIC_NEWTON_HPP
#define MIXEDTORIC_NEWTON_HPP

#include "mixedtoric/homogeneity.hpp"
#include "mixedtoric/mixedpoly.hpp"

namespace mixedtoric {

/// One lattice point nu+mu with the exponent pairs mapping to it.
struct SupportPoint {
    std::vector<int> point;
    std::vector<ExponentPair> witnesses;
};

struct CompactEdge {
    std::vector<int> from, to;   // hull vertices, increasing first coordinate
    WeightVector normal;         // primitive, strictly positive inner normal
};

struct NewtonPolyhedron {
    std::vector<SupportPoint> support;
    std::vector<std::vector<int>> hull_vertices;  // ordered by first coordinate
    std::vector<CompactEdge> compact_edges;
};

struct Face {
    WeightVector normal;
    long d = 0;                          // d(P), minimum of P over the support
    std::vector<std::vector<int>> points;  // argmin support points
    int dim = 0;                         // affine dimension (0 or 1 for n = 2)
};

/// Exact integer lower-left hull of the support of f (n = 2).
NewtonPolyhedron newton_polyhedron(const MixedPolynomial& f);

/// Face Delta(P): minimum value and argmin support points.
Face face(const MixedPolynomial& f, const WeightVector& P);

/// Sub-sum of terms with nu+mu on Delta(P); P must be strictly positive.
MixedPolynomial face_function(const MixedPolynomial& f, const WeightVector& P);

struct ConvenienceReport {
    struct Entry {
        std::vector<int> subset;  // the index set I (1-based)
        bool nonzero = false;     // f^I != 0
    };
    std::vector<Entry> entries;
    bool convenient = false;
};

ConvenienceReport is_convenient(const MixedPolynomial& f);

/// E1, then compact-edge normals counterclockwise, then E2 (n = 2).
std::vector<WeightVector> dual_diagram(const NewtonPolyhedron& np);

}  // namespace mixedtoric

#endif
