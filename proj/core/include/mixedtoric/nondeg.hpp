#ifndef MIXEDTORIC_NONDEG_HPP
#define MIXEDTORIC_NONDEG_HPP

#include <optional>

#include "mixedtoric/newton.hpp"

namespace mixedtoric {

/// Point of the torus (C*)^n, double precision.
struct TorusPoint {
    std::vector<std::complex<double>> coords;
};

/// Oka criterion residual at a torus point: zero iff conj(grad_z f) aligns
/// with grad_zbar f under some unimodular alpha.
struct CriticalityResidual {
    TorusPoint point;
    std::vector<std::complex<double>> g;  // conj(df/dz_j)
    std::vector<std::complex<double>> h;  // df/dzbar_j
    std::optional<std::complex<double>> alpha_candidate;
    double residual = 0.0;
};

CriticalityResidual criticality_residual(const MixedPolynomial& f, const TorusPoint& p);

struct SearchConfig {
    unsigned long seed = 20240901;
    int starts = 10000;
    double tolerance = 1e-8;      // candidate threshold
    double polish_target = 1e-12;
    double zero_penalty = 1e3;    // weight of the |f|^2 penalty (polar-positive case)
    double box = 10.0;            // search box half-width
    int threads = 0;              // 0: MST_THREADS env or hardware concurrency
};

struct SearchCandidate {
    TorusPoint point;
    double residual = 0.0;
    double f_abs = 0.0;
};

struct SearchReport {
    int starts = 0;
    bool normalized = false;  // homogeneous normalization |z1| = 1, arg z1 = 0
    double best_residual = 0.0;
    TorusPoint best_point;
    std::vector<SearchCandidate> candidates;  // residual < tolerance, polished
};

/// Multistart local minimization of the criticality residual (n = 2),
/// deterministic for a fixed config.
SearchReport search_critical(const MixedPolynomial& f, const SearchConfig& cfg);

enum class FaceStatus {
    newton_nondegenerate,
    strongly_nondegenerate,
    degenerate,
    inconclusive,
};

std::string to_string(FaceStatus s);

struct FaceCertificate {
    Face face;
    MixedPolynomial face_poly;
    FaceStatus status = FaceStatus::inconclusive;
    bool symbolic = false;  // proof-grade (monomial/Euler) vs search evidence
    std::string evidence;
};

/// Single mixed monomial: strongly non-degenerate iff nu != mu; degenerate
/// (every torus point mixed critical) iff nu == mu.
FaceCertificate monomial_face_check(const MixedPolynomial& f_delta);

struct ZeroProbe {
    std::complex<double> z1{1.0, 0.0};  // fixed first coordinate
    double radius = 12.0;               // |z2| scan limit
    int grid = 4000;
};

/// Zero of f on the torus along the probe line z1 = const, |f| < 1e-10.
std::optional<TorusPoint> torus_zero_witness(const MixedPolynomial& f,
                                             const ZeroProbe& probe = {});

/// Per compact face (vertices and edges) of the Newton polyhedron.
std::vector<FaceCertificate> certify_faces(const MixedPolynomial& f,
                                           const NewtonPolyhedron& np,
                                           const SearchConfig& cfg);

int worker_count(int requested);

}  // namespace mixedtoric

#endif
