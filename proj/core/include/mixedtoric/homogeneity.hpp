#ifndef MIXEDTORIC_HOMOGENEITY_HPP
#define MIXEDTORIC_HOMOGENEITY_HPP

#include <optional>

#include "mixedtoric/mixedpoly.hpp"

namespace mixedtoric {

/// Integer covector P acting on exponent vectors.
struct WeightVector {
    std::vector<long> entries;

    WeightVector() = default;
    WeightVector(std::initializer_list<long> e) : entries(e) { check(); }
    explicit WeightVector(std::vector<long> e) : entries(std::move(e)) { check(); }

    std::size_t dim() const { return entries.size(); }
    bool strictly_positive() const {
        for (long p : entries)
            if (p <= 0) return false;
        return true;
    }
    long apply(const std::vector<int>& v) const {
        long s = 0;
        for (std::size_t i = 0; i < entries.size(); ++i) s += entries[i] * v[i];
        return s;
    }
    long radial(const ExponentPair& e) const { return apply(e.total()); }
    long polar(const ExponentPair& e) const {
        long s = 0;
        for (std::size_t i = 0; i < entries.size(); ++i)
            s += entries[i] * (e.nu[i] - e.mu[i]);
        return s;
    }

    friend bool operator==(const WeightVector& a, const WeightVector& b) {
        return a.entries == b.entries;
    }

private:
    void check() const {
        bool all_zero = true;
        for (long p : entries)
            if (p != 0) all_zero = false;
        if (entries.empty() || all_zero)
            throw std::invalid_argument("WeightVector: zero vector");
    }
};

struct HomogeneityCertificate {
    struct Radial { WeightVector weight; long degree; };
    struct Polar { WeightVector weight; long degree; };
    std::optional<Radial> radial;
    std::optional<Polar> polar;
    bool strongly_mixed = false;
    bool polar_positive = false;
    bool radial_degenerate = false;  // P(nu+mu) constant but == 0
};

/// d_r iff P(nu+mu) is constant (> 0) over the terms of f.
std::optional<long> radial_degree(const MixedPolynomial& f, const WeightVector& P);

/// d_p iff P(nu-mu) is constant over the terms of f (may be <= 0).
std::optional<long> polar_degree(const MixedPolynomial& f, const WeightVector& Q);

struct EulerReport {
    bool radial_checked = false, radial_ok = false;
    bool polar_checked = false, polar_ok = false;
    bool half_checked = false, half_ok = false;  // the (d_r +- d_p)/2 identities
    std::optional<long> half_sum, half_diff;     // (d_r+d_p)/2, (d_r-d_p)/2
    std::string note;
};

/// Exact symbolic verification of the Euler identities
///   sum p_j (z_j df/dz_j + zbar_j df/dzbar_j) = d_r f
///   sum p_j (z_j df/dz_j - zbar_j df/dzbar_j) = d_p f
/// plus the half-degree identities when d_r +- d_p are both even.
EulerReport verify_euler(const MixedPolynomial& f, const WeightVector& P);

HomogeneityCertificate classify(const MixedPolynomial& f, const WeightVector& P);

struct ActionReport {
    int samples = 0;
    double max_radial_error = 0.0;  // |f(t o z) - t^dr f(z)| relative
    double max_polar_error = 0.0;   // |f(theta o z) - e^{i dp theta} f(z)| relative
    bool pass = false;
};

/// Numeric spot check of the scaling actions at `samples` random torus points.
ActionReport check_action(const MixedPolynomial& f, const WeightVector& P,
                          int samples = 100, unsigned long seed = 1,
                          double tol = 1e-9);

/// n = 2 only: the primitive strictly positive weight making f radially
/// homogeneous, if one exists (unique when the support is not a point).
std::optional<WeightVector> find_radial_weight(const MixedPolynomial& f);

}  // namespace mixedtoric

#endif
