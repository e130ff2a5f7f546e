#include "mixedtoric/homogeneity.hpp"

#include <cmath>
#include <numeric>
#include <random>

namespace mixedtoric {

std::optional<long> radial_degree(const MixedPolynomial& f, const WeightVector& P) {
    if (f.is_zero()) throw std::invalid_argument("radial_degree: zero polynomial");
    long d = P.radial(f.terms()[0].exps);
    for (const auto& t : f.terms())
        if (P.radial(t.exps) != d) return std::nullopt;
    if (d <= 0) return std::nullopt;  // Def. requires a positive radial degree
    return d;
}

std::optional<long> polar_degree(const MixedPolynomial& f, const WeightVector& Q) {
    if (f.is_zero()) throw std::invalid_argument("polar_degree: zero polynomial");
    long d = Q.polar(f.terms()[0].exps);
    for (const auto& t : f.terms())
        if (Q.polar(t.exps) != d) return std::nullopt;
    return d;
}

namespace {

MixedPolynomial weighted_euler_sum(const MixedPolynomial& f, const WeightVector& P,
                                   bool difference) {
    const int n = f.dim();
    MixedPolynomial acc(n);
    for (int j = 0; j < n; ++j) {
        MixedPolynomial zj = MixedPolynomial::variable(n, j, false);
        MixedPolynomial zbj = MixedPolynomial::variable(n, j, true);
        MixedPolynomial part = zj * f.wirtinger(j, false);
        MixedPolynomial anti = zbj * f.wirtinger(j, true);
        part = difference ? part - anti : part + anti;
        acc = acc + part.scaled(ExactComplex(P.entries[j]));
    }
    return acc;
}

}  // namespace

EulerReport verify_euler(const MixedPolynomial& f, const WeightVector& P) {
    EulerReport rep;
    auto dr = radial_degree(f, P);
    auto dp = polar_degree(f, P);
    if (dr) {
        rep.radial_checked = true;
        rep.radial_ok = weighted_euler_sum(f, P, false) == f.scaled(ExactComplex(*dr));
    } else {
        rep.note += "not radially homogeneous w.r.t. P; ";
    }
    if (dp) {
        rep.polar_checked = true;
        rep.polar_ok = weighted_euler_sum(f, P, true) == f.scaled(ExactComplex(*dp));
    } else {
        rep.note += "not polar homogeneous w.r.t. P; ";
    }
    if (dr && dp && (*dr + *dp) % 2 == 0 && (*dr - *dp) % 2 == 0) {
        rep.half_checked = true;
        rep.half_sum = (*dr + *dp) / 2;
        rep.half_diff = (*dr - *dp) / 2;
        const int n = f.dim();
        MixedPolynomial holo(n), anti(n);
        for (int j = 0; j < n; ++j) {
            holo = holo + (MixedPolynomial::variable(n, j, false) * f.wirtinger(j, false))
                              .scaled(ExactComplex(P.entries[j]));
            anti = anti + (MixedPolynomial::variable(n, j, true) * f.wirtinger(j, true))
                              .scaled(ExactComplex(P.entries[j]));
        }
        rep.half_ok = holo == f.scaled(ExactComplex(*rep.half_sum)) &&
                      anti == f.scaled(ExactComplex(*rep.half_diff));
    } else if (dr && dp) {
        rep.note += "half-degree identities skipped (d_r +- d_p odd); ";
    }
    return rep;
}

HomogeneityCertificate classify(const MixedPolynomial& f, const WeightVector& P) {
    if (f.is_zero()) throw std::invalid_argument("classify: zero polynomial");
    HomogeneityCertificate cert;
    auto dr = radial_degree(f, P);
    if (dr) cert.radial = HomogeneityCertificate::Radial{P, *dr};
    else {
        long d0 = P.radial(f.terms()[0].exps);
        bool constant = true;
        for (const auto& t : f.terms())
            if (P.radial(t.exps) != d0) constant = false;
        cert.radial_degenerate = constant && d0 == 0;
    }
    auto dp = polar_degree(f, P);
    if (dp) cert.polar = HomogeneityCertificate::Polar{P, *dp};
    cert.strongly_mixed = cert.radial.has_value() && cert.polar.has_value();
    cert.polar_positive = cert.strongly_mixed && cert.polar->degree > 0;
    return cert;
}

ActionReport check_action(const MixedPolynomial& f, const WeightVector& P,
                          int samples, unsigned long seed, double tol) {
    ActionReport rep;
    auto dr = radial_degree(f, P);
    auto dp = polar_degree(f, P);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> mod(0.5, 2.0), ang(0.0, 2.0 * M_PI);
    std::uniform_real_distribution<double> tdist(0.25, 4.0);
    const int n = f.dim();
    for (int s = 0; s < samples; ++s) {
        std::vector<std::complex<double>> z(n);
        for (int j = 0; j < n; ++j) z[j] = std::polar(mod(rng), ang(rng));
        const std::complex<double> fz = f.evaluate(z);
        const double scale = std::max(1.0, std::abs(fz));
        if (dr) {
            double t = tdist(rng);
            std::vector<std::complex<double>> tz(n);
            for (int j = 0; j < n; ++j) tz[j] = std::pow(t, double(P.entries[j])) * z[j];
            double err = std::abs(f.evaluate(tz) - std::pow(t, double(*dr)) * fz) /
                         (scale * std::max(1.0, std::pow(t, double(*dr))));
            rep.max_radial_error = std::max(rep.max_radial_error, err);
        }
        if (dp) {
            double theta = ang(rng);
            std::vector<std::complex<double>> qz(n);
            for (int j = 0; j < n; ++j)
                qz[j] = std::polar(1.0, P.entries[j] * theta) * z[j];
            double err = std::abs(f.evaluate(qz) -
                                  std::polar(1.0, double(*dp) * theta) * fz) / scale;
            rep.max_polar_error = std::max(rep.max_polar_error, err);
        }
        ++rep.samples;
    }
    rep.pass = rep.max_radial_error < tol && rep.max_polar_error < tol;
    return rep;
}

std::optional<WeightVector> find_radial_weight(const MixedPolynomial& f) {
    if (f.dim() != 2) throw std::invalid_argument("find_radial_weight: n == 2 only");
    if (f.is_zero()) return std::nullopt;
    // Collect distinct support points; P must annihilate all their differences.
    std::vector<std::vector<int>> pts;
    for (const auto& t : f.terms()) {
        auto p = t.exps.total();
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    if (pts.size() == 1) return WeightVector{1, 1};  // any strictly positive P works
    long dx0 = pts[1][0] - pts[0][0], dy0 = pts[1][1] - pts[0][1];
    for (std::size_t i = 2; i < pts.size(); ++i) {
        long dx = pts[i][0] - pts[0][0], dy = pts[i][1] - pts[0][1];
        if (dx0 * dy - dy0 * dx != 0) return std::nullopt;  // differences not collinear
    }
    long p1 = -dy0, p2 = dx0;
    if (p1 < 0 || p2 < 0) { p1 = -p1; p2 = -p2; }
    if (p1 <= 0 || p2 <= 0) return std::nullopt;  // normal not strictly positive
    long g = std::gcd(p1, p2);
    return WeightVector{p1 / g, p2 / g};
}

}  // namespace mixedtoric
