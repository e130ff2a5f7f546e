#include "mixedtoric/nondeg.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

namespace mixedtoric {

int worker_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("MST_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

CriticalityResidual criticality_residual(const MixedPolynomial& f, const TorusPoint& p) {
    const int n = f.dim();
    if (static_cast<int>(p.coords.size()) != n)
        throw std::invalid_argument("criticality_residual: point dimension mismatch");
    for (const auto& c : p.coords)
        if (std::abs(c) == 0.0)
            throw std::invalid_argument("criticality_residual: point off the torus");

    CriticalityResidual res;
    res.point = p;
    res.g.resize(n);
    res.h.resize(n);
    for (int j = 0; j < n; ++j) {
        res.g[j] = std::conj(f.wirtinger(j, false).evaluate(p.coords));
        res.h[j] = f.wirtinger(j, true).evaluate(p.coords);
    }
    double ng = 0, nh = 0, mismatch = 0;
    std::complex<double> inner = 0;  // <g, h>
    for (int j = 0; j < n; ++j) {
        ng += std::norm(res.g[j]);
        nh += std::norm(res.h[j]);
        mismatch += std::abs(std::abs(res.g[j]) - std::abs(res.h[j]));
        inner += res.g[j] * std::conj(res.h[j]);
    }
    ng = std::sqrt(ng);
    nh = std::sqrt(nh);
    std::complex<double> alpha;
    if (std::abs(inner) > 0) {
        alpha = inner / std::abs(inner);
        res.alpha_candidate = alpha;
        double diff = 0;
        for (int j = 0; j < n; ++j) diff += std::norm(res.g[j] - alpha * res.h[j]);
        diff = std::sqrt(diff);
        res.residual = std::max(diff, mismatch);
    } else {
        // <g,h> = 0: no alignment possible unless both vanish.
        double diff = std::sqrt(ng * ng + nh * nh);
        res.residual = std::max(diff, mismatch);
    }
    const double denom = std::max(std::max(ng, nh), 1e-300);
    res.residual /= denom;
    return res;
}

namespace {

// Derivative-free Nelder-Mead on R^d; deterministic for a fixed start.
double nelder_mead(const std::function<double(const std::vector<double>&)>& fn,
                   std::vector<double>& x, double step, int max_iter, double ftol) {
    const std::size_t d = x.size();
    std::vector<std::vector<double>> simplex(d + 1, x);
    std::vector<double> fv(d + 1);
    for (std::size_t i = 0; i < d; ++i) simplex[i + 1][i] += step;
    for (std::size_t i = 0; i <= d; ++i) fv[i] = fn(simplex[i]);

    for (int it = 0; it < max_iter; ++it) {
        std::vector<std::size_t> order(d + 1);
        for (std::size_t i = 0; i <= d; ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
        if (fv[order[0]] < ftol) break;
        if (fv[order[d]] - fv[order[0]] <
            1e-14 * (std::abs(fv[order[0]]) + 1e-14))
            break;

        std::vector<double> centroid(d, 0.0);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t k = 0; k < d; ++k) centroid[k] += simplex[order[i]][k];
        for (double& c : centroid) c /= double(d);

        auto blend = [&](double t) {
            std::vector<double> p(d);
            for (std::size_t k = 0; k < d; ++k)
                p[k] = centroid[k] + t * (simplex[order[d]][k] - centroid[k]);
            return p;
        };

        std::vector<double> refl = blend(-1.0);
        double fr = fn(refl);
        if (fr < fv[order[0]]) {
            std::vector<double> exp_ = blend(-2.0);
            double fe = fn(exp_);
            if (fe < fr) { simplex[order[d]] = exp_; fv[order[d]] = fe; }
            else { simplex[order[d]] = refl; fv[order[d]] = fr; }
        } else if (fr < fv[order[d - 1]]) {
            simplex[order[d]] = refl;
            fv[order[d]] = fr;
        } else {
            std::vector<double> cont = blend(0.5);
            double fc = fn(cont);
            if (fc < fv[order[d]]) { simplex[order[d]] = cont; fv[order[d]] = fc; }
            else {
                // shrink toward best
                for (std::size_t i = 1; i <= d; ++i) {
                    for (std::size_t k = 0; k < d; ++k)
                        simplex[order[i]][k] =
                            0.5 * (simplex[order[i]][k] + simplex[order[0]][k]);
                    fv[order[i]] = fn(simplex[order[i]]);
                }
            }
        }
        x = simplex[order[0]];
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i <= d; ++i)
        if (fv[i] < fv[best]) best = i;
    x = simplex[best];
    return fv[best];
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct Objective {
    const MixedPolynomial* f;
    std::vector<MixedPolynomial> dz, dzb;  // precomputed Wirtinger derivatives
    bool normalized = false;
    bool penalize_zero = false;
    double penalty = 1e3;

    explicit Objective(const MixedPolynomial& poly) : f(&poly) {
        for (int j = 0; j < poly.dim(); ++j) {
            dz.push_back(poly.wirtinger(j, false));
            dzb.push_back(poly.wirtinger(j, true));
        }
    }

    TorusPoint decode(const std::vector<double>& x) const {
        TorusPoint p;
        if (normalized) {
            p.coords = {{1.0, 0.0}, {x[0], x[1]}};
        } else {
            p.coords = {{x[0], x[1]}, {x[2], x[3]}};
        }
        return p;
    }

    double residual_at(const TorusPoint& p) const {
        const int n = f->dim();
        std::vector<std::complex<double>> g(n), h(n);
        for (int j = 0; j < n; ++j) {
            g[j] = std::conj(dz[j].evaluate(p.coords));
            h[j] = dzb[j].evaluate(p.coords);
        }
        double ng = 0, nh = 0, mismatch = 0;
        std::complex<double> inner = 0;
        for (int j = 0; j < n; ++j) {
            ng += std::norm(g[j]);
            nh += std::norm(h[j]);
            mismatch += std::abs(std::abs(g[j]) - std::abs(h[j]));
            inner += g[j] * std::conj(h[j]);
        }
        ng = std::sqrt(ng);
        nh = std::sqrt(nh);
        double diff;
        if (std::abs(inner) > 0) {
            std::complex<double> alpha = inner / std::abs(inner);
            double s = 0;
            for (int j = 0; j < n; ++j) s += std::norm(g[j] - alpha * h[j]);
            diff = std::sqrt(s);
        } else {
            diff = std::sqrt(ng * ng + nh * nh);
        }
        return std::max(diff, mismatch) / std::max(std::max(ng, nh), 1e-300);
    }

    double operator()(const std::vector<double>& x) const {
        TorusPoint p = decode(x);
        for (const auto& c : p.coords)
            if (std::abs(c) < 1e-6) return 1e6;  // stay on the torus
        double obj = residual_at(p);
        if (penalize_zero) obj += penalty * std::norm(f->evaluate(p.coords));
        return obj;
    }
};

}  // namespace

SearchReport search_critical(const MixedPolynomial& f, const SearchConfig& cfg) {
    if (f.dim() != 2) throw std::invalid_argument("search_critical: n == 2 only");
    if (f.is_zero()) throw std::invalid_argument("search_critical: zero polynomial");

    Objective obj(f);
    auto weight = find_radial_weight(f);
    bool polar_positive = false;
    if (weight) {
        auto dp = polar_degree(f, *weight);
        if (dp) {
            // Fixing one coordinate this way is valid for radially+polar
            // homogeneous f: scale |z1| to 1, rotate arg z1 to 0.
            obj.normalized = true;
            polar_positive = *dp > 0;
        }
    }
    obj.penalize_zero = polar_positive;
    obj.penalty = cfg.zero_penalty;
    const std::size_t dims = obj.normalized ? 2 : 4;

    struct StartResult {
        double residual = 1e300;
        TorusPoint point;
        double f_abs = 0;
        bool candidate = false;
    };
    std::vector<StartResult> results(cfg.starts);

    auto run_range = [&](int lo, int hi) {
        for (int s = lo; s < hi; ++s) {
            std::mt19937_64 rng(splitmix64(cfg.seed * 0x10001ULL + std::uint64_t(s)));
            std::uniform_real_distribution<double> box(-cfg.box, cfg.box);
            std::vector<double> x(dims);
            for (auto& v : x) v = box(rng);
            double val = nelder_mead(obj, x, 0.5, 250, cfg.polish_target);
            TorusPoint p = obj.decode(x);
            bool on_torus = true;
            for (const auto& c : p.coords)
                if (std::abs(c) < 1e-6) on_torus = false;
            if (!on_torus) continue;
            double r = obj.residual_at(p);
            StartResult& out = results[s];
            out.residual = r;
            out.point = p;
            out.f_abs = std::abs(f.evaluate(p.coords));
            if (r < cfg.tolerance) {
                // polish without penalty so the residual itself converges
                Objective pol = obj;
                pol.penalize_zero = false;
                nelder_mead(pol, x, 1e-4, 400, cfg.polish_target);
                TorusPoint q = pol.decode(x);
                double rq = pol.residual_at(q);
                if (rq < out.residual) {
                    out.residual = rq;
                    out.point = q;
                    out.f_abs = std::abs(f.evaluate(q.coords));
                }
                out.candidate = out.residual < cfg.tolerance;
            }
            (void)val;
        }
    };

    const int workers = std::min(worker_count(cfg.threads), std::max(1, cfg.starts));
    if (workers <= 1) {
        run_range(0, cfg.starts);
    } else {
        std::vector<std::thread> pool;
        int chunk = (cfg.starts + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            int lo = w * chunk, hi = std::min(cfg.starts, lo + chunk);
            if (lo < hi) pool.emplace_back(run_range, lo, hi);
        }
        for (auto& t : pool) t.join();
    }

    SearchReport rep;
    rep.starts = cfg.starts;
    rep.normalized = obj.normalized;
    rep.best_residual = 1e300;
    for (int s = 0; s < cfg.starts; ++s) {  // deterministic merge by start index
        const auto& r = results[s];
        if (r.residual < rep.best_residual) {
            rep.best_residual = r.residual;
            rep.best_point = r.point;
        }
        if (r.candidate) rep.candidates.push_back({r.point, r.residual, r.f_abs});
    }
    return rep;
}

std::string to_string(FaceStatus s) {
    switch (s) {
        case FaceStatus::newton_nondegenerate: return "newton_nondegenerate";
        case FaceStatus::strongly_nondegenerate: return "strongly_nondegenerate";
        case FaceStatus::degenerate: return "degenerate";
        case FaceStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

FaceCertificate monomial_face_check(const MixedPolynomial& f_delta) {
    if (!f_delta.is_monomial())
        throw std::invalid_argument("monomial_face_check: expects a single mixed monomial");
    FaceCertificate cert;
    cert.face_poly = f_delta;
    cert.symbolic = true;
    const auto& e = f_delta.terms()[0].exps;
    if (e.nu == e.mu) {
        cert.status = FaceStatus::degenerate;
        cert.evidence = "nu == mu: real-valued monomial, every torus point mixed critical";
    } else {
        cert.status = FaceStatus::strongly_nondegenerate;
        cert.evidence = "nu != mu: |df/dz_j| != |df/dzbar_j| on the torus for some j";
    }
    return cert;
}

std::optional<TorusPoint> torus_zero_witness(const MixedPolynomial& f,
                                             const ZeroProbe& probe) {
    if (f.dim() != 2) throw std::invalid_argument("torus_zero_witness: n == 2 only");
    if (f.is_zero()) return std::nullopt;

    auto value = [&](std::complex<double> z2) {
        return f.evaluate({probe.z1, z2});
    };

    // Real-axis pass: bracket sign changes of Re along z2 = x with Im small,
    // then bisect. Covers the k > 2 real-cubic probes exactly.
    auto bisect_real = [&](double lo, double hi) -> std::optional<double> {
        double flo = value({lo, 0.0}).real();
        for (int it = 0; it < 200; ++it) {
            double mid = 0.5 * (lo + hi);
            double fm = value({mid, 0.0}).real();
            if ((fm < 0) == (flo < 0)) { lo = mid; flo = fm; }
            else hi = mid;
        }
        double x = 0.5 * (lo + hi);
        if (std::abs(value({x, 0.0})) < 1e-10 && std::abs(x) > 1e-8) return x;
        return std::nullopt;
    };
    const int N = probe.grid;
    double prev_x = -probe.radius;
    double prev_re = value({prev_x, 0.0}).real();
    double prev_im = value({prev_x, 0.0}).imag();
    for (int i = 1; i <= N; ++i) {
        double x = -probe.radius + 2.0 * probe.radius * i / N;
        auto v = value({x, 0.0});
        if (std::abs(prev_im) < 1e-12 && std::abs(v.imag()) < 1e-12 &&
            (prev_re <= 0) != (v.real() <= 0)) {
            if (auto root = bisect_real(prev_x, x))
                return TorusPoint{{probe.z1, {*root, 0.0}}};
        }
        prev_x = x;
        prev_re = v.real();
        prev_im = v.imag();
    }

    // Complex fallback: coarse polar grid plus Nelder-Mead polish on |f|^2.
    auto obj = [&](const std::vector<double>& x) {
        std::complex<double> z2(x[0], x[1]);
        if (std::abs(z2) < 1e-8) return 1e6;
        return std::norm(value(z2));
    };
    double best = 1e300;
    std::vector<double> best_x;
    for (int it = 0; it < 360; ++it) {
        for (int ir = 1; ir <= 40; ++ir) {
            double th = 2 * M_PI * it / 360.0;
            double r = probe.radius * ir / 40.0;
            std::vector<double> x = {r * std::cos(th), r * std::sin(th)};
            double v = obj(x);
            if (v < best) { best = v; best_x = x; }
        }
    }
    if (!best_x.empty()) {
        nelder_mead(obj, best_x, 0.05, 400, 1e-24);
        std::complex<double> z2(best_x[0], best_x[1]);
        if (std::abs(value(z2)) < 1e-10 && std::abs(z2) > 1e-8)
            return TorusPoint{{probe.z1, z2}};
    }
    return std::nullopt;
}

std::vector<FaceCertificate> certify_faces(const MixedPolynomial& f,
                                           const NewtonPolyhedron& np,
                                           const SearchConfig& cfg) {
    if (f.dim() != 2) throw std::invalid_argument("certify_faces: n == 2 only");
    std::vector<FaceCertificate> out;
    const auto rays = dual_diagram(np);  // E1, edge normals, E2

    // Vertex faces: pick the primitive sum of the two adjacent dual rays as a
    // strictly positive weight selecting exactly that vertex.
    std::vector<WeightVector> face_weights;
    for (std::size_t i = 0; i + 1 < rays.size(); ++i) {
        long p1 = rays[i].entries[0] + rays[i + 1].entries[0];
        long p2 = rays[i].entries[1] + rays[i + 1].entries[1];
        long g = std::gcd(p1, p2);
        face_weights.push_back(WeightVector{p1 / g, p2 / g});  // vertex i
        if (i + 2 < rays.size()) face_weights.push_back(rays[i + 1]);  // edge normal
    }

    for (const auto& P : face_weights) {
        FaceCertificate cert;
        cert.face = face(f, P);
        cert.face_poly = face_function(f, P);
        const MixedPolynomial& fd = cert.face_poly;

        if (fd.is_monomial()) {
            FaceCertificate mono = monomial_face_check(fd);
            cert.symbolic = true;
            if (mono.status == FaceStatus::degenerate) {
                // Monomials never vanish on the torus, so Newton
                // non-degeneracy over this face still holds.
                cert.status = FaceStatus::newton_nondegenerate;
                cert.evidence = "monomial with nu == mu: no torus zeros (Newton "
                                "non-degenerate) but every torus point critical";
            } else {
                cert.status = mono.status;
                cert.evidence = mono.evidence;
            }
            out.push_back(std::move(cert));
            continue;
        }

        SearchConfig face_cfg = cfg;
        face_cfg.starts = std::min(cfg.starts, 2000);
        SearchReport search = search_critical(fd, face_cfg);
        bool zero_critical = false, any_critical = !search.candidates.empty();
        for (const auto& c : search.candidates)
            if (c.f_abs < 1e-8) zero_critical = true;
        auto witness = torus_zero_witness(fd);
        auto dp = polar_degree(fd, P);

        std::ostringstream ev;
        ev << "search starts=" << search.starts
           << " best_residual=" << search.best_residual
           << " candidates=" << search.candidates.size()
           << (witness ? " torus-zero witness found" : " no torus-zero witness");

        if (zero_critical) {
            cert.status = FaceStatus::degenerate;
            ev << "; mixed critical point on the zero set";
        } else if (fd.is_holomorphic() && !any_critical) {
            // Holomorphic branch: 0 not a critical value (search-clean) gives
            // no critical points at all; two or more monomials give surjectivity.
            cert.status = FaceStatus::strongly_nondegenerate;
            ev << "; holomorphic, search-clean";
        } else if (dp && *dp != 0 && !any_critical) {
            if (witness) {
                cert.status = FaceStatus::strongly_nondegenerate;
                ev << "; polar degree " << *dp
                   << " != 0, search-clean on the zero set, nonempty zero set";
            } else {
                cert.status = FaceStatus::newton_nondegenerate;
                ev << "; polar degree nonzero, search-clean, surjectivity unestablished";
            }
        } else if ((!dp || *dp == 0)) {
            // No polar-homogeneity upgrade available (Prop. precondition
            // fails); report what the evidence supports.
            if (!witness && !zero_critical) {
                cert.status = FaceStatus::newton_nondegenerate;
                ev << "; empty zero set evidence, polar degree zero or absent: "
                      "no strongly-upgrade";
            } else {
                cert.status = FaceStatus::inconclusive;
                ev << "; polar degree zero or absent";
            }
        } else {
            cert.status = FaceStatus::inconclusive;
        }
        cert.evidence = ev.str();
        out.push_back(std::move(cert));
    }
    return out;
}

}  // namespace mixedtoric
