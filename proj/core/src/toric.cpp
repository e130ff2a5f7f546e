#include "mixedtoric/toric.hpp"

namespace mixedtoric {

ChartMap::ChartMap(Ray c1, Ray c2) : col1(c1), col2(c2) {
    long d = det(col1, col2);
    if (d != 1 && d != -1)
        throw std::invalid_argument("ChartMap: columns must be unimodular");
}

std::vector<std::complex<double>> ChartMap::apply(
    const std::vector<std::complex<double>>& u) const {
    if (u.size() != 2) throw std::invalid_argument("ChartMap::apply: need 2 coordinates");
    auto ipow = [](std::complex<double> base, long e) {
        std::complex<double> r = 1.0;
        for (long k = 0; k < e; ++k) r *= base;
        return r;
    };
    return {ipow(u[0], col1.x) * ipow(u[1], col2.x),
            ipow(u[0], col1.y) * ipow(u[1], col2.y)};
}

MixedPolynomial pullback(const MixedPolynomial& f, const ChartMap& chart) {
    if (f.dim() != 2) throw std::invalid_argument("pullback: n == 2 only");
    std::vector<MixedTerm> ts;
    const long p1[2] = {chart.col1.x, chart.col1.y};
    const long p2[2] = {chart.col2.x, chart.col2.y};
    for (const auto& t : f.terms()) {
        // z^nu zbar^mu -> u_i^{P_i(nu)} ubar_i^{P_i(mu)}
        std::vector<int> nu(2), mu(2);
        nu[0] = static_cast<int>(p1[0] * t.exps.nu[0] + p1[1] * t.exps.nu[1]);
        nu[1] = static_cast<int>(p2[0] * t.exps.nu[0] + p2[1] * t.exps.nu[1]);
        mu[0] = static_cast<int>(p1[0] * t.exps.mu[0] + p1[1] * t.exps.mu[1]);
        mu[1] = static_cast<int>(p2[0] * t.exps.mu[0] + p2[1] * t.exps.mu[1]);
        ts.push_back({t.coeff, ExponentPair(std::move(nu), std::move(mu))});
    }
    return MixedPolynomial(2, std::move(ts));
}

StrictTransform strict_transform(const MixedPolynomial& f, const ChartMap& chart) {
    MixedPolynomial pb = pullback(f, chart);
    StrictTransform st;
    if (pb.is_zero()) {
        st.reduced = pb;
        return st;
    }
    for (int i = 0; i < 2; ++i) {
        int mn = pb.terms()[0].exps.nu[i], mm = pb.terms()[0].exps.mu[i];
        for (const auto& t : pb.terms()) {
            mn = std::min(mn, t.exps.nu[i]);
            mm = std::min(mm, t.exps.mu[i]);
        }
        st.exceptional_nu[i] = mn;
        st.exceptional_mu[i] = mm;
    }
    std::vector<MixedTerm> ts;
    for (const auto& t : pb.terms()) {
        MixedTerm r = t;
        for (int i = 0; i < 2; ++i) {
            r.exps.nu[i] -= st.exceptional_nu[i];
            r.exps.mu[i] -= st.exceptional_mu[i];
        }
        ts.push_back(std::move(r));
    }
    st.reduced = MixedPolynomial(2, std::move(ts));
    return st;
}

MixedPolynomial exceptional_locus_values(const StrictTransform& st, int axis) {
    if (axis < 0 || axis > 1)
        throw std::invalid_argument("exceptional_locus_values: axis must be 0 or 1");
    std::vector<bool> keep(2, true);
    keep[axis] = false;
    return st.reduced.restrict_to(keep);
}

}  // namespace mixedtoric
