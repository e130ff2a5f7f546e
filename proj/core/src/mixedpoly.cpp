#include "mixedtoric/mixedpoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace mixedtoric {

bool term_order_less(const ExponentPair& a, const ExponentPair& b) {
    const auto ta = a.total();
    const auto tb = b.total();
    long ga = 0, gb = 0;
    for (int v : ta) ga += v;
    for (int v : tb) gb += v;
    if (ga != gb) return ga < gb;
    if (ta != tb) return ta < tb;
    return a.nu < b.nu;
}

MixedPolynomial::MixedPolynomial(int n, std::vector<MixedTerm> terms)
    : n_(n), terms_(std::move(terms)) {
    for (const auto& t : terms_)
        if (static_cast<int>(t.exps.dim()) != n_)
            throw std::invalid_argument("MixedPolynomial: term dimension mismatch");
    normalize();
}

void MixedPolynomial::normalize() {
    std::map<std::pair<std::vector<int>, std::vector<int>>, ExactComplex> acc;
    for (auto& t : terms_) {
        auto key = std::make_pair(t.exps.nu, t.exps.mu);
        auto it = acc.find(key);
        if (it == acc.end())
            acc.emplace(std::move(key), t.coeff);
        else
            it->second = it->second + t.coeff;
    }
    terms_.clear();
    for (auto& [key, c] : acc) {
        if (c.is_zero()) continue;
        terms_.push_back({c, ExponentPair(key.first, key.second)});
    }
    std::sort(terms_.begin(), terms_.end(), [](const MixedTerm& a, const MixedTerm& b) {
        return term_order_less(a.exps, b.exps);
    });
}

MixedPolynomial MixedPolynomial::constant(int n, ExactComplex c) {
    std::vector<MixedTerm> ts;
    if (!c.is_zero())
        ts.push_back({std::move(c), ExponentPair(std::vector<int>(n, 0), std::vector<int>(n, 0))});
    return MixedPolynomial(n, std::move(ts));
}

MixedPolynomial MixedPolynomial::monomial(int n, ExactComplex c, ExponentPair e) {
    std::vector<MixedTerm> ts;
    if (!c.is_zero()) ts.push_back({std::move(c), std::move(e)});
    return MixedPolynomial(n, std::move(ts));
}

MixedPolynomial MixedPolynomial::variable(int n, int j, bool conjugated) {
    std::vector<int> nu(n, 0), mu(n, 0);
    (conjugated ? mu : nu)[j] = 1;
    return monomial(n, ExactComplex(1L), ExponentPair(std::move(nu), std::move(mu)));
}

bool MixedPolynomial::is_holomorphic() const {
    for (const auto& t : terms_)
        for (int m : t.exps.mu)
            if (m != 0) return false;
    return true;
}

bool operator==(const MixedPolynomial& a, const MixedPolynomial& b) {
    if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (!(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
        if (!(a.terms_[i].exps == b.terms_[i].exps)) return false;
    }
    return true;
}

MixedPolynomial operator+(const MixedPolynomial& a, const MixedPolynomial& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("add: dimension mismatch");
    std::vector<MixedTerm> ts = a.terms_;
    ts.insert(ts.end(), b.terms_.begin(), b.terms_.end());
    return MixedPolynomial(a.n_, std::move(ts));
}

MixedPolynomial operator-(const MixedPolynomial& a, const MixedPolynomial& b) {
    return a + b.scaled(ExactComplex(-1L));
}

MixedPolynomial operator*(const MixedPolynomial& a, const MixedPolynomial& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("mul: dimension mismatch");
    std::vector<MixedTerm> ts;
    ts.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) {
            std::vector<int> nu(a.n_), mu(a.n_);
            for (int i = 0; i < a.n_; ++i) {
                nu[i] = s.exps.nu[i] + t.exps.nu[i];
                mu[i] = s.exps.mu[i] + t.exps.mu[i];
            }
            ts.push_back({s.coeff * t.coeff, ExponentPair(std::move(nu), std::move(mu))});
        }
    return MixedPolynomial(a.n_, std::move(ts));
}

MixedPolynomial MixedPolynomial::scaled(const ExactComplex& c) const {
    std::vector<MixedTerm> ts;
    if (!c.is_zero()) {
        ts = terms_;
        for (auto& t : ts) t.coeff = t.coeff * c;
    }
    return MixedPolynomial(n_, std::move(ts));
}

MixedPolynomial MixedPolynomial::wirtinger(int var, bool conjugated) const {
    if (var < 0 || var >= n_) throw std::out_of_range("wirtinger: bad variable index");
    std::vector<MixedTerm> ts;
    for (const auto& t : terms_) {
        const auto& e = conjugated ? t.exps.mu : t.exps.nu;
        if (e[var] == 0) continue;
        MixedTerm d = t;
        d.coeff = d.coeff * ExactComplex(static_cast<long>(e[var]));
        (conjugated ? d.exps.mu : d.exps.nu)[var] -= 1;
        ts.push_back(std::move(d));
    }
    return MixedPolynomial(n_, std::move(ts));
}

MixedPolynomial MixedPolynomial::conjugate() const {
    std::vector<MixedTerm> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_)
        ts.push_back({t.coeff.conj(), ExponentPair(t.exps.mu, t.exps.nu)});
    return MixedPolynomial(n_, std::move(ts));
}

MixedPolynomial MixedPolynomial::restrict_to(const std::vector<bool>& keep) const {
    if (static_cast<int>(keep.size()) != n_)
        throw std::invalid_argument("restrict_to: mask dimension mismatch");
    std::vector<MixedTerm> ts;
    for (const auto& t : terms_) {
        bool drop = false;
        for (int j = 0; j < n_; ++j)
            if (!keep[j] && t.exps.nu[j] + t.exps.mu[j] > 0) { drop = true; break; }
        if (!drop) ts.push_back(t);
    }
    return MixedPolynomial(n_, std::move(ts));
}

std::complex<double> MixedPolynomial::evaluate(
    const std::vector<std::complex<double>>& p) const {
    if (static_cast<int>(p.size()) != n_)
        throw std::invalid_argument("evaluate: point dimension mismatch");
    std::complex<double> sum = 0.0;
    for (const auto& t : terms_) {
        std::complex<double> v = t.coeff.to_double();
        for (int j = 0; j < n_; ++j) {
            for (int e = 0; e < t.exps.nu[j]; ++e) v *= p[j];
            const std::complex<double> pc = std::conj(p[j]);
            for (int e = 0; e < t.exps.mu[j]; ++e) v *= pc;
        }
        sum += v;
    }
    return sum;
}

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(r);
    if (boost::multiprecision::denominator(r) != 1)
        os << "/" << boost::multiprecision::denominator(r);
    return os.str();
}

std::string to_string(const ExactComplex& c) {
    if (c.im == 0) return to_string(c.re);
    std::ostringstream os;
    if (c.re == 0) {
        if (c.im == 1) return "i";
        if (c.im == -1) return "-i";
        os << to_string(c.im) << "*i";
        return os.str();
    }
    os << "(" << to_string(c.re);
    if (c.im > 0) os << " + " << (c.im == 1 ? "i" : to_string(c.im) + "*i");
    else os << " - " << (c.im == -1 ? "i" : to_string(-c.im) + "*i");
    os << ")";
    return os.str();
}

namespace {

std::string monomial_string(const ExponentPair& e, const std::string& var) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < e.dim(); ++j) {
        if (e.nu[j] > 0) {
            if (!first) os << "*";
            os << var << (j + 1);
            if (e.nu[j] > 1) os << "^" << e.nu[j];
            first = false;
        }
        if (e.mu[j] > 0) {
            if (!first) os << "*";
            os << "~" << var << (j + 1);
            if (e.mu[j] > 1) os << "^" << e.mu[j];
            first = false;
        }
    }
    return os.str();
}

}  // namespace

std::string to_string(const MixedPolynomial& f, const std::string& var) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    const auto& ts = f.terms();
    for (std::size_t idx = 0; idx < ts.size(); ++idx) {
        const MixedTerm& t = ts[idx];
        ExactComplex c = t.coeff;
        bool negative = c.is_real() && c.re < 0;
        if (idx == 0) {
            if (negative) { os << "-"; c = -c; }
        } else {
            os << (negative ? " - " : " + ");
            if (negative) c = -c;
        }
        const std::string mono = monomial_string(t.exps, var);
        const bool unit = (c == ExactComplex(1L));
        if (mono.empty()) {
            os << to_string(c);
        } else if (unit) {
            os << mono;
        } else {
            os << to_string(c) << "*" << mono;
        }
    }
    return os.str();
}

}  // namespace mixedtoric
