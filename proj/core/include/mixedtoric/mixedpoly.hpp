#ifndef MIXEDTORIC_MIXEDPOLY_HPP
#define MIXEDTORIC_MIXEDPOLY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mixedtoric {

using Rational = boost::multiprecision::cpp_rational;

/// Gaussian rational: exact coefficient arithmetic, no epsilon equality.
struct ExactComplex {
    Rational re{0};
    Rational im{0};

    ExactComplex() = default;
    ExactComplex(Rational r) : re(std::move(r)) {}
    ExactComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    ExactComplex(long r) : re(r) {}
    ExactComplex(long r, long i) : re(r), im(i) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    ExactComplex conj() const { return {re, -im}; }

    friend ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ExactComplex operator-(const ExactComplex& a, const ExactComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ExactComplex operator-(const ExactComplex& a) { return {-a.re, -a.im}; }
    friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
        return a.re == b.re && a.im == b.im;
    }

    std::complex<double> to_double() const {
        return {static_cast<double>(re), static_cast<double>(im)};
    }
};

/// (nu, mu): exponents of z^nu zbar^mu, both length n.
struct ExponentPair {
    std::vector<int> nu;
    std::vector<int> mu;

    ExponentPair() = default;
    ExponentPair(std::vector<int> n, std::vector<int> m)
        : nu(std::move(n)), mu(std::move(m)) {
        if (nu.size() != mu.size())
            throw std::invalid_argument("ExponentPair: nu/mu length mismatch");
    }

    std::size_t dim() const { return nu.size(); }

    std::vector<int> total() const {  // nu + mu, the support point
        std::vector<int> t(nu.size());
        for (std::size_t i = 0; i < nu.size(); ++i) t[i] = nu[i] + mu[i];
        return t;
    }

    friend bool operator==(const ExponentPair& a, const ExponentPair& b) {
        return a.nu == b.nu && a.mu == b.mu;
    }
};

// Canonical term order: graded-lex on nu+mu, ties broken by lex on nu.
bool term_order_less(const ExponentPair& a, const ExponentPair& b);

struct MixedTerm {
    ExactComplex coeff;
    ExponentPair exps;
};

/// Sparse mixed polynomial in canonical form: terms merged, sorted, nonzero.
class MixedPolynomial {
public:
    MixedPolynomial() = default;
    explicit MixedPolynomial(int n) : n_(n) {}
    MixedPolynomial(int n, std::vector<MixedTerm> terms);

    static MixedPolynomial constant(int n, ExactComplex c);
    static MixedPolynomial monomial(int n, ExactComplex c, ExponentPair e);
    static MixedPolynomial variable(int n, int j, bool conjugated = false);

    int dim() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<MixedTerm>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_monomial() const { return terms_.size() == 1; }

    /// True if no conjugated variable appears (mu == 0 everywhere).
    bool is_holomorphic() const;

    friend bool operator==(const MixedPolynomial& a, const MixedPolynomial& b);

    friend MixedPolynomial operator+(const MixedPolynomial& a, const MixedPolynomial& b);
    friend MixedPolynomial operator-(const MixedPolynomial& a, const MixedPolynomial& b);
    friend MixedPolynomial operator*(const MixedPolynomial& a, const MixedPolynomial& b);
    MixedPolynomial scaled(const ExactComplex& c) const;

    /// Wirtinger derivative d/dz_var (conjugated=false) or d/dzbar_var.
    MixedPolynomial wirtinger(int var, bool conjugated) const;

    /// Swap nu<->mu and conjugate coefficients.
    MixedPolynomial conjugate() const;

    /// Restriction f^I: set z_j = 0 for j not in `keep` (drops terms with
    /// nu_j + mu_j > 0 there). `keep[j]` says variable j survives.
    MixedPolynomial restrict_to(const std::vector<bool>& keep) const;

    /// Deterministic left-to-right summation in canonical term order.
    std::complex<double> evaluate(const std::vector<std::complex<double>>& p) const;

private:
    int n_ = 2;
    std::vector<MixedTerm> terms_;
    void normalize();
};

/// Canonical printer; `var` is the variable stem ("z" or "u").
std::string to_string(const MixedPolynomial& f, const std::string& var = "z");
std::string to_string(const ExactComplex& c);
std::string to_string(const Rational& r);

}  // namespace mixedtoric

#endif
