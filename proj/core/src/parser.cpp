#include "mixedtoric/parser.hpp"

#include <cctype>
#include <vector>

namespace mixedtoric {

namespace {

// Terms are collected with generic-dimension exponents (grown on demand),
// then rebuilt at the final ambient dimension.
struct RawPoly {
    std::vector<MixedTerm> terms;
    int max_index = 0;  // highest variable index seen (1-based)
};

void grow(ExponentPair& e, std::size_t n) {
    e.nu.resize(std::max(e.nu.size(), n), 0);
    e.mu.resize(std::max(e.mu.size(), n), 0);
}

class Parser {
public:
    Parser(const std::string& text, const std::map<std::string, ExactComplex>& bindings)
        : text_(text), bindings_(bindings) {}

    RawPoly run() {
        RawPoly p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    const std::string& text_;
    const std::map<std::string, ExactComplex>& bindings_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) { ++pos_; return true; }
        return false;
    }

    RawPoly parse_expr() {
        RawPoly acc;
        bool negate = eat('-');
        RawPoly t = parse_term();
        append(acc, t, negate);
        while (true) {
            char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            RawPoly next = parse_term();
            append(acc, next, c == '-');
        }
        return acc;
    }

    RawPoly parse_term() {
        RawPoly acc = parse_factor();
        while (eat('*')) {
            RawPoly f = parse_factor();
            acc = multiply(acc, f);
        }
        return acc;
    }

    RawPoly parse_factor() {
        RawPoly base = parse_atom();
        while (eat('^')) {
            if (peek() == '-') fail("negative exponent");
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
            unsigned long e = parse_uint();
            RawPoly pow;
            pow.terms.push_back({ExactComplex(1L), ExponentPair({}, {})});
            RawPoly b = base;
            for (unsigned long k = 0; k < e; ++k) pow = multiply(pow, b);
            base = std::move(pow);
        }
        return base;
    }

    RawPoly parse_atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            RawPoly inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
        // variable stems: 'z' for ambient coordinates, 'u' for chart coordinates
        if (c == '~' || c == 'z' || c == 'u') {
            bool conj = (c == '~');
            if (conj) {
                ++pos_;
                if (peek() != 'z' && peek() != 'u')
                    fail("expected 'z' or 'u' after '~'");
            }
            ++pos_;  // consume the stem
            if (!std::isdigit(static_cast<unsigned char>(peek()))) {
                // Not a variable after all: treat as identifier starting with z.
                pos_ -= conj ? 2 : 1;
                if (conj) fail("expected variable after '~'");
                return parse_param();
            }
            unsigned long j = parse_uint();
            if (j == 0) fail("variable index must be >= 1");
            RawPoly p;
            ExponentPair e({}, {});
            grow(e, j);
            (conj ? e.mu : e.nu)[j - 1] = 1;
            p.terms.push_back({ExactComplex(1L), std::move(e)});
            p.max_index = static_cast<int>(j);
            return p;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_param();
        fail("expected number, variable, parameter, or '('");
    }

    RawPoly parse_param() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        ExactComplex value;
        auto it = bindings_.find(name);
        if (it != bindings_.end()) {
            value = it->second;
        } else if (name == "i") {
            value = ExactComplex(Rational(0), Rational(1));
        } else {
            pos_ = start;
            fail("unbound parameter '" + name + "'");
        }
        RawPoly p;
        if (!value.is_zero()) p.terms.push_back({value, ExponentPair({}, {})});
        return p;
    }

    unsigned long parse_uint() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::stoul(text_.substr(start, pos_ - start));
    }

    RawPoly parse_number() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        Rational value;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            std::size_t frac_start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            std::string whole = text_.substr(start, frac_start - 1 - start);
            std::string frac = text_.substr(frac_start, pos_ - frac_start);
            Rational denom = 1;
            for (std::size_t k = 0; k < frac.size(); ++k) denom *= 10;
            value = Rational(boost::multiprecision::cpp_int(whole)) +
                    Rational(boost::multiprecision::cpp_int(frac.empty() ? "0" : frac)) / denom;
        } else if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            std::string num = text_.substr(start, pos_ - start);
            ++pos_;
            std::size_t den_start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            std::string den = text_.substr(den_start, pos_ - den_start);
            if (den == "0") fail("division by zero");
            value = Rational(boost::multiprecision::cpp_int(num)) /
                    Rational(boost::multiprecision::cpp_int(den));
        } else {
            value = Rational(boost::multiprecision::cpp_int(text_.substr(start, pos_ - start)));
        }
        RawPoly p;
        if (value != 0) p.terms.push_back({ExactComplex(value), ExponentPair({}, {})});
        return p;
    }

    static void append(RawPoly& acc, RawPoly& src, bool negate) {
        acc.max_index = std::max(acc.max_index, src.max_index);
        for (auto& t : src.terms) {
            if (negate) t.coeff = -t.coeff;
            acc.terms.push_back(std::move(t));
        }
    }

    static RawPoly multiply(const RawPoly& a, const RawPoly& b) {
        RawPoly out;
        out.max_index = std::max(a.max_index, b.max_index);
        for (const auto& s : a.terms)
            for (const auto& t : b.terms) {
                ExponentPair e = s.exps;
                grow(e, std::max(t.exps.dim(), e.dim()));
                for (std::size_t j = 0; j < t.exps.dim(); ++j) {
                    e.nu[j] += t.exps.nu[j];
                    e.mu[j] += t.exps.mu[j];
                }
                out.terms.push_back({s.coeff * t.coeff, std::move(e)});
            }
        return out;
    }
};

}  // namespace

MixedPolynomial parse(const std::string& text,
                      const std::map<std::string, ExactComplex>& bindings,
                      int min_dim) {
    Parser parser(text, bindings);
    RawPoly raw = parser.run();
    int n = std::max(raw.max_index, min_dim);
    for (auto& t : raw.terms) grow(t.exps, n);
    return MixedPolynomial(n, std::move(raw.terms));
}

Rational parse_rational(const std::string& text) {
    std::map<std::string, ExactComplex> none;
    MixedPolynomial p = parse(text, none, 1);
    if (p.is_zero()) return Rational(0);
    if (!p.is_monomial() || !p.terms()[0].coeff.is_real())
        throw std::invalid_argument("not a rational constant: " + text);
    const auto& t = p.terms()[0];
    for (std::size_t j = 0; j < t.exps.dim(); ++j)
        if (t.exps.nu[j] || t.exps.mu[j])
            throw std::invalid_argument("not a rational constant: " + text);
    return t.coeff.re;
}

}  // namespace mixedtoric
